#include <catch2/catch_amalgamated.hpp>

#include "loopsmith/loopsmith.hpp"

#include "test_util.hpp"

using namespace loopsmith;

namespace {

IdentityMask full_mask() {
  IdentityMask m = 0;
  for (IdentityId id : all_identities()) m |= identity_bit(id);
  return m;
}

}  // namespace

TEST_CASE("groups satisfy everything except possibly commutativity") {
  CHECK(classify(lst::z4()) == full_mask());
  CHECK(classify(symmetric_group_s3()) ==
        (full_mask() & ~identity_bit(IdentityId::Commutative)));
  CHECK(classify(make_loop(1, {0})) == full_mask());
  CHECK(classify(cyclic_group(2)) == full_mask());
}

TEST_CASE("Steiner loop classifications, frozen from the identity scans") {
  // The Fano triples are the xor-triples of (Z2)^3, so this Steiner loop is
  // the elementary abelian group of order 8 and satisfies every tag.
  CHECK(classify(steiner_loop(fano_plane())) == full_mask());

  // STS(9): commutative, C (hence LC and RC), alternative and flexible, but
  // neither associative nor Bol/Moufang/extra.
  const IdentityMask expected =
      identity_bit(IdentityId::LcA) | identity_bit(IdentityId::LcB) |
      identity_bit(IdentityId::RcA) | identity_bit(IdentityId::RcB) |
      identity_bit(IdentityId::C) | identity_bit(IdentityId::LeftAlt) |
      identity_bit(IdentityId::RightAlt) | identity_bit(IdentityId::Alt) |
      identity_bit(IdentityId::Flexible) |
      identity_bit(IdentityId::Commutative);
  CHECK(classify(steiner_loop(affine_sts9())) == expected);
}

TEST_CASE("failing witnesses re-check against the equation") {
  const LoopTable s10 = steiner_loop(affine_sts9());
  CHECK_FALSE(failing_witness(symmetric_group_s3(), IdentityId::C));

  const auto w = failing_witness(s10, IdentityId::Associative);
  REQUIRE(w.has_value());
  CHECK_FALSE(identity_holds_at(s10, IdentityId::Associative, (*w)[0], (*w)[1],
                                (*w)[2]));

  // every failing witness re-checks false, across the small corpus
  for (const LoopTable& L : lst::loops_up_to(5))
    for (IdentityId id : all_identities())
      if (auto fw = failing_witness(L, id))
        REQUIRE_FALSE(
            identity_holds_at(L, id, (*fw)[0], (*fw)[1], (*fw)[2]));
}

TEST_CASE("witnesses are lexicographically first") {
  const LoopTable s10 = steiner_loop(affine_sts9());
  const auto w = failing_witness(s10, IdentityId::Associative);
  REQUIRE(w.has_value());
  bool earlier_violation = false;
  for (int x = 0; x < 10 && !earlier_violation; ++x)
    for (int y = 0; y < 10 && !earlier_violation; ++y)
      for (int z = 0; z < 10 && !earlier_violation; ++z) {
        if (std::array<Element, 3>{x, y, z} == *w) {
          x = y = z = 10;
          break;
        }
        if (!identity_holds_at(s10, IdentityId::Associative, x, y, z))
          earlier_violation = true;
      }
  CHECK_FALSE(earlier_violation);
}

TEST_CASE("the two LC forms and the two RC forms agree on all small loops") {
  for (const LoopTable& L : lst::loops_up_to(5)) {
    REQUIRE(satisfies(L, IdentityId::LcA) == satisfies(L, IdentityId::LcB));
    REQUIRE(satisfies(L, IdentityId::RcA) == satisfies(L, IdentityId::RcB));
  }
}

TEST_CASE("associativity implies every tag except commutativity") {
  for (const LoopTable& L : lst::loops_up_to(5)) {
    if (!satisfies(L, IdentityId::Associative)) continue;
    for (IdentityId id : all_identities()) {
      if (id == IdentityId::Commutative) continue;
      REQUIRE(satisfies(L, id));
    }
  }
}

TEST_CASE("alternative is exactly both one-sided alternative laws") {
  auto loops = lst::loops_up_to(5);
  loops.push_back(steiner_loop(affine_sts9()));
  for (const LoopTable& L : loops)
    REQUIRE(satisfies(L, IdentityId::Alt) ==
            (satisfies(L, IdentityId::LeftAlt) &&
             satisfies(L, IdentityId::RightAlt)));
}

TEST_CASE("duality oracle: RC on a loop is LC on its opposite") {
  auto loops = lst::loops_up_to(5);
  loops.push_back(steiner_loop(affine_sts9()));
  loops.push_back(symmetric_group_s3());
  for (const LoopTable& L : loops) {
    const LoopTable Op = opposite(L);
    REQUIRE(satisfies(L, IdentityId::RcA) == satisfies(Op, IdentityId::LcA));
    REQUIRE(satisfies(L, IdentityId::RcB) == satisfies(Op, IdentityId::LcB));
    REQUIRE(satisfies(L, IdentityId::RightBol) ==
            satisfies(Op, IdentityId::LeftBol));
    REQUIRE(satisfies(L, IdentityId::RightAlt) ==
            satisfies(Op, IdentityId::LeftAlt));
  }
}

TEST_CASE("order-5 sweep: no loop satisfies commutativity alone") {
  int count = 0;
  for (const LoopTable& L : all_loops_vec({5, true, std::nullopt}))
    if (classify(L) == identity_bit(IdentityId::Commutative)) ++count;
  CHECK(count == 0);
}

TEST_CASE("observed relationship: LC and RC together coincide with C at small orders") {
  // Regression observation, not a theorem: at n <= 5 both collapse to the
  // associative tables.
  for (const LoopTable& L : lst::loops_up_to(5))
    REQUIRE((satisfies(L, IdentityId::LcA) && satisfies(L, IdentityId::RcA)) ==
            satisfies(L, IdentityId::C));
}

TEST_CASE("identity names round-trip and arity is correct") {
  for (IdentityId id : all_identities()) {
    REQUIRE(identity_from_name(identity_name(id)) == id);
    REQUIRE((identity_arity(id) == 2 || identity_arity(id) == 3));
  }
  CHECK_FALSE(identity_from_name("nope").has_value());
  CHECK(identity_arity(IdentityId::Commutative) == 2);
  CHECK(identity_arity(IdentityId::Moufang) == 3);
}
