#include <catch2/catch_amalgamated.hpp>

#include "loopsmith/core.hpp"

#include "test_util.hpp"

using namespace loopsmith;

TEST_CASE("make_loop accepts Z4 and detects its identity") {
  const LoopTable L = make_loop(
      {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});
  REQUIRE(L.order() == 4);
  REQUIRE(L.identity() == 0);
  REQUIRE(L.mul(1, 2) == 3);
}

TEST_CASE("make_loop rejects bad tables") {
  CHECK(lst::error_kind([] { make_loop({{0, 1}, {1, 1}}); }) ==
        Err::NotLatinRow);
  // column 0 repeats while both rows are fine
  CHECK(lst::error_kind([] { make_loop({{0, 1}, {0, 1}}); }) ==
        Err::NotLatinColumn);
  // idempotent commutative quasigroup: no identity row at all
  CHECK(lst::error_kind([] {
          make_loop({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
        }) == Err::NoIdentity);
  CHECK(lst::error_kind([] { make_loop({{0, 7}, {1, 0}}); }) ==
        Err::BadSymbol);
  CHECK(lst::error_kind([] { make_loop({{0, 1}, {1, 0, 2}}); }) ==
        Err::ParseError);
}

TEST_CASE("identity does not need to be element 0") {
  // spec-style order-3 square; row 2 and column 2 are identity maps
  const LoopTable L = make_loop({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
  REQUIRE(L.identity() == 2);
  for (int x = 0; x < 3; ++x) {
    CHECK(L.mul(2, x) == x);
    CHECK(L.mul(x, 2) == x);
  }
}

TEST_CASE("divisions on Z4 and identity axioms") {
  const LoopTable L = lst::z4();
  CHECK(L.left_div(1, 0) == 3);  // 1 + 3 = 0 mod 4
  for (int y = 0; y < 4; ++y) {
    CHECK(L.left_div(L.identity(), y) == y);
    CHECK(L.right_div(y, L.identity()) == y);
    CHECK(L.mul(L.identity(), y) == y);
    CHECK(L.mul(y, L.identity()) == y);
  }
}

TEST_CASE("division axioms hold on every loop up to order 4") {
  for (const LoopTable& L : lst::loops_up_to(4))
    for (int x = 0; x < L.order(); ++x)
      for (int y = 0; y < L.order(); ++y) {
        REQUIRE(L.mul(x, L.left_div(x, y)) == y);
        REQUIRE(L.mul(L.right_div(y, x), x) == y);
      }
}

TEST_CASE("translations are table rows and columns") {
  const LoopTable L = lst::z4();
  const Permutation r1 = right_translation(L, 1);
  CHECK(r1.image() == std::vector<int>{1, 2, 3, 0});  // the cycle (0 1 2 3)
  CHECK(is_identity(left_translation(L, L.identity())));
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      CHECK(left_translation(L, x)(y) == L.mul(x, y));
      CHECK(right_translation(L, x)(y) == L.mul(y, x));
    }
    // Z4 is commutative, so the two translations coincide
    CHECK(left_translation(L, x) == right_translation(L, x));
  }
}

TEST_CASE("permutation composition is postfix: z(PQ) = (zP)Q") {
  const Permutation p{{1, 2, 0, 3}};
  const Permutation q{{3, 0, 2, 1}};
  const Permutation pq = compose(p, q);
  for (int z = 0; z < 4; ++z) REQUIRE(pq(z) == q(p(z)));
}

TEST_CASE("permutation group axioms") {
  const Permutation p{{2, 0, 3, 1}};
  CHECK(compose(p, inverse(p)) == identity_perm(4));
  CHECK(compose(inverse(p), p) == identity_perm(4));
  CHECK(inverse(identity_perm(4)) == identity_perm(4));

  const Permutation swap2{{1, 0}};
  CHECK(compose(swap2, swap2) == identity_perm(2));

  CHECK(lst::error_kind([&] { compose(p, swap2); }) == Err::OrderMismatch);
}

TEST_CASE("perm_order is the lcm of cycle lengths") {
  CHECK(perm_order(identity_perm(5)) == 1);
  CHECK(perm_order(Permutation{{1, 0, 2, 3, 4}}) == 2);
  CHECK(perm_order(Permutation{{1, 2, 0, 4, 3}}) == 6);
}

TEST_CASE("opposite loop transposes the table") {
  const LoopTable L = make_loop(
      {{0, 1, 2, 3, 4, 5},
       {1, 0, 3, 2, 5, 4},
       {2, 4, 0, 5, 1, 3},
       {3, 5, 1, 4, 0, 2},
       {4, 2, 5, 0, 3, 1},
       {5, 3, 4, 1, 2, 0}});
  const LoopTable Op = opposite(L);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) REQUIRE(Op.mul(x, y) == L.mul(y, x));
  CHECK(Op.identity() == L.identity());
}

TEST_CASE("relabel carries products through the bijection") {
  const LoopTable L = lst::z4();
  const Permutation sigma{{2, 0, 3, 1}};
  const LoopTable R = relabel(L, sigma);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      REQUIRE(R.mul(sigma(x), sigma(y)) == sigma(L.mul(x, y)));
  CHECK(R.identity() == sigma(L.identity()));
}
