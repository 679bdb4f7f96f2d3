#include <catch2/catch_amalgamated.hpp>

#include "loopsmith/loopsmith.hpp"

#include "test_util.hpp"

using namespace loopsmith;

TEST_CASE("abelian group: every distinguished subset is everything") {
  const LoopTable L = lst::z4();
  for (const ElementSet& s :
       {left_nucleus(L), right_nucleus(L), middle_nucleus(L), nucleus(L),
        centrum(L), center(L)})
    CHECK(s.size() == 4);
  CHECK(is_centrum_square(L));
  CHECK(is_central_square(L));
}

TEST_CASE("identity element belongs to every nucleus, centrum, center") {
  for (const LoopTable& L : lst::loops_up_to(4)) {
    const Element e = L.identity();
    CHECK(left_nucleus(L).contains(e));
    CHECK(right_nucleus(L).contains(e));
    CHECK(middle_nucleus(L).contains(e));
    CHECK(nucleus(L).contains(e));
    CHECK(centrum(L).contains(e));
    CHECK(center(L).contains(e));
  }
}

TEST_CASE("S3: full nuclei, trivial centrum, not square-central") {
  const LoopTable s3 = symmetric_group_s3();
  CHECK(left_nucleus(s3).size() == 6);  // groups associate everywhere
  CHECK(right_nucleus(s3).size() == 6);
  CHECK(middle_nucleus(s3).size() == 6);
  CHECK(centrum(s3).elements() == std::vector<Element>{0});
  CHECK(center(s3).elements() == std::vector<Element>{0});
  // squares of the 3-cycles are 3-cycles, hence outside the center
  CHECK_FALSE(is_central_square(s3));
  CHECK_FALSE(is_centrum_square(s3));
}

TEST_CASE("Steiner loop subsets, computed by brute force") {
  // STS(7) gives the elementary abelian 2-group of order 8: all nuclei full
  const LoopTable s8 = steiner_loop(fano_plane());
  CHECK(left_nucleus(s8).size() == 8);
  CHECK(nucleus(s8).size() == 8);

  const LoopTable s10 = steiner_loop(affine_sts9());
  CHECK(nucleus(s10).elements() == std::vector<Element>{0});
  CHECK(centrum(s10).size() == 10);  // commutative
  CHECK(center(s10).elements() == std::vector<Element>{0});
  // exponent 2: x*x = e lies in centrum and center
  CHECK(is_centrum_square(s10));
  CHECK(is_central_square(s10));
}

TEST_CASE("nucleus equals the three-way intersection, recomputed independently") {
  auto loops = lst::loops_up_to(4);
  loops.push_back(steiner_loop(affine_sts9()));
  loops.push_back(symmetric_group_s3());
  for (const LoopTable& L : loops) {
    ElementSet byhand(L.order());
    for (int a = 0; a < L.order(); ++a)
      if (in_left_nucleus(L, a) && in_right_nucleus(L, a) &&
          in_middle_nucleus(L, a))
        byhand.add(a);
    REQUIRE(nucleus(L) == byhand);
    REQUIRE(nucleus(L) ==
            intersect(intersect(left_nucleus(L), right_nucleus(L)),
                      middle_nucleus(L)));
  }
}

TEST_CASE("each nucleus is a closed subloop containing the identity") {
  auto loops = lst::loops_up_to(5);
  loops.push_back(steiner_loop(affine_sts9()));
  for (const LoopTable& L : loops) {
    CHECK(is_subloop_closed(L, left_nucleus(L)));
    CHECK(is_subloop_closed(L, right_nucleus(L)));
    CHECK(is_subloop_closed(L, middle_nucleus(L)));
    CHECK(is_subloop_closed(L, nucleus(L)));
  }
}

TEST_CASE("commutative loops: centrum is everything and center is the nucleus") {
  for (const LoopTable& L : lst::loops_up_to(5)) {
    if (!satisfies(L, IdentityId::Commutative)) continue;
    CHECK(centrum(L).size() == L.order());
    CHECK(center(L) == nucleus(L));
  }
}

TEST_CASE("left nucleus agrees with the (L_a, I, L_a) autotopism scan") {
  for (const LoopTable& L : lst::loops_up_to(5)) {
    const ElementSet nl = left_nucleus(L);
    const Permutation id = identity_perm(L.order());
    for (int a = 0; a < L.order(); ++a) {
      const Permutation la = left_translation(L, a);
      REQUIRE(nl.contains(a) == is_autotopism(L, {la, id, la}));
    }
  }
}

TEST_CASE("cosets") {
  const LoopTable L = lst::z4();
  ElementSet S(4);
  S.add(0);
  S.add(2);
  CHECK(left_coset(L, L.identity(), S) == S);
  CHECK(right_coset(L, S, L.identity()) == S);
  CHECK(left_coset(L, 1, S).elements() == std::vector<Element>{1, 3});
  // g inside a subgroup: the coset is the subgroup again
  CHECK(left_coset(L, 2, S) == S);
}

TEST_CASE("element sets cap at 64 points") {
  CHECK(lst::error_kind([] { ElementSet s(65); (void)s; }) ==
        Err::OrderTooLarge);
}
