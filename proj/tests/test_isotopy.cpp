#include <catch2/catch_amalgamated.hpp>

#include "loopsmith/loopsmith.hpp"

#include "test_util.hpp"

using namespace loopsmith;

TEST_CASE("identity triple is an isotopism; a hand-checked triple is not") {
  const LoopTable L = lst::z4();
  CHECK(is_isotopism(L, L, identity_triple(4)));
  CHECK(is_autotopism(L, identity_triple(4)));

  // U = V = W = (0 1): 0U·0V = 1+1 = 2 but (0·0)W = 1, so it fails
  const Permutation s{{1, 0, 3, 2}};
  CHECK_FALSE(is_autotopism(L, {s, s, s}));

  CHECK(lst::error_kind([&] {
          is_isotopism(L, cyclic_group(3), identity_triple(4));
        }) == Err::OrderMismatch);
}

TEST_CASE("principal isotopes come with their defining isotopism") {
  for (const LoopTable& G : lst::loops_up_to(4))
    for (int f = 0; f < G.order(); ++f)
      for (int g = 0; g < G.order(); ++g) {
        const LoopTable H = principal_isotope(G, f, g);
        // (R_g, L_f, I) carries G onto H
        REQUIRE(is_isotopism(
            G, H,
            {right_translation(G, g), left_translation(G, f),
             identity_perm(G.order())}));
        // identity of the isotope is f·g
        REQUIRE(H.identity() == G.mul(f, g));
      }
}

TEST_CASE("principal isotope at (e, e) is table-identical") {
  auto loops = lst::loops_up_to(4);
  loops.push_back(steiner_loop(affine_sts9()));
  for (const LoopTable& G : loops) {
    REQUIRE(principal_isotope(G, G.identity(), G.identity()) == G);
    REQUIRE(left_isotope(G, G.identity()) == G);
    REQUIRE(right_isotope(G, G.identity()) == G);
  }
}

TEST_CASE("left and right isotopes are the (e,g) and (f,e) cases") {
  const LoopTable G = steiner_loop(affine_sts9());
  for (int t = 0; t < G.order(); ++t) {
    CHECK(left_isotope(G, t) == principal_isotope(G, G.identity(), t));
    CHECK(right_isotope(G, t) == principal_isotope(G, t, G.identity()));
  }
}

TEST_CASE("Z4's (1,1)-isotope has identity 2 and stays cyclic") {
  const LoopTable H = principal_isotope(lst::z4(), 1, 1);
  CHECK(H.identity() == 2);
  CHECK(is_isomorphic(lst::z4(), H));
}

TEST_CASE("translation transfer identities") {
  const LoopTable z4 = lst::z4();
  for (int f = 0; f < 4; ++f)
    for (int g = 0; g < 4; ++g) CHECK(translation_transfer_check(z4, f, g));

  for (const LoopTable& G : lst::loops_up_to(4))
    for (int f = 0; f < G.order(); ++f)
      for (int g = 0; g < G.order(); ++g)
        REQUIRE(translation_transfer_check(G, f, g));
}

TEST_CASE("squared-translation criteria match the identity scans") {
  auto loops = lst::loops_up_to(5);
  loops.push_back(steiner_loop(affine_sts9()));
  loops.push_back(symmetric_group_s3());
  for (const LoopTable& L : loops) {
    REQUIRE(lc_autotopism_criterion(L) == satisfies(L, IdentityId::LcA));
    REQUIRE(rc_autotopism_criterion(L) == satisfies(L, IdentityId::RcA));
    REQUIRE(c_mu_criterion(L) == satisfies(L, IdentityId::C));
  }
}

TEST_CASE("LC-loop: squared left translations are lambda-regular") {
  const LoopTable s10 = steiner_loop(affine_sts9());  // nonassociative LC
  REQUIRE(satisfies(s10, IdentityId::LcA));
  for (int x = 0; x < s10.order(); ++x) {
    const Permutation lx = left_translation(s10, x);
    CHECK(is_lambda_regular(s10, compose(lx, lx)));
    const Permutation rx = right_translation(s10, x);
    CHECK(is_rho_regular(s10, compose(rx, rx)));
    // mu-regularity of R_x^2 with adjoint L_x^2
    const auto adj = mu_regular_adjoint(s10, compose(rx, rx));
    REQUIRE(adj.has_value());
    CHECK(*adj == compose(lx, lx));
  }
}

TEST_CASE("regular sets of cyclic groups are the n translation maps") {
  for (int n = 2; n <= 5; ++n) {
    const LoopTable zn = cyclic_group(n);
    for (RegularKind k :
         {RegularKind::Lambda, RegularKind::Rho, RegularKind::Mu}) {
      const RegularSet s = regular_set(zn, k);
      REQUIRE(static_cast<int>(s.members.size()) == n);
      CHECK(is_permutation_subgroup(s.members));
      bool has_identity = false;
      for (const auto& m : s.members) has_identity |= is_identity(m);
      CHECK(has_identity);
      if (k == RegularKind::Mu) {
        REQUIRE(s.adjoints.size() == s.members.size());
        for (size_t i = 0; i < s.members.size(); ++i)
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
              REQUIRE(zn.mul(s.members[i](x), y) ==
                      zn.mul(x, s.adjoints[i](y)));
      }
    }
  }
}

TEST_CASE("regular-set enumeration refuses orders past the cap") {
  const LoopTable s10 = steiner_loop(affine_sts9());
  CHECK(lst::error_kind([&] {
          regular_set(s10, RegularKind::Lambda);
        }) == Err::OrderTooLarge);
  CHECK(lst::error_kind([&] { autotopism_group(s10); }) ==
        Err::OrderTooLarge);
  // an explicit cap raises the limit
  CHECK_NOTHROW(regular_set(cyclic_group(5), RegularKind::Lambda, 5));
}

TEST_CASE("autotopism groups of small cyclic groups, brute-forced") {
  const auto a2 = autotopism_group(cyclic_group(2));
  CHECK(a2.size() == 4);
  CHECK(autotopism_group(cyclic_group(3)).size() == 18);
  CHECK(autotopism_group(cyclic_group(4)).size() == 32);

  bool has_identity_triple = false;
  for (const auto& t : a2)
    if (is_identity(t.U) && is_identity(t.V) && is_identity(t.W))
      has_identity_triple = true;
  CHECK(has_identity_triple);
}

TEST_CASE("autotopism group is closed under composition and inverse") {
  for (const LoopTable& L :
       {cyclic_group(3), cyclic_group(4), klein_four()}) {
    const auto aut = autotopism_group(L);
    auto member = [&](const IsotopismTriple& t) {
      for (const auto& u : aut)
        if (u == t) return true;
      return false;
    };
    for (const auto& a : aut) {
      REQUIRE(member({inverse(a.U), inverse(a.V), inverse(a.W)}));
      for (const auto& b : aut)
        REQUIRE(member(
            {compose(a.U, b.U), compose(a.V, b.V), compose(a.W, b.W)}));
    }
  }
}

TEST_CASE("every autotopism triple actually satisfies the equation") {
  for (const LoopTable& L : lst::loops_up_to(4))
    for (const auto& t : autotopism_group(L)) REQUIRE(is_autotopism(L, t));
}

TEST_CASE("universality of associativity in groups") {
  for (const LoopTable& G : {lst::z4(), symmetric_group_s3()}) {
    CHECK(is_universal(G, IdentityId::Associative));
    CHECK(is_left_universal(G, IdentityId::Associative));
    CHECK(is_right_universal(G, IdentityId::Associative));
  }
}

TEST_CASE("the STS(9) Steiner loop is left universal for LC but not universal for C") {
  const LoopTable s10 = steiner_loop(affine_sts9());
  CHECK(is_left_universal(s10, IdentityId::LcA));

  const auto w = universal_witness(s10, IdentityId::C);
  REQUIRE(w.has_value());
  CHECK(*w == std::make_pair(0, 1));  // lexicographically first failure
  CHECK_FALSE(satisfies(principal_isotope(s10, w->first, w->second),
                        IdentityId::C));
}

TEST_CASE("universality witnesses are lexicographically minimal") {
  const LoopTable s10 = steiner_loop(affine_sts9());
  const auto w = universal_witness(s10, IdentityId::C);
  REQUIRE(w.has_value());
  for (int f = 0; f <= w->first; ++f)
    for (int g = 0; (f < w->first) ? g < s10.order() : g < w->second; ++g)
      REQUIRE(satisfies(principal_isotope(s10, f, g), IdentityId::C));
}
