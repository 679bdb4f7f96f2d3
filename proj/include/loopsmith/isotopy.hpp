#pragma once

// Isotopisms and autotopisms, principal isotopes, the squared-translation
// autotopism criteria, regular-bijection subgroups, and universality
// quantifiers over isotope families.

#include <optional>
#include <utility>
#include <vector>

#include "loopsmith/core.hpp"
#include "loopsmith/identities.hpp"

namespace loopsmith {

// (U, V, W) acting by xU ∘ yV = (x·y)W.
struct IsotopismTriple {
  Permutation U, V, W;

  bool operator==(const IsotopismTriple&) const = default;
};

inline IsotopismTriple identity_triple(int n) {
  return {identity_perm(n), identity_perm(n), identity_perm(n)};
}

inline bool is_isotopism(const LoopTable& G, const LoopTable& H,
                         const IsotopismTriple& t) {
  const int n = G.order();
  if (H.order() != n || t.U.degree() != n || t.V.degree() != n ||
      t.W.degree() != n)
    throw LoopError(Err::OrderMismatch, "is_isotopism: orders differ",
                    G.order(), H.order());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (H.mul(t.U(x), t.V(y)) != t.W(G.mul(x, y))) return false;
  return true;
}

inline bool is_autotopism(const LoopTable& L, const IsotopismTriple& t) {
  return is_isotopism(L, L, t);
}

// x∘y = (x/g)·(f\y). The triple (R_g, L_f, I) is then an isotopism from the
// source onto the result, whose identity element is f·g.
inline LoopTable principal_isotope(const LoopTable& G, Element f, Element g) {
  const int n = G.order();
  std::vector<int> cells(n * n);
  for (int x = 0; x < n; ++x) {
    const int xg = G.right_div(x, g);
    for (int y = 0; y < n; ++y) cells[x * n + y] = G.mul(xg, G.left_div(f, y));
  }
  return make_loop(n, std::move(cells));
}

inline LoopTable left_isotope(const LoopTable& G, Element g) {
  return principal_isotope(G, G.identity(), g);
}

inline LoopTable right_isotope(const LoopTable& G, Element f) {
  return principal_isotope(G, f, G.identity());
}

// Transfer of translations through the (R_g, L_f, I) isotopism: the isotope's
// translations satisfy R'_{xL_f} = R_g^{-1} R_x and L'_{yR_g} = L_f^{-1} L_y.
inline bool translation_transfer_check(const LoopTable& G, Element f,
                                       Element g) {
  const LoopTable H = principal_isotope(G, f, g);
  const Permutation rg_inv = inverse(right_translation(G, g));
  const Permutation lf_inv = inverse(left_translation(G, f));
  for (int x = 0; x < G.order(); ++x) {
    if (right_translation(H, G.mul(f, x)) !=
        compose(rg_inv, right_translation(G, x)))
      return false;
    if (left_translation(H, G.mul(x, g)) !=
        compose(lf_inv, left_translation(G, x)))
      return false;
  }
  return true;
}

// (L_x^2, I, L_x^2) is an autotopism for every x.
inline bool lc_autotopism_criterion(const LoopTable& L) {
  const int n = L.order();
  const Permutation id = identity_perm(n);
  for (int x = 0; x < n; ++x) {
    const Permutation lx = left_translation(L, x);
    const Permutation lx2 = compose(lx, lx);
    if (!is_autotopism(L, {lx2, id, lx2})) return false;
  }
  return true;
}

// (I, R_x^2, R_x^2) is an autotopism for every x.
inline bool rc_autotopism_criterion(const LoopTable& L) {
  const int n = L.order();
  const Permutation id = identity_perm(n);
  for (int x = 0; x < n; ++x) {
    const Permutation rx = right_translation(L, x);
    const Permutation rx2 = compose(rx, rx);
    if (!is_autotopism(L, {id, rx2, rx2})) return false;
  }
  return true;
}

// R_x^2 is mu-regular with adjoint L_x^2 for every x:
// yR_x^2 · z = y · zL_x^2.
inline bool c_mu_criterion(const LoopTable& L) {
  const int n = L.order();
  for (int x = 0; x < n; ++x) {
    const Permutation rx = right_translation(L, x);
    const Permutation rx2 = compose(rx, rx);
    const Permutation lx = left_translation(L, x);
    const Permutation lx2 = compose(lx, lx);
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (L.mul(rx2(y), z) != L.mul(y, lx2(z))) return false;
  }
  return true;
}

inline bool is_lambda_regular(const LoopTable& L, const Permutation& u) {
  const Permutation id = identity_perm(L.order());
  return is_autotopism(L, {u, id, u});
}

inline bool is_rho_regular(const LoopTable& L, const Permutation& v) {
  const Permutation id = identity_perm(L.order());
  return is_autotopism(L, {id, v, v});
}

// xU·y = x·yV with the adjoint forced as V = L_{eU} (set x = e), then
// verified on all pairs.
inline std::optional<Permutation> mu_regular_adjoint(const LoopTable& L,
                                                     const Permutation& u) {
  const int n = L.order();
  const Permutation v = left_translation(L, u(L.identity()));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (L.mul(u(x), y) != L.mul(x, v(y))) return std::nullopt;
  return v;
}

enum class RegularKind { Lambda, Rho, Mu };

inline const char* regular_kind_name(RegularKind k) {
  switch (k) {
    case RegularKind::Lambda: return "lambda";
    case RegularKind::Rho: return "rho";
    case RegularKind::Mu: return "mu";
  }
  return "?";
}

struct RegularSet {
  RegularKind kind;
  std::vector<Permutation> members;   // lexicographic by image
  std::vector<Permutation> adjoints;  // Mu only, index-aligned with members
};

// Exhaustive n! scan for the lambda-, rho-, or mu-regular bijections.
inline RegularSet regular_set(const LoopTable& L, RegularKind kind,
                              std::optional<int> cap = std::nullopt) {
  require_within_cap(L.order(), cap, "regular_set");
  RegularSet out{kind, {}, {}};
  for_each_permutation(L.order(), [&](const std::vector<int>& image) {
    Permutation p(image);
    switch (kind) {
      case RegularKind::Lambda:
        if (is_lambda_regular(L, p)) out.members.push_back(std::move(p));
        break;
      case RegularKind::Rho:
        if (is_rho_regular(L, p)) out.members.push_back(std::move(p));
        break;
      case RegularKind::Mu:
        if (auto adj = mu_regular_adjoint(L, p)) {
          out.members.push_back(std::move(p));
          out.adjoints.push_back(std::move(*adj));
        }
        break;
    }
    return true;
  });
  return out;
}

// Identity membership plus closure under composition and inverse.
inline bool is_permutation_subgroup(const std::vector<Permutation>& members) {
  if (members.empty()) return false;
  const int n = members.front().degree();
  auto member = [&](const Permutation& p) {
    for (const Permutation& m : members)
      if (m == p) return true;
    return false;
  };
  if (!member(identity_perm(n))) return false;
  for (const Permutation& a : members) {
    if (!member(inverse(a))) return false;
    for (const Permutation& b : members)
      if (!member(compose(a, b))) return false;
  }
  return true;
}

// Complete AUT(L). For each candidate U and each a = eV, the remaining
// components are forced: y = e gives W = U R_a, then x = e gives
// V = W L_{eU}^{-1}; the full equation is verified afterwards.
inline std::vector<IsotopismTriple> autotopism_group(
    const LoopTable& L, std::optional<int> cap = std::nullopt) {
  require_within_cap(L.order(), cap, "autotopism_group");
  const int n = L.order();
  std::vector<IsotopismTriple> out;
  for_each_permutation(n, [&](const std::vector<int>& image) {
    const Permutation u(image);
    const Permutation leu_inv = inverse(left_translation(L, u(L.identity())));
    for (int a = 0; a < n; ++a) {
      const Permutation w = compose(u, right_translation(L, a));
      const Permutation v = compose(w, leu_inv);
      IsotopismTriple t{u, v, w};
      if (is_autotopism(L, t)) out.push_back(std::move(t));
    }
    return true;
  });
  return out;
}

// Universality scans. Witnesses are the lexicographically first failing
// parameters; the full scan runs f before g.
inline std::optional<Element> left_universal_witness(const LoopTable& G,
                                                     IdentityId id) {
  for (int g = 0; g < G.order(); ++g)
    if (!satisfies(left_isotope(G, g), id)) return g;
  return std::nullopt;
}

inline std::optional<Element> right_universal_witness(const LoopTable& G,
                                                      IdentityId id) {
  for (int f = 0; f < G.order(); ++f)
    if (!satisfies(right_isotope(G, f), id)) return f;
  return std::nullopt;
}

inline std::optional<std::pair<Element, Element>> universal_witness(
    const LoopTable& G, IdentityId id) {
  for (int f = 0; f < G.order(); ++f)
    for (int g = 0; g < G.order(); ++g)
      if (!satisfies(principal_isotope(G, f, g), id))
        return std::make_pair(f, g);
  return std::nullopt;
}

inline bool is_left_universal(const LoopTable& G, IdentityId id) {
  return !left_universal_witness(G, id).has_value();
}

inline bool is_right_universal(const LoopTable& G, IdentityId id) {
  return !right_universal_witness(G, id).has_value();
}

// Quantifies over every f,g-principal isotope.
inline bool is_universal(const LoopTable& G, IdentityId id) {
  return !universal_witness(G, id).has_value();
}

}  // namespace loopsmith
