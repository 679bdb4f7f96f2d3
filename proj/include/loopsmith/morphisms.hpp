#pragma once

// Exact isomorphism search plus everything that quantifies it: the G-loop
// characterizations, nucleus-membership criteria for left/right isotopes,
// pseudo-automorphism companions, and the nucleus coset criterion.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "loopsmith/core.hpp"
#include "loopsmith/identities.hpp"
#include "loopsmith/isotopy.hpp"
#include "loopsmith/subloop.hpp"

namespace loopsmith {

namespace detail {

// Isomorphism-invariant per-element fingerprint used to prune the search:
// translation orders, square flags, commutant size, square-root count.
inline std::uint64_t element_fingerprint(const LoopTable& L, Element x) {
  const int n = L.order();
  std::uint64_t lo = perm_order(left_translation(L, x));
  std::uint64_t ro = perm_order(right_translation(L, x));
  std::uint64_t sq_e = L.mul(x, x) == L.identity();
  std::uint64_t sq_x = L.mul(x, x) == x;
  std::uint64_t comm = 0, roots = 0;
  for (int y = 0; y < n; ++y) {
    comm += L.mul(x, y) == L.mul(y, x);
    roots += L.mul(y, y) == x;
  }
  return lo | (ro << 8) | (sq_e << 16) | (sq_x << 17) | (comm << 18) |
         (roots << 25);
}

struct IsoSearch {
  const LoopTable& G;
  const LoopTable& H;
  int n;
  std::vector<std::uint64_t> fpG, fpH;
  std::vector<int> g2h, h2g;
  std::vector<int> assigned;  // assignment trail, in order

  IsoSearch(const LoopTable& g, const LoopTable& h)
      : G(g), H(h), n(g.order()), g2h(n, -1), h2g(n, -1) {
    fpG.reserve(n);
    fpH.reserve(n);
    for (int i = 0; i < n; ++i) fpG.push_back(element_fingerprint(G, i));
    for (int i = 0; i < n; ++i) fpH.push_back(element_fingerprint(H, i));
  }

  bool feasible() const {
    if (fpG[G.identity()] != fpH[H.identity()]) return false;
    std::vector<std::uint64_t> a = fpG, b = fpH;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  bool force(int p, int c) {
    if (g2h[p] != -1) return g2h[p] == c;
    if (h2g[c] != -1 || fpG[p] != fpH[c]) return false;
    g2h[p] = c;
    h2g[c] = p;
    assigned.push_back(p);
    return true;
  }

  // Closes the partial map under products: for every newly assigned x and
  // every already assigned y, the images of x·y and y·x are forced.
  bool propagate(size_t from) {
    for (size_t qi = from; qi < assigned.size(); ++qi) {
      const int x = assigned[qi];
      for (size_t j = 0; j <= qi; ++j) {
        const int y = assigned[j];
        if (!force(G.mul(x, y), H.mul(g2h[x], g2h[y]))) return false;
        if (!force(G.mul(y, x), H.mul(g2h[y], g2h[x]))) return false;
      }
    }
    return true;
  }

  void undo_to(size_t mark) {
    while (assigned.size() > mark) {
      const int t = assigned.back();
      assigned.pop_back();
      h2g[g2h[t]] = -1;
      g2h[t] = -1;
    }
  }

  bool search() {
    int x = -1;
    for (int i = 0; i < n; ++i)
      if (g2h[i] == -1) {
        x = i;
        break;
      }
    if (x == -1) return true;
    for (int c = 0; c < n; ++c) {
      if (h2g[c] != -1 || fpH[c] != fpG[x]) continue;
      const size_t mark = assigned.size();
      g2h[x] = c;
      h2g[c] = x;
      assigned.push_back(x);
      if (propagate(mark) && search()) return true;
      undo_to(mark);
    }
    return false;
  }
};

}  // namespace detail

// Backtracking search with fingerprint pruning and product-closure
// propagation. Exact: returns a witness iff one exists. Any witness is
// re-verified on all pairs before it is returned.
inline std::optional<Permutation> find_isomorphism(const LoopTable& G,
                                                   const LoopTable& H) {
  if (G.order() != H.order())
    throw LoopError(Err::OrderMismatch, "find_isomorphism: orders differ",
                    G.order(), H.order());
  detail::IsoSearch s(G, H);
  if (!s.feasible()) return std::nullopt;
  const size_t mark = s.assigned.size();
  if (!s.force(G.identity(), H.identity()) || !s.propagate(mark) ||
      !s.search())
    return std::nullopt;
  Permutation w{std::vector<int>(s.g2h.begin(), s.g2h.end())};
  for (int x = 0; x < G.order(); ++x)
    for (int y = 0; y < G.order(); ++y)
      if (H.mul(w(x), w(y)) != w(G.mul(x, y)))
        throw LoopError(Err::OrderMismatch,
                        "isomorphism search returned a bad witness");
  return w;
}

inline bool is_isomorphic(const LoopTable& G, const LoopTable& H) {
  return find_isomorphism(G, H).has_value();
}

// Isomorphic to every left isotope.
inline bool is_G_lambda(const LoopTable& G) {
  for (int g = 0; g < G.order(); ++g)
    if (!is_isomorphic(G, left_isotope(G, g))) return false;
  return true;
}

// Isomorphic to every right isotope.
inline bool is_G_rho(const LoopTable& G) {
  for (int f = 0; f < G.order(); ++f)
    if (!is_isomorphic(G, right_isotope(G, f))) return false;
  return true;
}

// Isomorphic to every f,g-principal isotope.
inline bool is_G_loop_direct(const LoopTable& G) {
  for (int f = 0; f < G.order(); ++f)
    for (int g = 0; g < G.order(); ++g)
      if (!is_isomorphic(G, principal_isotope(G, f, g))) return false;
  return true;
}

// Reduction to the two one-sided families.
inline bool is_G_loop_wilson(const LoopTable& G) {
  return is_G_lambda(G) && is_G_rho(G);
}

// theta-characterization: (theta R_x^-1, theta L_y^-1, theta) is an
// autotopism for all x, y. The quantifier placement is ambiguous, so both
// readings are implemented: one theta serving every (x, y), or a separate
// theta per pair.
enum class ThetaReading { SingleTheta, PerPair };

inline bool is_G_loop_theta(const LoopTable& G, ThetaReading reading,
                            std::optional<int> cap = std::nullopt) {
  require_within_cap(G.order(), cap, "is_G_loop_theta");
  const int n = G.order();
  std::vector<Permutation> rx_inv, ly_inv;
  rx_inv.reserve(n);
  ly_inv.reserve(n);
  for (int x = 0; x < n; ++x)
    rx_inv.push_back(inverse(right_translation(G, x)));
  for (int y = 0; y < n; ++y) ly_inv.push_back(inverse(left_translation(G, y)));

  auto triple_ok = [&](const Permutation& theta, int x, int y) {
    return is_autotopism(
        G, {compose(theta, rx_inv[x]), compose(theta, ly_inv[y]), theta});
  };

  if (reading == ThetaReading::SingleTheta) {
    bool found = false;
    for_each_permutation(n, [&](const std::vector<int>& image) {
      const Permutation theta(image);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (!triple_ok(theta, x, y)) return true;  // next theta
      found = true;
      return false;
    });
    return found;
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool found = false;
      for_each_permutation(n, [&](const std::vector<int>& image) {
        if (triple_ok(Permutation(image), x, y)) {
          found = true;
          return false;
        }
        return true;
      });
      if (!found) return false;
    }
  return true;
}

enum class NucleusSide { Left, Right };

// Left: the identity lies in the right nucleus of every left isotope.
// Right: the identity lies in the left nucleus of every right isotope.
inline bool nucleus_membership_criterion(const LoopTable& G, NucleusSide side) {
  const Element e = G.identity();
  for (int t = 0; t < G.order(); ++t) {
    if (side == NucleusSide::Left) {
      if (!in_right_nucleus(left_isotope(G, t), e)) return false;
    } else {
      if (!in_left_nucleus(right_isotope(G, t), e)) return false;
    }
  }
  return true;
}

namespace detail {

template <typename Fn>
void for_each_permutation_fixing(int n, int fixed, Fn&& fn) {
  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (i != fixed) rest.push_back(i);
  std::vector<int> image(n);
  image[fixed] = fixed;
  do {
    int k = 0;
    for (int i = 0; i < n; ++i)
      if (i != fixed) image[i] = rest[k++];
    if (!fn(const_cast<const std::vector<int>&>(image))) return;
  } while (std::next_permutation(rest.begin(), rest.end()));
}

}  // namespace detail

// Every element c is a companion of some right and some left
// pseudo-automorphism: a bijection U fixing e with (U, U R_c, U R_c),
// respectively (U L_c, U, U L_c), an autotopism.
inline bool pseudo_automorphism_companion_check(
    const LoopTable& G, std::optional<int> cap = std::nullopt) {
  require_within_cap(G.order(), cap, "pseudo_automorphism_companion_check");
  const int n = G.order();
  const Element e = G.identity();
  for (int c = 0; c < n; ++c) {
    const Permutation rc = right_translation(G, c);
    const Permutation lc = left_translation(G, c);
    bool right_found = false, left_found = false;
    detail::for_each_permutation_fixing(n, e, [&](const std::vector<int>& im) {
      const Permutation u(im);
      if (!right_found) {
        const Permutation urc = compose(u, rc);
        if (is_autotopism(G, {u, urc, urc})) right_found = true;
      }
      if (!left_found) {
        const Permutation ulc = compose(u, lc);
        if (is_autotopism(G, {ulc, u, ulc})) left_found = true;
      }
      return !(right_found && left_found);
    });
    if (!right_found || !left_found) return false;
  }
  return true;
}

struct CosetCriterionResult {
  bool general;                // e in g·N_rho and N_lambda·f for all g, f
  std::optional<bool> c_form;  // e in g·N for all g (C-loops only)
};

// Nucleus coset criterion for central loops, literal index ranges: every
// element of the carrier contributes a coset.
inline CosetCriterionResult gloop_coset_criterion_detail(const LoopTable& G) {
  if (!is_central_loop(G))
    throw LoopError(Err::NotCentralLoop,
                    "coset criterion needs an LC-, RC- or C-loop");
  const Element e = G.identity();
  const ElementSet nr = right_nucleus(G);
  const ElementSet nl = left_nucleus(G);
  bool general = true;
  for (int g = 0; g < G.order() && general; ++g)
    general = left_coset(G, g, nr).contains(e);
  for (int f = 0; f < G.order() && general; ++f)
    general = right_coset(G, nl, f).contains(e);

  CosetCriterionResult out{general, std::nullopt};
  if (satisfies(G, IdentityId::C)) {
    const ElementSet nuc = nucleus(G);
    bool simple = true;
    for (int g = 0; g < G.order() && simple; ++g)
      simple = left_coset(G, g, nuc).contains(e);
    out.c_form = simple;
  }
  return out;
}

inline bool gloop_coset_criterion(const LoopTable& G) {
  return gloop_coset_criterion_detail(G).general;
}

struct GloopCharacterization {
  bool direct;         // isomorphic to all f,g-principal isotopes
  bool wilson;         // G_lambda and G_rho
  bool theta_single;   // one theta for all (x, y)
  bool theta_perpair;  // a theta per (x, y)
  bool companion;      // every element is a pseudo-automorphism companion
};

inline GloopCharacterization gloop_characterization(
    const LoopTable& G, std::optional<int> cap = std::nullopt) {
  return {is_G_loop_direct(G), is_G_loop_wilson(G),
          is_G_loop_theta(G, ThetaReading::SingleTheta, cap),
          is_G_loop_theta(G, ThetaReading::PerPair, cap),
          pseudo_automorphism_companion_check(G, cap)};
}

// The right nucleus transfers onto the left isotope's right nucleus under
// y -> g·y, as sets.
inline bool nucleus_transfer_check(const LoopTable& G, Element g) {
  const LoopTable H = left_isotope(G, g);
  const ElementSet src = right_nucleus(G);
  ElementSet mapped(G.order());
  for (int a = 0; a < G.order(); ++a)
    if (src.contains(a)) mapped.add(G.mul(g, a));
  return mapped == right_nucleus(H);
}

}  // namespace loopsmith
