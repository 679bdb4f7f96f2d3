#pragma once

// Distinguished subsets of a loop: the three nuclei, centrum, center,
// square-centrality predicates, and coset machinery.

#include <cstdint>
#include <vector>

#include "loopsmith/core.hpp"

namespace loopsmith {

// Subset of a loop's elements as a bitmask; intersection and coset
// construction stay O(n) and allocation-free in search loops.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int n) : n_(n) {
    if (n < 0 || n > 64)
      throw LoopError(Err::OrderTooLarge, "ElementSet supports order <= 64", n);
  }

  int ambient_order() const { return n_; }
  bool contains(Element x) const { return (bits_ >> x) & 1u; }
  void add(Element x) { bits_ |= std::uint64_t{1} << x; }

  int size() const {
    int c = 0;
    for (int i = 0; i < n_; ++i) c += contains(i);
    return c;
  }

  std::vector<Element> elements() const {
    std::vector<Element> v;
    for (int i = 0; i < n_; ++i)
      if (contains(i)) v.push_back(i);
    return v;
  }

  ElementSet& intersect(const ElementSet& o) {
    bits_ &= o.bits_;
    return *this;
  }

  bool operator==(const ElementSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
  int n_ = 0;
};

inline ElementSet intersect(ElementSet a, const ElementSet& b) {
  return a.intersect(b);
}

// (a·x)·y = a·(x·y) for all x, y.
inline bool in_left_nucleus(const LoopTable& L, Element a) {
  const int n = L.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (L.mul(L.mul(a, x), y) != L.mul(a, L.mul(x, y))) return false;
  return true;
}

// y·(x·a) = (y·x)·a for all x, y.
inline bool in_right_nucleus(const LoopTable& L, Element a) {
  const int n = L.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (L.mul(y, L.mul(x, a)) != L.mul(L.mul(y, x), a)) return false;
  return true;
}

// (y·a)·x = y·(a·x) for all x, y.
inline bool in_middle_nucleus(const LoopTable& L, Element a) {
  const int n = L.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (L.mul(L.mul(y, a), x) != L.mul(y, L.mul(a, x))) return false;
  return true;
}

// Plain O(n^3) definitional scans.
inline ElementSet left_nucleus(const LoopTable& L) {
  ElementSet s(L.order());
  for (int a = 0; a < L.order(); ++a)
    if (in_left_nucleus(L, a)) s.add(a);
  return s;
}

inline ElementSet right_nucleus(const LoopTable& L) {
  ElementSet s(L.order());
  for (int a = 0; a < L.order(); ++a)
    if (in_right_nucleus(L, a)) s.add(a);
  return s;
}

inline ElementSet middle_nucleus(const LoopTable& L) {
  ElementSet s(L.order());
  for (int a = 0; a < L.order(); ++a)
    if (in_middle_nucleus(L, a)) s.add(a);
  return s;
}

inline ElementSet nucleus(const LoopTable& L) {
  ElementSet s = left_nucleus(L);
  s.intersect(right_nucleus(L));
  s.intersect(middle_nucleus(L));
  return s;
}

// a with a·x = x·a for all x.
inline ElementSet centrum(const LoopTable& L) {
  const int n = L.order();
  ElementSet s(n);
  for (int a = 0; a < n; ++a) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = L.mul(a, x) == L.mul(x, a);
    if (ok) s.add(a);
  }
  return s;
}

inline ElementSet center(const LoopTable& L) {
  ElementSet s = nucleus(L);
  s.intersect(centrum(L));
  return s;
}

inline bool is_centrum_square(const LoopTable& L) {
  const ElementSet c = centrum(L);
  for (int x = 0; x < L.order(); ++x)
    if (!c.contains(L.mul(x, x))) return false;
  return true;
}

inline bool is_central_square(const LoopTable& L) {
  const ElementSet z = center(L);
  for (int x = 0; x < L.order(); ++x)
    if (!z.contains(L.mul(x, x))) return false;
  return true;
}

// {g·s : s in S}
inline ElementSet left_coset(const LoopTable& L, Element g, const ElementSet& S) {
  ElementSet out(L.order());
  for (int s = 0; s < L.order(); ++s)
    if (S.contains(s)) out.add(L.mul(g, s));
  return out;
}

// {s·f : s in S}
inline ElementSet right_coset(const LoopTable& L, const ElementSet& S, Element f) {
  ElementSet out(L.order());
  for (int s = 0; s < L.order(); ++s)
    if (S.contains(s)) out.add(L.mul(s, f));
  return out;
}

// Desk-scale subgroup check: e-membership plus closure under mul and both
// divisions.
inline bool is_subloop_closed(const LoopTable& L, const ElementSet& S) {
  if (!S.contains(L.identity())) return false;
  for (int a = 0; a < L.order(); ++a) {
    if (!S.contains(a)) continue;
    for (int b = 0; b < L.order(); ++b) {
      if (!S.contains(b)) continue;
      if (!S.contains(L.mul(a, b))) return false;
      if (!S.contains(L.left_div(a, b))) return false;
      if (!S.contains(L.right_div(a, b))) return false;
    }
  }
  return true;
}

}  // namespace loopsmith
