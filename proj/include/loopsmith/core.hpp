#pragma once

// Cayley-table kernel for finite loops: validated tables, divisions,
// translations, and the permutation algebra everything else is built on.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace loopsmith {

using Element = int;

enum class Err {
  NotLatinRow,
  NotLatinColumn,
  NoIdentity,
  BadSymbol,
  OrderMismatch,
  OrderTooLarge,
  NotSteiner,
  ParseError,
  NotCentralLoop,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::NotLatinRow: return "NotLatinRow";
    case Err::NotLatinColumn: return "NotLatinColumn";
    case Err::NoIdentity: return "NoIdentity";
    case Err::BadSymbol: return "BadSymbol";
    case Err::OrderMismatch: return "OrderMismatch";
    case Err::OrderTooLarge: return "OrderTooLarge";
    case Err::NotSteiner: return "NotSteiner";
    case Err::ParseError: return "ParseError";
    case Err::NotCentralLoop: return "NotCentralLoop";
  }
  return "?";
}

class LoopError : public std::runtime_error {
 public:
  LoopError(Err kind, const std::string& msg, int a = -1, int b = -1)
      : std::runtime_error(std::string(err_name(kind)) + ": " + msg),
        kind(kind),
        a(a),
        b(b) {}

  Err kind;
  int a;  // offending row / line / element, where meaningful
  int b;  // secondary payload (column, value, ...)
};

// Enumeration cap for factorial-scale scans (regular sets, autotopism
// groups, theta searches, exhaustive generation). LOOPSMITH_MAX_ORDER
// overrides the default of 7.
inline int enumeration_cap() {
  static const int cap = [] {
    if (const char* s = std::getenv("LOOPSMITH_MAX_ORDER")) {
      int v = std::atoi(s);
      if (v > 0) return v;
    }
    return 7;
  }();
  return cap;
}

inline void require_within_cap(int n, std::optional<int> cap, const char* what) {
  const int c = cap.value_or(enumeration_cap());
  if (n > c) {
    throw LoopError(Err::OrderTooLarge,
                    std::string(what) + " needs order <= " + std::to_string(c) +
                        ", got " + std::to_string(n),
                    n, c);
  }
}

// Bijection on [0, n). Composition is postfix throughout the project:
// z(PQ) = (zP)Q, i.e. compose(p, q) applies p first. Every autotopism
// equation below is written against this convention.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {}

  static Permutation identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }

  int degree() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i]; }
  const std::vector<int>& image() const { return image_; }

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return image_ < o.image_; }

 private:
  std::vector<int> image_;
};

inline Permutation identity_perm(int n) { return Permutation::identity(n); }

inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw LoopError(Err::OrderMismatch, "compose: degrees differ", p.degree(),
                    q.degree());
  }
  std::vector<int> v(p.degree());
  for (int i = 0; i < p.degree(); ++i) v[i] = q(p(i));
  return Permutation(std::move(v));
}

inline Permutation inverse(const Permutation& p) {
  std::vector<int> v(p.degree());
  for (int i = 0; i < p.degree(); ++i) v[p(i)] = i;
  return Permutation(std::move(v));
}

inline bool is_identity(const Permutation& p) {
  for (int i = 0; i < p.degree(); ++i)
    if (p(i) != i) return false;
  return true;
}

inline bool is_bijection_image(const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  std::vector<char> seen(n, 0);
  for (int v : image) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

// Multiplicative order: lcm of cycle lengths.
inline int perm_order(const Permutation& p) {
  const int n = p.degree();
  std::vector<char> seen(n, 0);
  long long ord = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = p(j);
      ++len;
    }
    ord = std::lcm(ord, static_cast<long long>(len));
  }
  return static_cast<int>(ord);
}

// Order-n multiplication table with a two-sided identity. Rows and columns
// are permutations of [0, n) (Latin square); divisions are precomputed so
// isotope construction stays cheap in search loops. Immutable once built.
class LoopTable {
 public:
  int order() const { return n_; }
  Element identity() const { return e_; }

  Element mul(Element x, Element y) const { return cells_[x * n_ + y]; }
  // x \ y : the unique z with x·z = y
  Element left_div(Element x, Element y) const { return ldiv_[x * n_ + y]; }
  // y / x : the unique z with z·x = y
  Element right_div(Element y, Element x) const { return rdiv_[y * n_ + x]; }

  const std::vector<int>& cells() const { return cells_; }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> r(n_, std::vector<int>(n_));
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) r[x][y] = mul(x, y);
    return r;
  }

  bool operator==(const LoopTable& o) const {
    return n_ == o.n_ && cells_ == o.cells_;
  }

  friend LoopTable make_loop(int n, std::vector<int> cells);

 private:
  LoopTable() = default;

  int n_ = 0;
  Element e_ = 0;
  std::vector<int> cells_, ldiv_, rdiv_;
};

inline LoopTable make_loop(int n, std::vector<int> cells) {
  if (n <= 0 || static_cast<int>(cells.size()) != n * n)
    throw LoopError(Err::ParseError, "table is not an n x n grid", n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int v = cells[x * n + y];
      if (v < 0 || v >= n)
        throw LoopError(Err::BadSymbol,
                        "entry " + std::to_string(v) + " at row " +
                            std::to_string(x) + ", col " + std::to_string(y) +
                            " is outside [0, " + std::to_string(n) + ")",
                        x, y);
    }

  std::vector<char> seen(n);
  for (int x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < n; ++y) {
      const int v = cells[x * n + y];
      if (seen[v])
        throw LoopError(Err::NotLatinRow,
                        "row " + std::to_string(x) + " repeats " +
                            std::to_string(v),
                        x, v);
      seen[v] = 1;
    }
  }
  for (int y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int x = 0; x < n; ++x) {
      const int v = cells[x * n + y];
      if (seen[v])
        throw LoopError(Err::NotLatinColumn,
                        "column " + std::to_string(y) + " repeats " +
                            std::to_string(v),
                        y, v);
      seen[v] = 1;
    }
  }

  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int y = 0; y < n && ok; ++y) ok = cells[c * n + y] == y;
    for (int x = 0; x < n && ok; ++x) ok = cells[x * n + c] == x;
    if (ok) e = c;
  }
  if (e < 0)
    throw LoopError(Err::NoIdentity, "no two-sided identity element", n);

  LoopTable L;
  L.n_ = n;
  L.e_ = e;
  L.cells_ = std::move(cells);
  L.ldiv_.assign(n * n, 0);
  L.rdiv_.assign(n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int v = L.cells_[x * n + y];
      L.ldiv_[x * n + v] = y;  // x·y = v  =>  x \ v = y
      L.rdiv_[v * n + y] = x;  // x·y = v  =>  v / y = x
    }
  return L;
}

inline LoopTable make_loop(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n)
      throw LoopError(Err::ParseError, "ragged row in table", n);
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return make_loop(n, std::move(flat));
}

// y -> x·y (row x of the table as a map)
inline Permutation left_translation(const LoopTable& L, Element x) {
  std::vector<int> v(L.order());
  for (int y = 0; y < L.order(); ++y) v[y] = L.mul(x, y);
  return Permutation(std::move(v));
}

// y -> y·x (column x)
inline Permutation right_translation(const LoopTable& L, Element x) {
  std::vector<int> v(L.order());
  for (int y = 0; y < L.order(); ++y) v[y] = L.mul(y, x);
  return Permutation(std::move(v));
}

// Opposite loop: x∘y = y·x. Dualizes the one-sided identities.
inline LoopTable opposite(const LoopTable& L) {
  const int n = L.order();
  std::vector<int> cells(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) cells[x * n + y] = L.mul(y, x);
  return make_loop(n, std::move(cells));
}

// Relabel through sigma: table'[sigma(x)][sigma(y)] = sigma(x·y).
inline LoopTable relabel(const LoopTable& L, const Permutation& sigma) {
  const int n = L.order();
  if (sigma.degree() != n)
    throw LoopError(Err::OrderMismatch, "relabel: degree mismatch", n,
                    sigma.degree());
  std::vector<int> cells(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      cells[sigma(x) * n + sigma(y)] = sigma(L.mul(x, y));
  return make_loop(n, std::move(cells));
}

// Visits permutations of [0, n) in lexicographic order; fn returns false to
// stop early. Returns false iff stopped early.
template <typename Fn>
bool for_each_permutation(int n, Fn&& fn) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (!fn(const_cast<const std::vector<int>&>(p))) return false;
  } while (std::next_permutation(p.begin(), p.end()));
  return true;
}

}  // namespace loopsmith
