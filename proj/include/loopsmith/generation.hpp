#pragma once

// Exhaustive generation of small loops, structured corpus constructions
// (cyclic groups, direct products, Steiner loops), and isomorphism-class
// deduplication via canonical relabeling.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "loopsmith/core.hpp"
#include "loopsmith/filter.hpp"

namespace loopsmith {

struct GenSpec {
  int order = 1;
  bool normalized = true;  // identity fixed at 0; only supported mode
  std::optional<FilterExpr> filter;
};

namespace detail {

// Cell-wise Latin-square completion. Row 0 and column 0 are pinned to the
// identity map, so every normalized loop of the order is produced exactly
// once, in lexicographic order of table contents.
class CellBacktracker {
 public:
  CellBacktracker(int n, bool force_commutative,
                  const std::function<bool(const LoopTable&)>& yield)
      : n_(n),
        force_comm_(force_commutative),
        yield_(yield),
        cells_(n * n, 0),
        row_used_(n, 0),
        col_used_(n, 0) {
    for (int i = 0; i < n; ++i) {
      cells_[i] = i;
      cells_[i * n_] = i;
      row_used_[i] = 1u << i;
      col_used_[i] = 1u << i;
    }
    row_used_[0] = col_used_[0] = (1u << n) - 1u;
  }

  bool run() { return fill(1, 1); }

 private:
  bool fill(int x, int y) {
    if (x == n_) {
      LoopTable L = make_loop(n_, cells_);
      return yield_(L);
    }
    const int nx = (y == n_ - 1) ? x + 1 : x;
    const int ny = (y == n_ - 1) ? 1 : y + 1;

    if (force_comm_ && y < x) {
      const int v = cells_[y * n_ + x];
      if (!place(x, y, v)) return true;
      const bool cont = fill(nx, ny);
      unplace(x, y, v);
      return cont;
    }

    std::uint32_t free = ~(row_used_[x] | col_used_[y]) & ((1u << n_) - 1u);
    while (free) {
      const int v = __builtin_ctz(free);
      free &= free - 1;
      place_unchecked(x, y, v);
      const bool cont = fill(nx, ny);
      unplace(x, y, v);
      if (!cont) return false;
    }
    return true;
  }

  bool place(int x, int y, int v) {
    const std::uint32_t bit = 1u << v;
    if ((row_used_[x] | col_used_[y]) & bit) return false;
    place_unchecked(x, y, v);
    return true;
  }

  void place_unchecked(int x, int y, int v) {
    cells_[x * n_ + y] = v;
    row_used_[x] |= 1u << v;
    col_used_[y] |= 1u << v;
  }

  void unplace(int x, int y, int v) {
    row_used_[x] &= ~(1u << v);
    col_used_[y] &= ~(1u << v);
  }

  int n_;
  bool force_comm_;
  const std::function<bool(const LoopTable&)>& yield_;
  std::vector<int> cells_;
  std::vector<std::uint32_t> row_used_, col_used_;
};

}  // namespace detail

// Streams every normalized loop of the given order exactly once, in
// lexicographic order. The yield callback returns false to stop early.
// Filtered generation equals post-hoc filtering of the unfiltered stream;
// in-generation pruning is applied only for a commutativity conjunct
// (two-variable law, safe on partial tables).
inline void all_loops(const GenSpec& spec,
                      const std::function<bool(const LoopTable&)>& yield) {
  if (!spec.normalized)
    throw LoopError(Err::ParseError,
                    "only normalized generation (identity at 0) is supported");
  if (spec.order < 1)
    throw LoopError(Err::ParseError, "order must be positive", spec.order);
  if (spec.order > 7)
    throw LoopError(Err::OrderTooLarge, "exhaustive generation needs order <= 7",
                    spec.order, 7);

  bool force_comm = false;
  if (spec.filter) {
    for (IdentityId id : spec.filter->required_tags())
      if (id == IdentityId::Commutative) force_comm = true;
  }

  auto emit = [&](const LoopTable& L) {
    if (spec.filter && !spec.filter->eval(L)) return true;
    return yield(L);
  };

  if (spec.order == 1) {
    emit(make_loop(1, {0}));
    return;
  }
  detail::CellBacktracker bt(spec.order, force_comm, emit);
  bt.run();
}

inline std::vector<LoopTable> all_loops_vec(const GenSpec& spec) {
  std::vector<LoopTable> out;
  all_loops(spec, [&](const LoopTable& L) {
    out.push_back(L);
    return true;
  });
  return out;
}

// Independent generator used as an oracle against the cell-wise one: builds
// tables row by row, testing whole candidate rows drawn from the full
// lexicographic permutation list of [0, n).
inline void all_loops_rowperm(int n,
                              const std::function<bool(const LoopTable&)>& yield) {
  if (n < 1)
    throw LoopError(Err::ParseError, "order must be positive", n);
  if (n > 7)
    throw LoopError(Err::OrderTooLarge, "exhaustive generation needs order <= 7",
                    n, 7);
  if (n == 1) {
    yield(make_loop(1, {0}));
    return;
  }

  std::vector<std::vector<int>> perms;
  for_each_permutation(n, [&](const std::vector<int>& p) {
    perms.push_back(p);
    return true;
  });

  std::vector<std::vector<int>> rows(n);
  rows[0].resize(n);
  for (int y = 0; y < n; ++y) rows[0][y] = y;

  bool stop = false;
  std::function<void(int)> place_row = [&](int r) {
    if (stop) return;
    if (r == n) {
      LoopTable L = make_loop(rows);
      if (!yield(L)) stop = true;
      return;
    }
    for (const auto& p : perms) {
      if (p[0] != r) continue;
      bool ok = true;
      for (int y = 1; y < n && ok; ++y) {
        for (int prev = 0; prev < r && ok; ++prev)
          ok = rows[prev][y] != p[y];
      }
      if (!ok) continue;
      rows[r] = p;
      place_row(r + 1);
      if (stop) return;
    }
  };
  place_row(1);
}

inline std::uint64_t count_loops_rowperm(int n) {
  std::uint64_t c = 0;
  all_loops_rowperm(n, [&](const LoopTable&) {
    ++c;
    return true;
  });
  return c;
}

// Lexicographically minimal flattened table over all relabelings that send
// the identity to 0.
inline std::vector<int> canonical_form(const LoopTable& L) {
  const int n = L.order();
  std::vector<int> others;
  for (int i = 0; i < n; ++i)
    if (i != L.identity()) others.push_back(i);

  std::vector<int> best;
  std::vector<int> labels(n - 1);
  for (int i = 0; i < n - 1; ++i) labels[i] = i + 1;
  std::vector<int> sigma(n);
  do {
    sigma[L.identity()] = 0;
    for (int i = 0; i < n - 1; ++i) sigma[others[i]] = labels[i];
    std::vector<int> cells(n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        cells[sigma[x] * n + sigma[y]] = sigma[L.mul(x, y)];
    if (best.empty() || cells < best) best = std::move(cells);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return best;
}

// One canonical representative per isomorphism class, emitted on first
// encounter in input order. Idempotent.
inline std::vector<LoopTable> dedup_up_to_isomorphism(
    const std::vector<LoopTable>& loops) {
  std::vector<std::vector<int>> seen;
  std::vector<LoopTable> out;
  for (const LoopTable& L : loops) {
    std::vector<int> canon = canonical_form(L);
    bool dup = false;
    for (const auto& c : seen)
      if (c == canon) {
        dup = true;
        break;
      }
    if (!dup) {
      out.push_back(make_loop(L.order(), canon));
      seen.push_back(std::move(canon));
    }
  }
  return out;
}

inline LoopTable cyclic_group(int n) {
  std::vector<int> cells(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) cells[x * n + y] = (x + y) % n;
  return make_loop(n, std::move(cells));
}

// Componentwise product on pairs (g, h) -> g·|H| + h.
inline LoopTable direct_product(const LoopTable& G, const LoopTable& H) {
  const int ng = G.order(), nh = H.order(), n = ng * nh;
  std::vector<int> cells(n * n);
  for (int g1 = 0; g1 < ng; ++g1)
    for (int h1 = 0; h1 < nh; ++h1)
      for (int g2 = 0; g2 < ng; ++g2)
        for (int h2 = 0; h2 < nh; ++h2)
          cells[(g1 * nh + h1) * n + (g2 * nh + h2)] =
              G.mul(g1, g2) * nh + H.mul(h1, h2);
  return make_loop(n, std::move(cells));
}

inline LoopTable klein_four() {
  return direct_product(cyclic_group(2), cyclic_group(2));
}

// Order-6 symmetric group on 3 points; elements are the permutations of
// {0,1,2} in lexicographic order, multiplied left-to-right.
inline LoopTable symmetric_group_s3() {
  std::vector<std::array<int, 3>> elems;
  for_each_permutation(3, [&](const std::vector<int>& p) {
    elems.push_back({p[0], p[1], p[2]});
    return true;
  });
  auto index_of = [&](const std::array<int, 3>& q) {
    for (size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == q) return static_cast<int>(i);
    return -1;
  };
  const int n = 6;
  std::vector<int> cells(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::array<int, 3> q{};
      for (int i = 0; i < 3; ++i) q[i] = elems[b][elems[a][i]];
      cells[a * n + b] = index_of(q);
    }
  return make_loop(n, std::move(cells));
}

struct TripleSystem {
  int points = 0;                          // labeled 1..points
  std::vector<std::array<int, 3>> triples;
};

// Every pair of distinct points must lie in exactly one triple.
inline void validate_triple_system(const TripleSystem& ts) {
  const int v = ts.points;
  std::vector<int> pair_count(static_cast<size_t>(v + 1) * (v + 1), 0);
  for (const auto& t : ts.triples) {
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const int a = t[i], b = t[j];
        if (a < 1 || a > v || b < 1 || b > v || a == b)
          throw LoopError(Err::NotSteiner, "bad triple entry", a, b);
        ++pair_count[a * (v + 1) + b];
        ++pair_count[b * (v + 1) + a];
      }
  }
  for (int a = 1; a <= v; ++a)
    for (int b = a + 1; b <= v; ++b)
      if (pair_count[a * (v + 1) + b] != 1)
        throw LoopError(Err::NotSteiner,
                        "pair {" + std::to_string(a) + "," + std::to_string(b) +
                            "} lies in " +
                            std::to_string(pair_count[a * (v + 1) + b]) +
                            " triples",
                        a, b);
}

// Adjoin an identity 0 to the points: x·x = 0, 0 neutral, and x·y the third
// point of the triple through x and y.
inline LoopTable steiner_loop(const TripleSystem& ts) {
  validate_triple_system(ts);
  const int n = ts.points + 1;
  std::vector<int> cells(n * n, 0);
  for (int i = 0; i < n; ++i) {
    cells[i] = i;
    cells[i * n] = i;
    cells[i * n + i] = 0;
  }
  cells[0] = 0;
  for (const auto& t : ts.triples) {
    cells[t[0] * n + t[1]] = t[2];
    cells[t[1] * n + t[0]] = t[2];
    cells[t[0] * n + t[2]] = t[1];
    cells[t[2] * n + t[0]] = t[1];
    cells[t[1] * n + t[2]] = t[0];
    cells[t[2] * n + t[1]] = t[0];
  }
  return make_loop(n, std::move(cells));
}

inline TripleSystem fano_plane() {
  return {7,
          {{{1, 2, 3}},
           {{1, 4, 5}},
           {{1, 6, 7}},
           {{2, 4, 6}},
           {{2, 5, 7}},
           {{3, 4, 7}},
           {{3, 5, 6}}}};
}

// The affine plane of order 3 on the grid 1..9: rows, columns, and the two
// families of broken diagonals.
inline TripleSystem affine_sts9() {
  return {9,
          {{{1, 2, 3}},
           {{4, 5, 6}},
           {{7, 8, 9}},
           {{1, 4, 7}},
           {{2, 5, 8}},
           {{3, 6, 9}},
           {{1, 5, 9}},
           {{2, 6, 7}},
           {{3, 4, 8}},
           {{3, 5, 7}},
           {{1, 6, 8}},
           {{2, 4, 9}}}};
}

}  // namespace loopsmith
