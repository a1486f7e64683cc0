#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "sblat/errors.hpp"

namespace sblat {

/// Row-major bit matrix; row r holds the upward reachability set of element r.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols)
      : cols_(cols), stride_((cols + 63) / 64), bits_(static_cast<std::size_t>(rows) * stride_, 0) {}

  bool get(int r, int c) const {
    return (bits_[static_cast<std::size_t>(r) * stride_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(int r, int c) {
    bits_[static_cast<std::size_t>(r) * stride_ + c / 64] |= std::uint64_t{1} << (c % 64);
  }
  void or_row(int dst, int src) {
    auto* d = &bits_[static_cast<std::size_t>(dst) * stride_];
    const auto* s = &bits_[static_cast<std::size_t>(src) * stride_];
    for (int i = 0; i < stride_; ++i) d[i] |= s[i];
  }
  int stride() const { return stride_; }
  int cols() const { return cols_; }
  const std::uint64_t* row(int r) const { return &bits_[static_cast<std::size_t>(r) * stride_]; }

 private:
  int cols_ = 0;
  int stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct SaturatedChain {
  std::vector<int> steps;  // consecutive entries are cover pairs
  bool operator==(const SaturatedChain&) const = default;
};

/// Finite poset given by its Hasse diagram.  Immutable after construction;
/// reachability is precomputed as a bit matrix so order queries are O(1).
class Poset {
 public:
  /// Builds a poset from cover pairs.  Rejects cyclic input, ids out of range,
  /// duplicate pairs, and covers implied transitively (non-Hasse input).
  static Poset from_covers(int element_count, std::vector<std::pair<int, int>> covers) {
    if (element_count < 0) throw ToolkitError(ErrorKind::InvalidInput, "negative element count");
    Poset p;
    p.n_ = element_count;
    for (auto [lo, hi] : covers) {
      if (lo < 0 || lo >= element_count || hi < 0 || hi >= element_count)
        throw ToolkitError(ErrorKind::IdOutOfRange,
                           "cover (" + std::to_string(lo) + "," + std::to_string(hi) + ")");
      if (lo == hi) throw ToolkitError(ErrorKind::CycleDetected, "self-loop at " + std::to_string(lo));
    }
    std::sort(covers.begin(), covers.end());
    if (std::adjacent_find(covers.begin(), covers.end()) != covers.end())
      throw ToolkitError(ErrorKind::InvalidInput, "duplicate cover pair");
    p.covers_ = std::move(covers);
    p.up_.assign(element_count, {});
    p.down_.assign(element_count, {});
    for (auto [lo, hi] : p.covers_) {
      p.up_[lo].push_back(hi);
      p.down_[hi].push_back(lo);
    }
    // up_/down_ lists are ascending by construction of the sort above for up_;
    // sort down_ explicitly.
    for (auto& d : p.down_) std::sort(d.begin(), d.end());

    // Kahn topological sort; failure means a directed cycle.
    std::vector<int> indeg(element_count, 0);
    for (auto [lo, hi] : p.covers_) ++indeg[hi];
    std::vector<int> queue;
    for (int v = 0; v < element_count; ++v)
      if (indeg[v] == 0) queue.push_back(v);
    p.topo_.reserve(element_count);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      p.topo_.push_back(v);
      for (int w : p.up_[v])
        if (--indeg[w] == 0) queue.push_back(w);
    }
    if (static_cast<int>(p.topo_.size()) != element_count)
      throw ToolkitError(ErrorKind::CycleDetected, "cover graph has a directed cycle");
    p.topo_pos_.assign(element_count, 0);
    for (int i = 0; i < element_count; ++i) p.topo_pos_[p.topo_[i]] = i;

    // Upward reachability, tops first.
    p.reach_ = BitMatrix(element_count, element_count);
    for (int i = element_count - 1; i >= 0; --i) {
      int v = p.topo_[i];
      p.reach_.set(v, v);
      for (int w : p.up_[v]) p.reach_.or_row(v, w);
    }

    // Hasse minimality: a cover (u,v) must not be implied by a longer path.
    for (auto [lo, hi] : p.covers_)
      for (int mid : p.up_[lo])
        if (mid != hi && p.reach_.get(mid, hi))
          throw ToolkitError(ErrorKind::RedundantCover,
                             "cover (" + std::to_string(lo) + "," + std::to_string(hi) +
                                 ") is implied via " + std::to_string(mid));
    return p;
  }

  int size() const { return n_; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& up_covers(int v) const { return up_[v]; }
  const std::vector<int>& down_covers(int v) const { return down_[v]; }
  const std::vector<int>& topo_order() const { return topo_; }

  bool leq(int a, int b) const { return reach_.get(a, b); }
  bool less(int a, int b) const { return a != b && reach_.get(a, b); }

  /// Elements of the closed interval [u,v], ascending by id.
  std::vector<int> interval(int u, int v) const {
    require_leq(u, v);
    std::vector<int> out;
    for (int z = 0; z < n_; ++z)
      if (leq(u, z) && leq(z, v)) out.push_back(z);
    return out;
  }

  /// Elements of the open interval (u,v), ascending by id.
  std::vector<int> open_interval(int u, int v) const {
    require_leq(u, v);
    std::vector<int> out;
    for (int z = 0; z < n_; ++z)
      if (z != u && z != v && leq(u, z) && leq(z, v)) out.push_back(z);
    return out;
  }

  /// Atoms of [u,v]: covers of u lying inside the interval.
  std::vector<int> interval_atoms(int u, int v) const {
    std::vector<int> out;
    for (int a : up_[u])
      if (leq(a, v)) out.push_back(a);
    return out;
  }

  std::optional<int> minimum() const { return unique_extreme(down_); }
  std::optional<int> maximum() const { return unique_extreme(up_); }

  /// Least upper bound of a and b, or nullopt when none exists or when two
  /// incomparable minimal upper bounds exist.
  std::optional<int> try_join(int a, int b) const { return try_bound(a, b, /*upper=*/true); }
  std::optional<int> try_meet(int a, int b) const { return try_bound(a, b, /*upper=*/false); }

  int join(int a, int b) const {
    if (auto j = try_join(a, b)) return *j;
    throw ToolkitError(ErrorKind::NotUnique,
                       "no unique join of " + std::to_string(a) + " and " + std::to_string(b));
  }
  int meet(int a, int b) const {
    if (auto m = try_meet(a, b)) return *m;
    throw ToolkitError(ErrorKind::NotUnique,
                       "no unique meet of " + std::to_string(a) + " and " + std::to_string(b));
  }

  std::optional<int> try_join_of(const std::vector<int>& elems) const {
    if (elems.empty()) return std::nullopt;
    int acc = elems[0];
    for (std::size_t i = 1; i < elems.size(); ++i) {
      auto j = try_join(acc, elems[i]);
      if (!j) return std::nullopt;
      acc = *j;
    }
    return acc;
  }
  std::optional<int> try_meet_of(const std::vector<int>& elems) const {
    if (elems.empty()) return std::nullopt;
    int acc = elems[0];
    for (std::size_t i = 1; i < elems.size(); ++i) {
      auto m = try_meet(acc, elems[i]);
      if (!m) return std::nullopt;
      acc = *m;
    }
    return acc;
  }

  /// Covers reversed.  Involutive.
  Poset dual() const {
    std::vector<std::pair<int, int>> rev;
    rev.reserve(covers_.size());
    for (auto [lo, hi] : covers_) rev.emplace_back(hi, lo);
    return from_covers(n_, std::move(rev));
  }

  /// Induced subposet on the given elements (which must be convex so that the
  /// induced covers are covers of the parent).  Returns the subposet together
  /// with the old-id list indexed by new id.
  std::pair<Poset, std::vector<int>> induced(std::vector<int> members) const {
    std::sort(members.begin(), members.end());
    std::vector<int> new_id(n_, -1);
    for (std::size_t i = 0; i < members.size(); ++i) new_id[members[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> sub;
    for (auto [lo, hi] : covers_)
      if (new_id[lo] >= 0 && new_id[hi] >= 0) sub.emplace_back(new_id[lo], new_id[hi]);
    return {from_covers(static_cast<int>(members.size()), std::move(sub)), std::move(members)};
  }

  void require_leq(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw ToolkitError(ErrorKind::IdOutOfRange, std::to_string(u) + "," + std::to_string(v));
    if (!leq(u, v))
      throw ToolkitError(ErrorKind::NotComparable,
                         std::to_string(u) + " is not below " + std::to_string(v));
  }

 private:
  std::optional<int> unique_extreme(const std::vector<std::vector<int>>& adj) const {
    int found = -1;
    for (int v = 0; v < n_; ++v)
      if (adj[v].empty()) {
        if (found >= 0) return std::nullopt;
        found = v;
      }
    return found >= 0 ? std::optional<int>(found) : std::nullopt;
  }

  std::optional<int> try_bound(int a, int b, bool upper) const {
    // Common bounds as a bitset intersection, then take the first element in a
    // linear extension; the bound is unique iff it is comparable to all others.
    const int stride = reach_.stride();
    std::vector<std::uint64_t> common(stride);
    if (upper) {
      const auto* ra = reach_.row(a);
      const auto* rb = reach_.row(b);
      for (int i = 0; i < stride; ++i) common[i] = ra[i] & rb[i];
    } else {
      // Lower bounds: elements z with z <= a and z <= b; columns of reach_.
      for (int z = 0; z < n_; ++z)
        if (leq(z, a) && leq(z, b)) common[z / 64] |= std::uint64_t{1} << (z % 64);
    }
    int best = -1;
    if (upper) {
      for (int i = 0; i < n_; ++i) {
        int z = topo_[i];
        if ((common[z / 64] >> (z % 64)) & 1u) {
          best = z;
          break;
        }
      }
    } else {
      for (int i = n_ - 1; i >= 0; --i) {
        int z = topo_[i];
        if ((common[z / 64] >> (z % 64)) & 1u) {
          best = z;
          break;
        }
      }
    }
    if (best < 0) return std::nullopt;
    // best is minimal (resp. maximal) among the common bounds; it is the
    // unique one iff every other bound is above (resp. below) it.
    for (int w = 0; w < n_; ++w) {
      if (!((common[w / 64] >> (w % 64)) & 1u)) continue;
      if (upper ? !leq(best, w) : !leq(w, best)) return std::nullopt;
    }
    return best;
  }

  int n_ = 0;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<int> topo_, topo_pos_;
  BitMatrix reach_;
};

struct LatticeVerdict {
  bool ok = true;
  int a = -1, b = -1;       // witnessing pair on failure
  bool join_failed = true;  // failing mode: join or meet
};

/// True iff every pair has a unique meet and a unique join.
inline LatticeVerdict is_lattice(const Poset& p) {
  const int n = p.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!p.try_join(a, b)) return {false, a, b, true};
      if (!p.try_meet(a, b)) return {false, a, b, false};
    }
  return {};
}

struct AtomNearLatticeVerdict {
  bool ok = true;
  int u = -1, v = -1;        // interval of failure
  std::vector<int> subset;   // atom subset without unique least upper bound
};

/// Checks that in every closed interval, every nonempty subset of the
/// interval's atoms has a unique least upper bound within the interval.
inline AtomNearLatticeVerdict atom_near_lattice_check(const Poset& p, int atom_cap = 20) {
  if (!p.minimum() || !p.maximum()) return {false, -1, -1, {}};
  const int n = p.size();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (!p.leq(u, v) || u == v) continue;
      std::vector<int> atoms = p.interval_atoms(u, v);
      const int d = static_cast<int>(atoms.size());
      if (d > atom_cap)
        throw ToolkitError(ErrorKind::IntervalTooLarge,
                           "interval [" + std::to_string(u) + "," + std::to_string(v) + "] has " +
                               std::to_string(d) + " atoms");
      const std::vector<int> members = p.interval(u, v);
      for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < d; ++i)
          if (mask & (1u << i)) subset.push_back(atoms[i]);
        // Least upper bound within [u,v]: a unique minimal common upper bound
        // lying below every other bound.
        std::vector<int> bounds;
        for (int z : members) {
          bool ub = true;
          for (int a : subset)
            if (!p.leq(a, z)) {
              ub = false;
              break;
            }
          if (ub) bounds.push_back(z);
        }
        bool has_lub = false;
        for (int z : bounds) {
          bool below_all = true;
          for (int w : bounds)
            if (!p.leq(z, w)) {
              below_all = false;
              break;
            }
          if (below_all) {
            has_lub = true;
            break;
          }
        }
        if (!has_lub) return {false, u, v, subset};
      }
    }
  return {};
}

/// Mobius function of a single pair via the defining recursion, computed by a
/// sweep over [u,v] in linear extension order.
inline int mobius(const Poset& p, int u, int v) {
  p.require_leq(u, v);
  std::vector<int> mu(p.size(), 0);
  mu[u] = 1;
  for (int x : p.topo_order()) {
    if (x == u || !p.less(u, x) || !p.leq(x, v)) continue;
    long long s = 0;
    for (int y = 0; y < p.size(); ++y)
      if (p.leq(u, y) && p.less(y, x)) s += mu[y];
    mu[x] = static_cast<int>(-s);
  }
  return mu[v];
}

/// All-pairs Mobius table (zeta inversion along a linear extension); entry
/// (u,v) is meaningful only when u <= v.
inline std::vector<std::vector<int>> mobius_all(const Poset& p) {
  const int n = p.size();
  std::vector<std::vector<int>> mu(n, std::vector<int>(n, 0));
  for (int u = 0; u < n; ++u) {
    mu[u][u] = 1;
    for (int x : p.topo_order()) {
      if (x == u || !p.less(u, x)) continue;
      long long s = 0;
      for (int y = 0; y < n; ++y)
        if (p.leq(u, y) && p.less(y, x)) s += mu[u][y];
      mu[u][x] = static_cast<int>(-s);
    }
  }
  return mu;
}

/// All saturated chains from u to v, DFS choosing up-covers in ascending id.
inline std::vector<SaturatedChain> saturated_chains(const Poset& p, int u, int v,
                                                    std::uint64_t budget = 200000) {
  p.require_leq(u, v);
  std::vector<SaturatedChain> out;
  std::vector<int> path{u};
  auto dfs = [&](auto&& self, int x) -> void {
    if (x == v) {
      if (out.size() >= budget)
        throw ToolkitError(ErrorKind::BudgetExceeded,
                           "chain budget hit after " + std::to_string(out.size()) + " chains");
      out.push_back({path});
      return;
    }
    for (int w : p.up_covers(x)) {
      if (!p.leq(w, v)) continue;
      path.push_back(w);
      self(self, w);
      path.pop_back();
    }
  };
  dfs(dfs, u);
  return out;
}

/// Sum of the lengths of all saturated chains of [u,v], by DP over the
/// interval.  The chain count is checked against the budget.
inline std::uint64_t total_length(const Poset& p, int u, int v, std::uint64_t budget = 200000) {
  p.require_leq(u, v);
  std::vector<std::uint64_t> paths(p.size(), 0), lensum(p.size(), 0);
  paths[u] = 1;
  for (int x : p.topo_order()) {
    if (!p.leq(u, x) || !p.leq(x, v) || x == u) continue;
    for (int y : p.down_covers(x)) {
      if (!p.leq(u, y)) continue;
      paths[x] += paths[y];
      lensum[x] += lensum[y] + paths[y];
    }
    if (paths[x] > budget)
      throw ToolkitError(ErrorKind::BudgetExceeded, "chain count exceeds budget");
  }
  return u == v ? 0 : lensum[v];
}

namespace detail {

/// Union-find with plain arrays; small and local.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

/// Tests whether two saturated chains with common endpoints differ by a
/// single basic move: equal outside an open interval (x,y), branching at
/// covers x < a and x < b with y = a v b.
inline bool is_basic_move(const Poset& p, const std::vector<int>& c1, const std::vector<int>& c2) {
  if (c1 == c2) return false;
  std::size_t pre = 0;
  while (pre < c1.size() && pre < c2.size() && c1[pre] == c2[pre]) ++pre;
  if (pre == 0 || pre >= c1.size() || pre >= c2.size()) return false;
  std::size_t suf = 0;
  while (suf < c1.size() - pre && suf < c2.size() - pre &&
         c1[c1.size() - 1 - suf] == c2[c2.size() - 1 - suf])
    ++suf;
  if (suf == 0) return false;
  int x = c1[pre - 1];
  int a = c1[pre], b = c2[pre];
  int y1 = c1[c1.size() - suf], y2 = c2[c2.size() - suf];
  if (y1 != y2) return false;
  (void)x;
  auto j = p.try_join(a, b);
  return j && *j == y1;
}

}  // namespace detail

struct ConnectivityVerdict {
  bool connected = true;
  std::size_t chain_count = 0;
  std::size_t move_count = 0;
};

/// Builds the graph of saturated chains of [u,v] under basic moves and
/// reports whether it is connected.
inline ConnectivityVerdict basic_move_connectivity(const Poset& p, int u, int v,
                                                   const Budgets& budgets = {}) {
  auto chains = saturated_chains(p, u, v, budgets.chain_budget);
  if (chains.empty()) return {true, 0, 0};
  detail::DisjointSets ds(static_cast<int>(chains.size()));
  std::uint64_t edges = 0;
  for (std::size_t i = 0; i < chains.size(); ++i)
    for (std::size_t j = i + 1; j < chains.size(); ++j)
      if (detail::is_basic_move(p, chains[i].steps, chains[j].steps)) {
        if (++edges > budgets.move_edge_budget)
          throw ToolkitError(ErrorKind::BudgetExceeded, "basic-move edge budget exceeded");
        ds.unite(static_cast<int>(i), static_cast<int>(j));
      }
  int root = ds.find(0);
  for (std::size_t i = 1; i < chains.size(); ++i)
    if (ds.find(static_cast<int>(i)) != root) return {false, chains.size(), static_cast<std::size_t>(edges)};
  return {true, chains.size(), static_cast<std::size_t>(edges)};
}

}  // namespace sblat
