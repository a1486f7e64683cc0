#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sblat/labeling.hpp"
#include "sblat/poset.hpp"

namespace sblat {

// ---------------------------------------------------------------------------
// Finite distributive lattices J(P)
// ---------------------------------------------------------------------------

/// Lattice of order ideals of P, ordered by inclusion.  A cover adds a single
/// element p of P, which becomes the edge label.
inline LabeledLattice distributive_from_poset(const Poset& P, std::uint64_t ideal_cap = 100000) {
  const int m = P.size();
  if (m > 25)
    throw ToolkitError(ErrorKind::IdealCountExceeded, "ground poset too large for enumeration");
  std::vector<std::uint32_t> ideals;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    bool closed = true;
    for (auto [lo, hi] : P.covers())
      if ((mask >> hi & 1u) && !(mask >> lo & 1u)) {
        closed = false;
        break;
      }
    if (closed) {
      ideals.push_back(mask);
      if (ideals.size() > ideal_cap)
        throw ToolkitError(ErrorKind::IdealCountExceeded,
                           "more than " + std::to_string(ideal_cap) + " order ideals");
    }
  }
  std::sort(ideals.begin(), ideals.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::map<std::uint32_t, int> id_of;
  for (std::size_t i = 0; i < ideals.size(); ++i) id_of[ideals[i]] = static_cast<int>(i);

  LabeledLattice L;
  L.family_tag = "jp";
  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    std::uint32_t I = ideals[i];
    std::string payload = "{";
    for (int e = 0; e < m; ++e)
      if (I >> e & 1u) payload += (payload.size() > 1 ? "," : "") + std::to_string(e);
    payload += "}";
    L.payloads.push_back(payload);
    for (int e = 0; e < m; ++e) {
      if (I >> e & 1u) continue;
      std::uint32_t J = I | (std::uint32_t{1} << e);
      auto it = id_of.find(J);
      if (it == id_of.end()) continue;  // J not an ideal: e has an uncovered lower bound
      covers.emplace_back(static_cast<int>(i), it->second);
      L.labeling.labels[{static_cast<int>(i), it->second}] = e;
      L.labeling.label_names[e] = "p" + std::to_string(e);
    }
  }
  L.poset = Poset::from_covers(static_cast<int>(ideals.size()), std::move(covers));
  return L;
}

/// Boolean lattice B_n as J(antichain of n elements).
inline LabeledLattice boolean_lattice(int n) {
  if (n < 0 || n > 20) throw ToolkitError(ErrorKind::ParamTooLarge, "boolean:n needs 0 <= n <= 20");
  LabeledLattice L = distributive_from_poset(Poset::from_covers(n, {}));
  L.family_tag = "boolean:" + std::to_string(n);
  return L;
}

// ---------------------------------------------------------------------------
// Young's lattice intervals
// ---------------------------------------------------------------------------

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  static Partition of(std::vector<int> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] <= 0) throw ToolkitError(ErrorKind::InvalidInput, "parts must be positive");
      if (i > 0 && parts[i] > parts[i - 1])
        throw ToolkitError(ErrorKind::InvalidInput, "parts must be weakly decreasing");
    }
    return {std::move(parts)};
  }
  int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int part(std::size_t r) const { return r < parts.size() ? parts[r] : 0; }
  bool contains(const Partition& other) const {
    for (std::size_t r = 0; r < other.parts.size(); ++r)
      if (part(r) < other.parts[r]) return false;
    return true;
  }
  std::string to_string() const {
    if (parts.empty()) return "()";
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i)
      s += (i ? "," : "") + std::to_string(parts[i]);
    return s + ")";
  }
  auto operator<=>(const Partition&) const = default;
};

/// Interval [mu, lambda] of Young's lattice.  Covers add a single box; the
/// label is the added cell (row, column), encoded by a fixed pairing.
inline LabeledLattice young_interval(const Partition& mu, const Partition& lambda) {
  if (!lambda.contains(mu))
    throw ToolkitError(ErrorKind::InvalidInput, "mu must be contained in lambda");
  const int rows = static_cast<int>(lambda.parts.size());
  const int width = rows ? lambda.parts[0] : 0;
  std::vector<std::vector<int>> shapes;  // padded to `rows` entries
  std::vector<int> cur(rows, 0);
  auto rec = [&](auto&& self, int r) -> void {
    if (r == rows) {
      shapes.push_back(cur);
      return;
    }
    int hi = std::min(lambda.part(r), r ? cur[r - 1] : width);
    for (int v = mu.part(r); v <= hi; ++v) {
      cur[r] = v;
      self(self, r + 1);
    }
    cur[r] = 0;
  };
  rec(rec, 0);
  if (shapes.size() > 200000)
    throw ToolkitError(ErrorKind::IntervalTooLarge, "Young interval too large");
  std::sort(shapes.begin(), shapes.end(), [](const auto& a, const auto& b) {
    int sa = std::accumulate(a.begin(), a.end(), 0), sb = std::accumulate(b.begin(), b.end(), 0);
    return sa != sb ? sa < sb : a < b;
  });
  std::map<std::vector<int>, int> id_of;
  for (std::size_t i = 0; i < shapes.size(); ++i) id_of[shapes[i]] = static_cast<int>(i);

  LabeledLattice L;
  L.family_tag = "young:" + mu.to_string() + "/" + lambda.to_string();
  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    std::vector<int> trimmed;
    for (int v : shapes[i])
      if (v > 0) trimmed.push_back(v);
    L.payloads.push_back(Partition{trimmed}.to_string());
    for (int r = 0; r < rows; ++r) {
      std::vector<int> next = shapes[i];
      ++next[r];
      auto it = id_of.find(next);
      if (it == id_of.end()) continue;  // not a shape in the interval
      int c = next[r];  // 1-based column of the added box
      int label = r * (width + 2) + c;
      covers.emplace_back(static_cast<int>(i), it->second);
      L.labeling.labels[{static_cast<int>(i), it->second}] = label;
      L.labeling.label_names[label] =
          "(" + std::to_string(r + 1) + "," + std::to_string(c) + ")";
    }
  }
  L.poset = Poset::from_covers(static_cast<int>(shapes.size()), std::move(covers));
  return L;
}

// ---------------------------------------------------------------------------
// Weak Bruhat order of symmetric and dihedral groups
// ---------------------------------------------------------------------------

/// Finite Coxeter group realized by permutations: each group element is the
/// permutation it induces in a faithful action, generators act by left
/// multiplication (function composition).
struct CoxeterModel {
  std::vector<std::vector<int>> gens;      // generator index (1-based label i uses gens[i-1])
  std::vector<std::vector<int>> elements;  // element id -> permutation
  std::vector<int> length;                 // Coxeter length per element id
  std::map<std::vector<int>, int> id_of;
  std::vector<std::vector<int>> cox_m;     // m(i,j), 1-based in both coordinates

  static std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[b[k]];
    return out;
  }
  static std::vector<int> inverse(const std::vector<int>& a) {
    std::vector<int> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[a[k]] = static_cast<int>(k);
    return out;
  }
  int apply_gen(int gen_1based, int elem_id) const {
    return id_of.at(compose(gens[gen_1based - 1], elements[elem_id]));
  }
};

struct WeakOrderFamily {
  LabeledLattice lattice;
  CoxeterModel model;
};

namespace detail {

inline WeakOrderFamily build_weak_order(std::vector<std::vector<int>> gens,
                                        std::vector<std::vector<int>> cox_m,
                                        const std::string& tag, bool one_line_payload) {
  const std::size_t points = gens[0].size();
  std::vector<int> identity(points);
  std::iota(identity.begin(), identity.end(), 0);

  // Cayley BFS under left multiplication; distance is Coxeter length.
  std::map<std::vector<int>, int> dist;
  std::vector<std::vector<int>> frontier{identity}, all{identity};
  dist[identity] = 0;
  int depth = 0;
  while (!frontier.empty()) {
    ++depth;
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier)
      for (const auto& g : gens) {
        auto gw = CoxeterModel::compose(g, w);
        if (dist.emplace(gw, depth).second) {
          next.push_back(gw);
          all.push_back(gw);
        }
      }
    frontier = std::move(next);
  }

  CoxeterModel model;
  model.gens = std::move(gens);
  model.cox_m = std::move(cox_m);
  std::sort(all.begin(), all.end(), [&](const auto& a, const auto& b) {
    return dist[a] != dist[b] ? dist[a] < dist[b] : a < b;
  });
  model.elements = all;
  model.length.resize(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    model.id_of[all[i]] = static_cast<int>(i);
    model.length[i] = dist[all[i]];
  }

  WeakOrderFamily family;
  family.lattice.family_tag = tag;
  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t g = 0; g < model.gens.size(); ++g) {
      auto gw = CoxeterModel::compose(model.gens[g], all[i]);
      int j = model.id_of.at(gw);
      if (model.length[j] != model.length[i] + 1) continue;
      covers.emplace_back(static_cast<int>(i), j);
      family.lattice.labeling.labels[{static_cast<int>(i), j}] = static_cast<int>(g) + 1;
    }
  for (std::size_t g = 0; g < model.gens.size(); ++g)
    family.lattice.labeling.label_names[static_cast<int>(g) + 1] =
        "s" + std::to_string(g + 1);

  // Payloads: one-line notation or lexicographically smallest reduced word.
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (one_line_payload) {
      std::string s;
      for (std::size_t k = 0; k < points; ++k) s += std::to_string(all[i][k] + 1);
      family.lattice.payloads.push_back(s);
    } else {
      std::string word;
      std::vector<int> w = all[i];
      int len = dist[w];
      while (len > 0) {
        for (std::size_t g = 0; g < model.gens.size(); ++g) {
          auto gw = CoxeterModel::compose(model.gens[g], w);
          if (dist[gw] == len - 1) {
            word += std::to_string(g + 1);
            w = std::move(gw);
            --len;
            break;
          }
        }
      }
      family.lattice.payloads.push_back(word.empty() ? "e" : word);
    }
  }
  family.lattice.poset = Poset::from_covers(static_cast<int>(all.size()), std::move(covers));
  family.model = std::move(model);
  return family;
}

}  // namespace detail

/// Left weak order on the symmetric group S_n: covers w < s_i w whenever the
/// length (inversion count) goes up, labeled by the simple reflection index.
inline WeakOrderFamily weak_order_symmetric(int n) {
  if (n < 1 || n > 6) throw ToolkitError(ErrorKind::ParamTooLarge, "weak:sym:n needs 1 <= n <= 6");
  std::vector<std::vector<int>> gens;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 0);
    std::swap(s[i], s[i + 1]);
    gens.push_back(std::move(s));
  }
  int k = n - 1;
  std::vector<std::vector<int>> m(k + 1, std::vector<int>(k + 1, 2));
  for (int i = 1; i <= k; ++i) {
    m[i][i] = 1;
    if (i + 1 <= k) m[i][i + 1] = m[i + 1][i] = 3;
  }
  if (n == 1) {
    // S_1 has no generators; represent the trivial group on one point.
    WeakOrderFamily family;
    family.lattice.family_tag = "weak:sym:1";
    family.lattice.poset = Poset::from_covers(1, {});
    family.lattice.payloads = {"1"};
    family.model.elements = {{0}};
    family.model.length = {0};
    family.model.id_of[{0}] = 0;
    return family;
  }
  auto family = detail::build_weak_order(std::move(gens), std::move(m),
                                         "weak:sym:" + std::to_string(n), true);
  return family;
}

/// Left weak order on the dihedral group I2(m), via its regular
/// representation: the element r^k sigma^f is the point 2k+f.
inline WeakOrderFamily weak_order_dihedral(int m) {
  if (m < 2 || m > 50) throw ToolkitError(ErrorKind::ParamTooLarge, "weak:dih:m needs 2 <= m <= 50");
  auto point = [m](int k, int f) { return 2 * ((k % m + m) % m) + f; };
  std::vector<int> s(2 * m), t(2 * m);
  for (int k = 0; k < m; ++k)
    for (int f = 0; f < 2; ++f) {
      s[point(k, f)] = point(m - k, 1 - f);      // sigma . r^k sigma^f
      t[point(k, f)] = point(m - k + 1, 1 - f);  // (r sigma) . r^k sigma^f
    }
  std::vector<std::vector<int>> cox_m{{0, 0, 0}, {0, 1, m}, {0, m, 1}};
  return detail::build_weak_order({std::move(s), std::move(t)}, std::move(cox_m),
                                  "weak:dih:" + std::to_string(m), false);
}

struct ParabolicCheck {
  bool is_longest = false;
  int support_size = 0;  // |S| for the parabolic subgroup tested
};

/// Tests whether the left quotient x with w = x u is the longest element of
/// the parabolic subgroup generated by its left descent set.
inline ParabolicCheck longest_parabolic_check(const WeakOrderFamily& family, int u, int w) {
  const CoxeterModel& model = family.model;
  const auto& pu = model.elements.at(u);
  const auto& pw = model.elements.at(w);
  auto x = CoxeterModel::compose(pw, CoxeterModel::inverse(pu));
  int xid = model.id_of.at(x);
  std::vector<int> descents;
  for (std::size_t g = 0; g < model.gens.size(); ++g) {
    int gx = model.id_of.at(CoxeterModel::compose(model.gens[g], x));
    if (model.length[gx] < model.length[xid]) descents.push_back(static_cast<int>(g));
  }
  // Subgroup closure under the descent generators.
  std::vector<int> identity(x.size());
  std::iota(identity.begin(), identity.end(), 0);
  std::map<std::vector<int>, int> seen;
  std::vector<std::vector<int>> queue{identity};
  seen[identity] = 0;
  int max_len = 0;
  bool contains_x = x == identity;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int g : descents) {
      auto next = CoxeterModel::compose(model.gens[g], queue[head]);
      if (seen.emplace(next, 0).second) {
        queue.push_back(next);
        max_len = std::max(max_len, model.length[model.id_of.at(next)]);
        if (next == x) contains_x = true;
      }
    }
  }
  return {contains_x && model.length[xid] == max_len,
          static_cast<int>(descents.size())};
}

// ---------------------------------------------------------------------------
// Tamari lattices
// ---------------------------------------------------------------------------

/// Full binary tree over leaves lo..hi (1-based, left-to-right).
struct TamariTree {
  int leaf = 0;                  // > 0 for a leaf
  std::vector<TamariTree> kids;  // empty or exactly two

  bool is_leaf() const { return kids.empty(); }
  int max_leaf() const { return is_leaf() ? leaf : kids[1].max_leaf(); }
  std::string to_string() const {
    if (is_leaf()) return std::to_string(leaf);
    return "(" + kids[0].to_string() + "," + kids[1].to_string() + ")";
  }
};

namespace detail {

inline std::vector<TamariTree> all_trees(int lo, int hi) {
  if (lo == hi) return {TamariTree{lo, {}}};
  std::vector<TamariTree> out;
  for (int split = lo; split < hi; ++split)
    for (const auto& l : all_trees(lo, split))
      for (const auto& r : all_trees(split + 1, hi))
        out.push_back(TamariTree{0, {l, r}});
  return out;
}

/// All single right rotations (a,b)c -> a(b,c) applicable to t, with labels.
inline void collect_rotations(const TamariTree& t, std::vector<std::pair<int, TamariTree>>& out) {
  if (t.is_leaf()) return;
  const TamariTree& l = t.kids[0];
  const TamariTree& r = t.kids[1];
  if (!l.is_leaf()) {
    TamariTree rotated{0, {l.kids[0], TamariTree{0, {l.kids[1], r}}}};
    out.emplace_back(l.kids[1].max_leaf(), std::move(rotated));
  }
  for (int side = 0; side < 2; ++side) {
    std::vector<std::pair<int, TamariTree>> inner;
    collect_rotations(t.kids[side], inner);
    for (auto& [label, sub] : inner) {
      TamariTree copy = t;
      copy.kids[side] = std::move(sub);
      out.emplace_back(label, std::move(copy));
    }
  }
}

/// Detects the nested configuration ((a,b)c)d with max(b)=i and max(c)=j.
inline bool has_nested_config(const TamariTree& t, int i, int j) {
  if (t.is_leaf()) return false;
  const TamariTree& y = t.kids[0];
  if (!y.is_leaf() && !y.kids[0].is_leaf() && y.kids[0].kids[1].max_leaf() == i &&
      y.kids[1].max_leaf() == j)
    return true;
  return has_nested_config(t.kids[0], i, j) || has_nested_config(t.kids[1], i, j);
}

/// Detects the configuration (a,(b,c))d with max(c) = i.  Rotating its outer
/// pair carries label i (max((b,c)) = max(c)) and exposes ((b,c),d), whose own
/// rotation carries label i again.  This is the only shape on which two
/// consecutive label-i rotations are possible; everywhere else a second
/// application of the label-i operator is null.
inline bool has_revealed_config(const TamariTree& t, int i) {
  if (t.is_leaf()) return false;
  const TamariTree& y = t.kids[0];
  if (!y.is_leaf() && !y.kids[1].is_leaf() && y.kids[1].max_leaf() == i) return true;
  return has_revealed_config(t.kids[0], i) || has_revealed_config(t.kids[1], i);
}

}  // namespace detail

struct TamariFamily {
  LabeledLattice lattice;
  int letters = 0;
  std::vector<TamariTree> trees;  // by element id

  /// The unique up-cover of v whose label is i, if any.
  std::optional<int> rotation_op(int v, int i) const {
    std::vector<std::pair<int, TamariTree>> rotations;
    detail::collect_rotations(trees.at(v), rotations);
    for (auto& [label, result] : rotations)
      if (label == i) return id_of.at(result.to_string());
    return std::nullopt;
  }

  bool nested_config(int v, int i, int j) const {
    return detail::has_nested_config(trees.at(v), i, j);
  }

  /// True when a second label-i rotation can follow the first one at v.
  bool revealed_config(int v, int i) const {
    return detail::has_revealed_config(trees.at(v), i);
  }

  std::map<std::string, int> id_of;
};

/// Tamari lattice on binary bracketings of 1..n, covers by right rotation,
/// labeled by the rightmost letter of the rotated middle subtree.
inline TamariFamily tamari(int n) {
  if (n < 2 || n > 10) throw ToolkitError(ErrorKind::ParamTooLarge, "tamari:n needs 2 <= n <= 10");
  TamariFamily family;
  family.letters = n;
  family.trees = detail::all_trees(1, n);
  std::sort(family.trees.begin(), family.trees.end(),
            [](const TamariTree& a, const TamariTree& b) { return a.to_string() < b.to_string(); });
  for (std::size_t i = 0; i < family.trees.size(); ++i)
    family.id_of[family.trees[i].to_string()] = static_cast<int>(i);

  family.lattice.family_tag = "tamari:" + std::to_string(n);
  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 0; i < family.trees.size(); ++i) {
    family.lattice.payloads.push_back(family.trees[i].to_string());
    std::vector<std::pair<int, TamariTree>> rotations;
    detail::collect_rotations(family.trees[i], rotations);
    for (auto& [label, result] : rotations) {
      int j = family.id_of.at(result.to_string());
      covers.emplace_back(static_cast<int>(i), j);
      family.lattice.labeling.labels[{static_cast<int>(i), j}] = label;
      family.lattice.labeling.label_names[label] = std::to_string(label);
    }
  }
  family.lattice.poset = Poset::from_covers(static_cast<int>(family.trees.size()), std::move(covers));
  return family;
}

// ---------------------------------------------------------------------------
// Dominance order (a lattice without an SB-labeling)
// ---------------------------------------------------------------------------

struct UnlabeledFamily {
  Poset poset;
  std::vector<std::string> payloads;
  std::string family_tag;
};

namespace detail {

inline void partitions_of(int n, int max_part, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_of(n - p, p, cur, out);
    cur.pop_back();
  }
}

inline bool dominates(const std::vector<int>& a, const std::vector<int>& b) {
  // b dominates a: partial sums of b are >= those of a.
  int sa = 0, sb = 0;
  std::size_t rows = std::max(a.size(), b.size());
  for (std::size_t r = 0; r < rows; ++r) {
    sa += r < a.size() ? a[r] : 0;
    sb += r < b.size() ? b[r] : 0;
    if (sb < sa) return false;
  }
  return true;
}

}  // namespace detail

/// Dominance order on the partitions of n; covers by Hasse reduction of the
/// full domination relation.  No labeling: none exists in general.
inline UnlabeledFamily dominance(int n) {
  if (n < 1 || n > 20) throw ToolkitError(ErrorKind::ParamTooLarge, "dominance:n needs 1 <= n <= 20");
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  detail::partitions_of(n, n, cur, parts);
  // Ascending lexicographic order is a linear extension (domination implies it).
  std::sort(parts.begin(), parts.end());
  const int count = static_cast<int>(parts.size());
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < count; ++a)
    for (int b = 0; b < count; ++b) {
      if (a == b || !detail::dominates(parts[a], parts[b])) continue;
      bool is_cover = true;
      for (int c = 0; c < count; ++c)
        if (c != a && c != b && detail::dominates(parts[a], parts[c]) &&
            detail::dominates(parts[c], parts[b])) {
          is_cover = false;
          break;
        }
      if (is_cover) covers.emplace_back(a, b);
    }
  UnlabeledFamily family;
  family.family_tag = "dominance:" + std::to_string(n);
  family.poset = Poset::from_covers(count, std::move(covers));
  for (const auto& p : parts) family.payloads.push_back(Partition{p}.to_string());
  return family;
}

struct DominanceCounterexample {
  UnlabeledFamily ambient;      // dominance(15)
  int top = -1;                 // id of (5,4,3,2,1)
  int bottom = -1;              // meet of the four elements it covers
  std::vector<int> covered;     // the four covered elements
  Poset interval;               // induced subposet of [bottom, top]
  std::vector<int> member_ids;  // ambient ids by interval id
};

/// Known negative instance: in dominance(15), the interval from the meet of
/// the four elements covered by (5,4,3,2,1) up to (5,4,3,2,1).
inline DominanceCounterexample dominance_counterexample_interval() {
  DominanceCounterexample ce;
  ce.ambient = dominance(15);
  const std::string target = "(5,4,3,2,1)";
  for (std::size_t i = 0; i < ce.ambient.payloads.size(); ++i)
    if (ce.ambient.payloads[i] == target) ce.top = static_cast<int>(i);
  if (ce.top < 0) throw ToolkitError(ErrorKind::InvalidInput, "partition (5,4,3,2,1) not found");
  ce.covered = ce.ambient.poset.down_covers(ce.top);
  auto meet = ce.ambient.poset.try_meet_of(ce.covered);
  if (!meet) throw ToolkitError(ErrorKind::NotUnique, "covered elements have no unique meet");
  ce.bottom = *meet;
  auto [sub, ids] = ce.ambient.poset.induced(ce.ambient.poset.interval(ce.bottom, ce.top));
  ce.interval = std::move(sub);
  ce.member_ids = std::move(ids);
  return ce;
}

}  // namespace sblat
