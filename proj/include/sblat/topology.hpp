#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sblat/labeling.hpp"
#include "sblat/poset.hpp"

namespace sblat {

/// Explicit simplicial complex over a finite vertex set.  Nonempty faces are
/// stored grouped by dimension as sorted vertex lists; the empty face is
/// implicit (present whenever the complex is nonempty).
struct SimplicialComplex {
  int vertex_count = 0;
  std::vector<std::vector<std::vector<int>>> faces_by_dim;  // [dim][face][vertex]

  std::uint64_t face_count() const {
    std::uint64_t total = 0;
    for (const auto& dim : faces_by_dim) total += dim.size();
    return total;
  }
  int top_dimension() const { return static_cast<int>(faces_by_dim.size()) - 1; }

  /// Maximal faces, for serialization.
  std::vector<std::vector<int>> facets() const {
    std::vector<std::vector<int>> out;
    for (int d = 0; d <= top_dimension(); ++d)
      for (const auto& f : faces_by_dim[d]) {
        bool maximal = true;
        if (d + 1 <= top_dimension())
          for (const auto& g : faces_by_dim[d + 1])
            if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
              maximal = false;
              break;
            }
        if (maximal) out.push_back(f);
      }
    return out;
  }
};

/// Reduced Betti numbers indexed from dimension -1 upward: reduced_betti[0]
/// is the rank in degree -1 (1 exactly for the empty complex).
struct BettiVector {
  std::vector<int> reduced_betti;

  bool operator==(const BettiVector&) const = default;

  int in_degree(int d) const {
    int idx = d + 1;
    if (idx < 0 || idx >= static_cast<int>(reduced_betti.size())) return 0;
    return reduced_betti[idx];
  }
  long long alternating_sum() const {
    long long s = 0;
    int sign = -1;  // degree -1
    for (int b : reduced_betti) {
      s += sign * b;
      sign = -sign;
    }
    return s;
  }
  void trim() {
    while (!reduced_betti.empty() && reduced_betti.back() == 0) reduced_betti.pop_back();
  }
};

struct HomotopyClass {
  enum Kind { Contractible, Sphere, Unclassified } kind = Unclassified;
  int sphere_dim = 0;  // meaningful for Sphere; may be -1

  bool operator==(const HomotopyClass&) const = default;

  std::string to_string() const {
    switch (kind) {
      case Contractible: return "contractible";
      case Sphere: return "sphere(" + std::to_string(sphere_dim) + ")";
      default: return "unclassified";
    }
  }
};

/// Order complex: vertices are the poset's elements, faces are its chains.
inline SimplicialComplex order_complex(const Poset& p, std::uint64_t face_budget = 50000) {
  SimplicialComplex c;
  c.vertex_count = p.size();
  std::uint64_t count = 0;
  std::vector<int> chain;
  auto extend = [&](auto&& self, int last) -> void {
    if (++count > face_budget)
      throw ToolkitError(ErrorKind::FaceBudgetExceeded,
                         "order complex exceeds " + std::to_string(face_budget) + " faces");
    int dim = static_cast<int>(chain.size()) - 1;
    if (dim >= static_cast<int>(c.faces_by_dim.size())) c.faces_by_dim.resize(dim + 1);
    c.faces_by_dim[dim].push_back(chain);
    for (int next = 0; next < p.size(); ++next) {
      if (last >= 0 && !p.less(last, next)) continue;
      chain.push_back(next);
      self(self, next);
      chain.pop_back();
    }
  };
  for (int v = 0; v < p.size(); ++v) {
    chain.push_back(v);
    extend(extend, v);
    chain.pop_back();
  }
  return c;
}

/// Reduced Euler characteristic of the order complex computed by signed chain
/// counting, without materializing faces.
inline long long poset_order_complex_euler(const Poset& p) {
  // h(v) = signed sum over chains with maximum v of (-1)^(size-1).
  std::vector<long long> h(p.size(), 0);
  long long total = -1;  // the empty face
  for (int x : p.topo_order()) {
    long long s = 1;
    for (int y = 0; y < p.size(); ++y)
      if (p.less(y, x)) s -= h[y];
    h[x] = s;
    total += s;
  }
  return total;
}

/// Crosscut complex of the interval [u,v] with the atoms as crosscut:
/// vertices are the atoms, and a subset is a face iff its join lies strictly
/// below v.
inline SimplicialComplex crosscut_complex(const Poset& p, int u, int v, int atom_cap = 20) {
  p.require_leq(u, v);
  if (u == v) throw ToolkitError(ErrorKind::InvalidInput, "crosscut needs u < v");
  std::vector<int> atoms = p.interval_atoms(u, v);
  const int d = static_cast<int>(atoms.size());
  if (d > atom_cap)
    throw ToolkitError(ErrorKind::AtomCountExceeded,
                       "interval has " + std::to_string(d) + " atoms; cap is " + std::to_string(atom_cap));
  SimplicialComplex c;
  c.vertex_count = d;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << d); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < d; ++i)
      if (mask & (std::uint32_t{1} << i)) subset.push_back(i);
    std::vector<int> elems;
    for (int i : subset) elems.push_back(atoms[i]);
    auto join = p.try_join_of(elems);
    if (!join) throw ToolkitError(ErrorKind::NotUnique, "atom subset without a join");
    if (*join == v) continue;  // unbounded inside the open interval
    int dim = static_cast<int>(subset.size()) - 1;
    if (dim >= static_cast<int>(c.faces_by_dim.size())) c.faces_by_dim.resize(dim + 1);
    c.faces_by_dim[dim].push_back(std::move(subset));
  }
  return c;
}

/// Alternating face count with the empty face at dimension -1; the empty
/// complex (and the complex with no faces at all) yields -1.
inline long long reduced_euler(const SimplicialComplex& c) {
  long long chi = -1;
  for (int d = 0; d <= c.top_dimension(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(c.faces_by_dim[d].size());
  return chi;
}

namespace detail {

/// Rank of a sparse integer matrix by fraction-free column reduction in
/// arbitrary-precision integers.  Columns are (row index, coefficient) lists
/// sorted by row; a column is eliminated against earlier pivot columns
/// sharing its lowest row.
class IntegerRank {
 public:
  using Column = std::vector<std::pair<int, mpz_class>>;

  static int rank(std::vector<Column> columns) {
    std::map<int, int> pivot_of_low;  // lowest row index -> column index
    int r = 0;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      Column& col = columns[j];
      while (!col.empty()) {
        int low = col.back().first;
        auto it = pivot_of_low.find(low);
        if (it == pivot_of_low.end()) break;
        eliminate(col, columns[it->second]);
        normalize(col);
      }
      if (!col.empty()) {
        pivot_of_low[col.back().first] = static_cast<int>(j);
        ++r;
      }
    }
    return r;
  }

 private:
  // col <- p_coef * col - c_coef * pivot, cancelling the shared lowest row.
  static void eliminate(Column& col, const Column& pivot) {
    const mpz_class c_coef = col.back().second;
    const mpz_class p_coef = pivot.back().second;
    Column out;
    out.reserve(col.size() + pivot.size());
    std::size_t i = 0, k = 0;
    while (i < col.size() || k < pivot.size()) {
      if (k == pivot.size() || (i < col.size() && col[i].first < pivot[k].first)) {
        out.emplace_back(col[i].first, p_coef * col[i].second);
        ++i;
      } else if (i == col.size() || pivot[k].first < col[i].first) {
        out.emplace_back(pivot[k].first, -c_coef * pivot[k].second);
        ++k;
      } else {
        mpz_class val = p_coef * col[i].second - c_coef * pivot[k].second;
        if (val != 0) out.emplace_back(col[i].first, std::move(val));
        ++i;
        ++k;
      }
    }
    col = std::move(out);
  }

  static void normalize(Column& col) {
    mpz_class g = 0;
    for (auto& [row, val] : col) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), val.get_mpz_t());
    if (g > 1)
      for (auto& [row, val] : col) mpz_divexact(val.get_mpz_t(), val.get_mpz_t(), g.get_mpz_t());
  }
};

}  // namespace detail

/// Reduced rational Betti numbers via exact boundary-matrix ranks.  The
/// augmentation map (vertices to the empty face) is included, so the vector
/// starts at degree -1.
inline BettiVector betti_numbers(const SimplicialComplex& c, std::uint64_t face_budget = 50000) {
  if (c.face_count() > face_budget)
    throw ToolkitError(ErrorKind::FaceBudgetExceeded,
                       "complex has " + std::to_string(c.face_count()) + " faces");
  const int top = c.top_dimension();
  if (top < 0) return BettiVector{{1}};  // empty complex: rank 1 in degree -1

  // Index faces per dimension.
  std::vector<std::map<std::vector<int>, int>> index(top + 1);
  for (int d = 0; d <= top; ++d)
    for (std::size_t i = 0; i < c.faces_by_dim[d].size(); ++i)
      index[d][c.faces_by_dim[d][i]] = static_cast<int>(i);

  // rank of boundary_d : C_d -> C_{d-1} for d = 0 .. top (d=0 is augmentation).
  std::vector<int> boundary_rank(top + 2, 0);
  for (int d = 0; d <= top; ++d) {
    std::vector<detail::IntegerRank::Column> cols;
    cols.reserve(c.faces_by_dim[d].size());
    for (const auto& face : c.faces_by_dim[d]) {
      detail::IntegerRank::Column col;
      if (d == 0) {
        col.emplace_back(0, 1);  // augmentation onto the empty face
      } else {
        for (std::size_t omit = 0; omit < face.size(); ++omit) {
          std::vector<int> sub;
          for (std::size_t i = 0; i < face.size(); ++i)
            if (i != omit) sub.push_back(face[i]);
          col.emplace_back(index[d - 1].at(sub), (omit % 2 == 0) ? 1 : -1);
        }
        std::sort(col.begin(), col.end());
      }
      cols.push_back(std::move(col));
    }
    boundary_rank[d] = detail::IntegerRank::rank(std::move(cols));
  }

  BettiVector betti;
  betti.reduced_betti.resize(top + 2, 0);
  // degree -1: f_{-1} = 1, image of augmentation has rank boundary_rank[0].
  betti.reduced_betti[0] = 1 - boundary_rank[0];
  for (int d = 0; d <= top; ++d) {
    int f = static_cast<int>(c.faces_by_dim[d].size());
    int next = (d + 1 <= top) ? boundary_rank[d + 1] : 0;
    betti.reduced_betti[d + 1] = f - boundary_rank[d] - next;
  }
  betti.trim();
  return betti;
}

/// Predicted homotopy class of the open interval (u,v) under a verified
/// SB-labeling: a sphere of dimension d-2 iff v is the join of the d atoms of
/// [u,v], contractible otherwise.  Covers come out as Sphere(-1).
inline HomotopyClass classify_interval(const LabeledLattice& L, bool sb_verified, int u, int v) {
  if (!sb_verified)
    throw ToolkitError(ErrorKind::NotVerified, "labeling has not been certified SB");
  const Poset& p = L.poset;
  p.require_leq(u, v);
  if (u == v) throw ToolkitError(ErrorKind::InvalidInput, "classify needs u < v");
  std::vector<int> atoms = p.interval_atoms(u, v);
  auto join = p.try_join_of(atoms);
  if (join && *join == v)
    return {HomotopyClass::Sphere, static_cast<int>(atoms.size()) - 2};
  return {HomotopyClass::Contractible, 0};
}

struct CrosscutCheck {
  bool euler_equal = false;
  long long euler_crosscut = 0;
  long long euler_order = 0;
  bool partial = false;                   // order complex too large; Euler compared by DP
  std::optional<bool> betti_equal;        // set when both Betti vectors were computed
  std::optional<BettiVector> betti_order;
  std::optional<BettiVector> betti_crosscut;
};

/// Compares the crosscut complex of [u,v] with the order complex of the open
/// interval (u,v): reduced Euler characteristics always, Betti vectors when
/// both complexes fit the homology budget.
inline CrosscutCheck crosscut_vs_order_check(const Poset& p, int u, int v,
                                             const Budgets& budgets = {}) {
  CrosscutCheck result;
  SimplicialComplex cross = crosscut_complex(p, u, v, budgets.atom_cap);
  result.euler_crosscut = reduced_euler(cross);

  auto [open_poset, ids] = p.induced(p.open_interval(u, v));
  (void)ids;
  std::optional<SimplicialComplex> order;
  try {
    order = order_complex(open_poset, budgets.face_budget);
  } catch (const ToolkitError& e) {
    if (e.kind() != ErrorKind::FaceBudgetExceeded) throw;
  }
  if (order) {
    result.euler_order = reduced_euler(*order);
    result.betti_order = betti_numbers(*order, budgets.face_budget);
    result.betti_crosscut = betti_numbers(cross, budgets.face_budget);
    result.betti_equal = (*result.betti_order == *result.betti_crosscut);
  } else {
    result.partial = true;
    result.euler_order = poset_order_complex_euler(open_poset);
  }
  result.euler_equal = (result.euler_crosscut == result.euler_order);
  return result;
}

}  // namespace sblat
