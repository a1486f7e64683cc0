#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sblat/poset.hpp"

namespace sblat {

/// Mapping from cover pairs to opaque integer labels.  The domain must be
/// exactly the cover set of the associated lattice.
struct EdgeLabeling {
  std::map<std::pair<int, int>, int> labels;
  std::map<int, std::string> label_names;

  int at(int lo, int hi) const {
    auto it = labels.find({lo, hi});
    if (it == labels.end())
      throw ToolkitError(ErrorKind::InvalidInput,
                         "no label on cover (" + std::to_string(lo) + "," + std::to_string(hi) + ")");
    return it->second;
  }

  void check_domain(const Poset& p) const {
    if (labels.size() != p.covers().size())
      throw ToolkitError(ErrorKind::InvalidInput, "labeling domain differs from cover set");
    for (auto [lo, hi] : p.covers())
      if (!labels.count({lo, hi}))
        throw ToolkitError(ErrorKind::InvalidInput, "missing label on a cover");
  }
};

/// A lattice with an edge labeling and per-element display payloads.
struct LabeledLattice {
  Poset poset;
  EdgeLabeling labeling;
  std::vector<std::string> payloads;
  std::string family_tag;
};

enum class SBFormulation { Index2, LowerSB, FullSB };

/// One violated SB condition with its witnesses.  Fields not applicable to a
/// given condition are -1 / empty.
struct Violation {
  int condition = 0;          // 1, 2 or 3
  int u = -1;                 // bottom of the offending interval
  int v = -1, w = -1;         // the cover pair (condition 1) or representative atoms
  int top = -1;               // join the chain was enumerated in
  std::vector<int> atoms;     // atom subset (full-SB checks)
  std::vector<int> chain;     // offending saturated chain, if any
};

struct SBReport {
  bool pass = true;
  SBFormulation checked = SBFormulation::Index2;
  std::vector<Violation> violations;
};

namespace detail {

inline std::set<int> chain_label_set(const EdgeLabeling& lab, const std::vector<int>& chain) {
  std::set<int> s;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) s.insert(lab.at(chain[k], chain[k + 1]));
  return s;
}

}  // namespace detail

/// Index-2 formulation: for each element u and each pair of distinct covers
/// v,w of u, the labels differ and every saturated chain of [u, v v w] uses
/// exactly those two labels, each at least once.
inline SBReport verify_index2(const LabeledLattice& L, const Budgets& budgets = {}) {
  const Poset& p = L.poset;
  L.labeling.check_domain(p);
  SBReport report;
  report.checked = SBFormulation::Index2;
  for (int u = 0; u < p.size(); ++u) {
    const auto& ups = p.up_covers(u);
    for (std::size_t i = 0; i < ups.size(); ++i)
      for (std::size_t j = i + 1; j < ups.size(); ++j) {
        int v = ups[i], w = ups[j];
        int lv = L.labeling.at(u, v), lw = L.labeling.at(u, w);
        if (lv == lw) {
          report.violations.push_back({1, u, v, w, -1, {}, {}});
          continue;
        }
        int top = p.join(v, w);
        const std::set<int> expected{lv, lw};
        for (const auto& chain : saturated_chains(p, u, top, budgets.chain_budget)) {
          std::set<int> got = detail::chain_label_set(L.labeling, chain.steps);
          if (got == expected) continue;
          bool extra = false;
          for (int l : got)
            if (!expected.count(l)) extra = true;
          report.violations.push_back({extra ? 3 : 2, u, v, w, top, {}, chain.steps});
        }
      }
  }
  report.pass = report.violations.empty();
  return report;
}

/// Full SB definition, checked on every closed interval: the interval's atoms
/// carry pairwise distinct bottom labels, and for every subset S of the
/// atoms, every saturated chain of [u, vS] uses exactly the labels of S.
///
/// Every (interval, atom subset) pair reduces to (u, subset of up-covers of
/// u): a subset S of up-covers is the full atom-subset data of the interval
/// [u, vS], and atoms of any [u,t] are up-covers of u below t.
inline SBReport verify_sb_full(const LabeledLattice& L, const Budgets& budgets = {}) {
  const Poset& p = L.poset;
  L.labeling.check_domain(p);
  SBReport report;
  report.checked = SBFormulation::FullSB;
  for (int u = 0; u < p.size(); ++u) {
    const auto& ups = p.up_covers(u);
    const int d = static_cast<int>(ups.size());
    if (d > budgets.atom_cap)
      throw ToolkitError(ErrorKind::BudgetExceeded,
                         "element " + std::to_string(u) + " has " + std::to_string(d) +
                             " covers; atom-subset cap is " + std::to_string(budgets.atom_cap));
    // Condition 1: distinct atoms of any interval get distinct labels.
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (L.labeling.at(u, ups[i]) == L.labeling.at(u, ups[j]))
          report.violations.push_back({1, u, ups[i], ups[j], -1, {}, {}});
    // Condition 2: chains to a join of atoms use exactly those atoms' labels.
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << d); ++mask) {
      std::vector<int> subset;
      std::set<int> expected;
      for (int i = 0; i < d; ++i)
        if (mask & (std::uint32_t{1} << i)) {
          subset.push_back(ups[i]);
          expected.insert(L.labeling.at(u, ups[i]));
        }
      auto top = p.try_join_of(subset);
      if (!top)
        throw ToolkitError(ErrorKind::NotUnique, "atom subset without a join; not a lattice");
      for (const auto& chain : saturated_chains(p, u, *top, budgets.chain_budget)) {
        std::set<int> got = detail::chain_label_set(L.labeling, chain.steps);
        if (got == expected) continue;
        bool extra = false;
        for (int l : got)
          if (!expected.count(l)) extra = true;
        report.violations.push_back({extra ? 3 : 2, u, -1, -1, *top, subset, chain.steps});
      }
    }
  }
  report.pass = report.violations.empty();
  return report;
}

struct CrosscheckResult {
  bool agree = true;
  bool index2_pass = false;
  bool full_pass = false;
};

/// Runs both verifiers and asserts their verdicts agree.  A discrepancy is a
/// toolkit bug and is reported, never silently resolved.
inline CrosscheckResult equivalence_crosscheck(const LabeledLattice& L, const Budgets& budgets = {}) {
  CrosscheckResult r;
  r.index2_pass = verify_index2(L, budgets).pass;
  r.full_pass = verify_sb_full(L, budgets).pass;
  r.agree = (r.index2_pass == r.full_pass);
  return r;
}

struct LabelSetVerdict {
  bool constant = true;
  std::set<int> common_set;
  std::vector<int> witness_chain;  // first chain with a deviating label set
};

/// Checks that every saturated chain of [u,v] carries the same label set.
inline LabelSetVerdict label_set_constancy(const LabeledLattice& L, int u, int v,
                                           const Budgets& budgets = {}) {
  auto chains = saturated_chains(L.poset, u, v, budgets.chain_budget);
  LabelSetVerdict verdict;
  bool first = true;
  for (const auto& chain : chains) {
    std::set<int> s = detail::chain_label_set(L.labeling, chain.steps);
    if (first) {
      verdict.common_set = std::move(s);
      first = false;
    } else if (s != verdict.common_set) {
      verdict.constant = false;
      verdict.witness_chain = chain.steps;
      return verdict;
    }
  }
  return verdict;
}

struct ThirdAtomWitness {
  int u, v, w, x;  // v,w,x all cover u inside [u, v v w]; x is the extra atom
};

struct CspRefutation {
  std::uint64_t nodes_explored = 0;
  std::size_t constraint_count = 0;
};

struct ObstructionCertificate {
  std::variant<ThirdAtomWitness, CspRefutation> witness;
  bool is_third_atom() const { return std::holds_alternative<ThirdAtomWitness>(witness); }
};

/// Scans all cover triples (u,v,w) for a third atom of [u, v v w]; such an
/// atom rules out any index-2 labeling.
inline std::optional<ObstructionCertificate> third_atom_obstruction(const Poset& p) {
  for (int u = 0; u < p.size(); ++u) {
    const auto& ups = p.up_covers(u);
    for (std::size_t i = 0; i < ups.size(); ++i)
      for (std::size_t j = i + 1; j < ups.size(); ++j) {
        int v = ups[i], w = ups[j];
        auto top = p.try_join(v, w);
        if (!top)
          throw ToolkitError(ErrorKind::NotUnique, "poset is not a lattice at a cover pair");
        for (int x : ups)
          if (x != v && x != w && p.leq(x, *top))
            return ObstructionCertificate{ThirdAtomWitness{u, v, w, x}};
      }
  }
  return std::nullopt;
}

struct DistinctJoinsVerdict {
  bool ok = true;
  std::vector<int> subset_a, subset_b;  // witnesses on failure
};

/// Verifies distinct atom subsets of [u,v] have distinct joins and that the
/// map subset -> join is an order isomorphism onto the subposet of atom
/// joins.  The reverse direction reduces to: the atoms of [u, join(S)] are
/// exactly S.
inline DistinctJoinsVerdict distinct_joins_check(const LabeledLattice& L, int u, int v,
                                                 const Budgets& budgets = {}) {
  const Poset& p = L.poset;
  p.require_leq(u, v);
  std::vector<int> atoms = p.interval_atoms(u, v);
  const int d = static_cast<int>(atoms.size());
  if (d > budgets.atom_cap)
    throw ToolkitError(ErrorKind::BudgetExceeded,
                       "interval has " + std::to_string(d) + " atoms; cap is " +
                           std::to_string(budgets.atom_cap));
  std::map<int, std::uint32_t> join_to_mask;
  join_to_mask[u] = 0;  // empty join
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << d); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < d; ++i)
      if (mask & (std::uint32_t{1} << i)) subset.push_back(atoms[i]);
    auto top = p.try_join_of(subset);
    if (!top) throw ToolkitError(ErrorKind::NotUnique, "atom subset without a join");
    auto [it, fresh] = join_to_mask.emplace(*top, mask);
    if (!fresh) {
      DistinctJoinsVerdict verdict;
      verdict.ok = false;
      for (int i = 0; i < d; ++i) {
        if (it->second & (std::uint32_t{1} << i)) verdict.subset_a.push_back(atoms[i]);
        if (mask & (std::uint32_t{1} << i)) verdict.subset_b.push_back(atoms[i]);
      }
      return verdict;
    }
    // Order-iso reverse direction: every atom below join(S) must lie in S.
    for (int i = 0; i < d; ++i)
      if (!(mask & (std::uint32_t{1} << i)) && p.leq(atoms[i], *top)) {
        DistinctJoinsVerdict verdict;
        verdict.ok = false;
        for (int k = 0; k < d; ++k)
          if (mask & (std::uint32_t{1} << k)) verdict.subset_a.push_back(atoms[k]);
        verdict.subset_b = {atoms[i]};
        return verdict;
      }
  }
  return {};
}

// ---------------------------------------------------------------------------
// SB-labeling existence search
// ---------------------------------------------------------------------------

struct SbSat {
  EdgeLabeling labeling;
};
struct SbUnknown {
  std::uint64_t nodes_explored = 0;
};

using SbExistsResult = std::variant<SbSat, ObstructionCertificate, SbUnknown>;

namespace detail {

/// Backtracking search over partitions of the cover-edge set into label
/// classes.  Classes are a union-find over edges; the index-2 conditions
/// become pairwise-difference constraints plus per-chain membership
/// disjunctions (every edge of a chain of [u, v v w] lies in the class of
/// (u,v) or of (u,w), and both classes appear on the chain).
class SbSearch {
 public:
  SbSearch(const Poset& p, const Budgets& budgets) : p_(p), budgets_(budgets) {
    for (std::size_t e = 0; e < p.covers().size(); ++e)
      edge_index_[p.covers()[e]] = static_cast<int>(e);
    parent_.resize(p.covers().size());
    std::iota(parent_.begin(), parent_.end(), 0);
    rank_.assign(p.covers().size(), 0);
    build_constraints();
  }

  SbExistsResult run() {
    bool ok;
    try {
      ok = propagate_and_branch();
    } catch (const SearchBudgetHit&) {
      return SbUnknown{nodes_};
    }
    if (!ok) return ObstructionCertificate{CspRefutation{nodes_, triples_.size()}};
    EdgeLabeling lab;
    for (std::size_t e = 0; e < p_.covers().size(); ++e)
      lab.labels[p_.covers()[e]] = find(static_cast<int>(e));
    return SbSat{std::move(lab)};
  }

 private:
  struct SearchBudgetHit {};

  struct Triple {
    int a, b;                             // edge ids of (u,v) and (u,w)
    std::vector<std::vector<int>> chains; // chains as edge-id lists
    std::uint64_t length_key;             // total length of [u, v v w], for ordering
  };

  void build_constraints() {
    for (int u = 0; u < p_.size(); ++u) {
      const auto& ups = p_.up_covers(u);
      for (std::size_t i = 0; i < ups.size(); ++i)
        for (std::size_t j = i + 1; j < ups.size(); ++j) {
          int v = ups[i], w = ups[j];
          auto top = p_.try_join(v, w);
          if (!top) throw ToolkitError(ErrorKind::NotUnique, "input poset is not a lattice");
          Triple t;
          t.a = edge_index_.at({u, v});
          t.b = edge_index_.at({u, w});
          t.length_key = total_length(p_, u, *top, budgets_.chain_budget);
          for (const auto& chain : saturated_chains(p_, u, *top, budgets_.chain_budget)) {
            std::vector<int> edges;
            for (std::size_t k = 0; k + 1 < chain.steps.size(); ++k)
              edges.push_back(edge_index_.at({chain.steps[k], chain.steps[k + 1]}));
            t.chains.push_back(std::move(edges));
          }
          triples_.push_back(std::move(t));
        }
    }
    // Small hard constraints first maximizes propagation.
    std::stable_sort(triples_.begin(), triples_.end(),
                     [](const Triple& x, const Triple& y) { return x.length_key < y.length_key; });
    for (const auto& t : triples_) diseq_.emplace_back(t.a, t.b);
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  bool same(int x, int y) const { return find(x) == find(y); }

  bool diseq_violated() const {
    for (auto [a, b] : diseq_)
      if (same(a, b)) return true;
    return false;
  }

  bool forbidden(int x, int y) const {
    int rx = find(x), ry = find(y);
    for (auto [a, b] : diseq_) {
      int ra = find(a), rb = find(b);
      if ((ra == rx && rb == ry) || (ra == ry && rb == rx)) return true;
    }
    return false;
  }

  /// Union with trail for chronological backtracking.
  bool unite(int x, int y, std::vector<int>* trail) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return true;
    if (forbidden(rx, ry)) return false;
    if (rank_[rx] > rank_[ry]) std::swap(rx, ry);
    parent_[rx] = ry;
    if (rank_[rx] == rank_[ry]) ++rank_[ry];
    trail->push_back(rx);
    return true;
  }

  void undo(std::vector<int>& trail, std::size_t mark) {
    while (trail.size() > mark) {
      int x = trail.back();
      trail.pop_back();
      int r = parent_[x];
      parent_[x] = x;
      // rank_ is left monotone; harmless for correctness.
      (void)r;
    }
  }

  /// Fixpoint propagation.  Returns false on conflict; fills `branch` with an
  /// unresolved (edge, a, b) disjunction if any remains.
  bool propagate(std::vector<int>* trail, std::optional<std::array<int, 3>>* branch) {
    bool changed = true;
    while (changed) {
      changed = false;
      branch->reset();
      for (const auto& t : triples_) {
        for (const auto& chain : t.chains) {
          bool used_a = false, used_b = false;
          bool undecided = false;
          for (int e : chain) {
            bool ea = same(e, t.a), eb = same(e, t.b);
            if (ea) used_a = true;
            if (eb) used_b = true;
            if (ea || eb) continue;
            bool fa = forbidden(e, t.a), fb = forbidden(e, t.b);
            if (fa && fb) return false;
            if (fa) {
              if (!unite(e, t.b, trail)) return false;
              used_b = true;
              changed = true;
            } else if (fb) {
              if (!unite(e, t.a, trail)) return false;
              used_a = true;
              changed = true;
            } else {
              undecided = true;
              if (!*branch) *branch = std::array<int, 3>{e, t.a, t.b};
            }
          }
          // Both labels must occur on a fully decided chain.
          if (!undecided && !(used_a && used_b)) return false;
        }
      }
    }
    return !diseq_violated();
  }

  bool propagate_and_branch() {
    if (++nodes_ > budgets_.search_budget) throw SearchBudgetHit{};
    std::vector<int> trail;
    std::optional<std::array<int, 3>> branch;
    if (!propagate(&trail, &branch)) {
      undo(trail, 0);
      return false;
    }
    if (!branch) return true;  // all disjunctions resolved, all chains satisfied
    auto [e, a, b] = *branch;
    for (int target : {a, b}) {
      std::size_t mark = trail.size();
      if (unite(e, target, &trail)) {
        if (propagate_and_branch()) return true;
      }
      undo(trail, mark);
    }
    undo(trail, 0);
    return false;
  }

  const Poset& p_;
  Budgets budgets_;
  std::map<std::pair<int, int>, int> edge_index_;
  std::vector<Triple> triples_;
  std::vector<std::pair<int, int>> diseq_;
  mutable std::vector<int> parent_;
  std::vector<int> rank_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Decides whether the lattice admits a labeling satisfying the index-2
/// conditions.  Runs the third-atom scan first as a fast refutation.
inline SbExistsResult sb_exists(const Poset& p, const Budgets& budgets = {}) {
  if (auto cert = third_atom_obstruction(p)) return *cert;
  detail::SbSearch search(p, budgets);
  return search.run();
}

}  // namespace sblat
