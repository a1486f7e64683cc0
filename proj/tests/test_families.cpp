#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "sblat/families.hpp"
#include "sblat/labeling.hpp"

using namespace sblat;

TEST_CASE("distributive lattices from posets") {
  // Antichains give Boolean lattices.
  for (int n = 0; n <= 5; ++n)
    CHECK(distributive_from_poset(Poset::from_covers(n, {})).poset.size() == (1 << n));

  // A 3-chain gives a 4-chain of prefixes.
  LabeledLattice chain = distributive_from_poset(Poset::from_covers(3, {{0, 1}, {1, 2}}));
  CHECK(chain.poset.size() == 4);
  CHECK(chain.poset.covers().size() == 3);

  // 0 < 2 with 1 isolated: 6 order ideals (brute-force recount inline).
  Poset ground = Poset::from_covers(3, {{0, 2}});
  int ideal_count = 0;
  for (int mask = 0; mask < 8; ++mask)
    if (!((mask >> 2 & 1) && !(mask & 1))) ++ideal_count;
  CHECK(ideal_count == 6);
  CHECK(distributive_from_poset(ground).poset.size() == 6);

  // Rank of an ideal equals its cardinality: every maximal chain has length |P|.
  LabeledLattice jp = distributive_from_poset(ground);
  for (const auto& c : saturated_chains(jp.poset, 0, jp.poset.size() - 1))
    CHECK(c.steps.size() == 4);
  CHECK(verify_index2(jp).pass);
}

TEST_CASE("young intervals") {
  CHECK(young_interval(Partition{{}}, Partition::of({1})).poset.size() == 2);
  CHECK(young_interval(Partition{{}}, Partition::of({2, 1})).poset.size() == 5);
  for (int n = 1; n <= 5; ++n)
    CHECK(young_interval(Partition{{}}, Partition::of({n})).poset.size() == n + 1);

  LabeledLattice y = young_interval(Partition{{}}, Partition::of({2, 1}));
  CHECK(is_lattice(y.poset).ok);
  CHECK(verify_index2(y).pass);
  CHECK(verify_sb_full(y).pass);

  CHECK_THROWS_AS(young_interval(Partition::of({2}), Partition::of({1})), ToolkitError);
}

TEST_CASE("weak order of the symmetric group") {
  WeakOrderFamily s2 = weak_order_symmetric(2);
  CHECK(s2.lattice.poset.size() == 2);

  WeakOrderFamily s3 = weak_order_symmetric(3);
  const Poset& p = s3.lattice.poset;
  CHECK(p.size() == 6);
  CHECK(p.interval_atoms(*p.minimum(), *p.maximum()).size() == 2);
  auto chains = saturated_chains(p, *p.minimum(), *p.maximum());
  REQUIRE(chains.size() == 2);
  for (const auto& c : chains) CHECK(c.steps.size() == 4);  // length 3

  // Label sequences alternate: s_i s_j s_i and s_j s_i s_j.
  std::set<std::vector<int>> sequences;
  for (const auto& c : chains) {
    std::vector<int> seq;
    for (std::size_t k = 0; k + 1 < c.steps.size(); ++k)
      seq.push_back(s3.lattice.labeling.at(c.steps[k], c.steps[k + 1]));
    sequences.insert(seq);
  }
  CHECK(sequences == std::set<std::vector<int>>{{1, 2, 1}, {2, 1, 2}});

  for (int n = 2; n <= 5; ++n) {
    int fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(weak_order_symmetric(n).lattice.poset.size() == fact);
  }
  CHECK(is_lattice(weak_order_symmetric(4).lattice.poset).ok);
}

TEST_CASE("weak order of dihedral groups") {
  WeakOrderFamily d4 = weak_order_dihedral(4);
  const Poset& p = d4.lattice.poset;
  CHECK(p.size() == 8);
  auto chains = saturated_chains(p, *p.minimum(), *p.maximum());
  REQUIRE(chains.size() == 2);
  for (const auto& c : chains) CHECK(c.steps.size() == 5);  // two maximal chains of length 4
  CHECK(is_lattice(p).ok);
  CHECK(verify_index2(d4.lattice).pass);
  for (int m = 2; m <= 8; ++m) CHECK(weak_order_dihedral(m).lattice.poset.size() == 2 * m);
}

TEST_CASE("longest parabolic check") {
  WeakOrderFamily s3 = weak_order_symmetric(3);
  const Poset& p = s3.lattice.poset;
  int e = *p.minimum(), w0 = *p.maximum();
  auto full = longest_parabolic_check(s3, e, w0);
  CHECK(full.is_longest);
  CHECK(full.support_size == 2);

  // Atoms are longest elements of rank-1 parabolics.
  for (int a : p.up_covers(e)) {
    auto check = longest_parabolic_check(s3, e, a);
    CHECK(check.is_longest);
    CHECK(check.support_size == 1);
  }

  int s1s2 = -1;
  for (int v = 0; v < p.size(); ++v)
    if (s3.lattice.payloads[v] == "231") s1s2 = v;
  REQUIRE(s1s2 >= 0);
  CHECK_FALSE(longest_parabolic_check(s3, e, s1s2).is_longest);
}

TEST_CASE("tamari lattices") {
  TamariFamily t3 = tamari(3);
  CHECK(t3.lattice.poset.size() == 2);
  REQUIRE(t3.lattice.poset.covers().size() == 1);
  auto [lo, hi] = t3.lattice.poset.covers().front();
  CHECK(t3.lattice.labeling.at(lo, hi) == 2);

  CHECK(tamari(4).lattice.poset.size() == 5);
  CHECK(tamari(5).lattice.poset.size() == 14);
  CHECK(tamari(6).lattice.poset.size() == 42);

  TamariFamily t5 = tamari(5);
  CHECK(is_lattice(t5.lattice.poset).ok);
  CHECK(verify_index2(t5.lattice).pass);
  int bottom = *t5.lattice.poset.minimum();
  CHECK(t5.lattice.payloads[bottom] == "((((1,2),3),4),5)");
  CHECK(t5.lattice.payloads[*t5.lattice.poset.maximum()] == "(1,(2,(3,(4,5))))");
}

TEST_CASE("tamari rotation operators") {
  TamariFamily t5 = tamari(5);
  const Poset& p = t5.lattice.poset;
  const int n = t5.letters;

  // u_i is the unique up-cover with label i, or null.
  for (int v = 0; v < p.size(); ++v) {
    std::set<int> cover_labels;
    for (int w : p.up_covers(v)) {
      int label = t5.lattice.labeling.at(v, w);
      CHECK(t5.rotation_op(v, label) == w);
      cover_labels.insert(label);
    }
    CHECK(cover_labels.size() == p.up_covers(v).size());
    for (int i = 2; i < n; ++i)
      if (!cover_labels.count(i)) CHECK_FALSE(t5.rotation_op(v, i).has_value());
  }

  auto op = [&](std::optional<int> v, int i) -> std::optional<int> {
    return v ? t5.rotation_op(*v, i) : std::nullopt;
  };

  for (int v = 0; v < p.size(); ++v) {
    // A second label-i rotation is possible exactly after rotating a
    // (a,(b,c))d configuration with max(c) = i; the braid relation
    // u_j u_j u_i forces these exceptions to exist.
    for (int i = 2; i < n; ++i)
      CHECK(op(op(v, i), i).has_value() == t5.revealed_config(v, i));
    for (int i = 2; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        auto lhs = op(op(v, j), i);          // u_i u_j
        auto commuted = op(op(v, i), j);     // u_j u_i
        auto braided = op(op(op(v, i), j), j);  // u_j u_j u_i
        if (t5.nested_config(v, i, j))
          CHECK(lhs == braided);
        else
          CHECK(lhs == commuted);
        // The interval up to u_i(v) v u_j(v) has 4 or 5 elements.
        auto ui = op(v, i), uj = op(v, j);
        if (ui && uj) {
          int top = p.join(*ui, *uj);
          auto members = p.interval(v, top);
          CHECK((members.size() == 4 || members.size() == 5));
        }
      }
  }
}

TEST_CASE("dominance order") {
  UnlabeledFamily d3 = dominance(3);
  CHECK(d3.poset.size() == 3);
  CHECK(d3.poset.covers().size() == 2);
  CHECK(d3.payloads.front() == "(1,1,1)");
  CHECK(d3.payloads.back() == "(3)");

  CHECK(dominance(6).poset.size() == 11);
  CHECK(is_lattice(dominance(6).poset).ok);
  CHECK(dominance(15).poset.size() == 176);
}

TEST_CASE("dominance counterexample interval") {
  DominanceCounterexample ce = dominance_counterexample_interval();
  CHECK(ce.covered.size() == 4);
  for (int c : ce.covered) {
    CHECK(ce.ambient.poset.leq(ce.bottom, c));
    CHECK(ce.ambient.poset.leq(c, ce.top));
  }
  CHECK(is_lattice(ce.interval).ok);
}
