#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sblat/families.hpp"
#include "sblat/labeling.hpp"

using namespace sblat;

namespace {

LabeledLattice constant_labels(const Poset& p) {
  LabeledLattice L;
  L.poset = p;
  for (auto [lo, hi] : p.covers()) L.labeling.labels[{lo, hi}] = 0;
  return L;
}

// Three atoms a,b,c pairwise joining to the same element m below the top;
// any pair's join then contains the third atom.
Poset third_atom_lattice() {
  // 0 = bottom, 1,2,3 = atoms, 4 = m, 5 = top
  return Poset::from_covers(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 5}});
}

}  // namespace

TEST_CASE("verify_index2 on the built-in families") {
  CHECK(verify_index2(weak_order_symmetric(3).lattice).pass);
  CHECK(verify_index2(boolean_lattice(3)).pass);
  CHECK(verify_index2(tamari(4).lattice).pass);

  LabeledLattice bad = constant_labels(boolean_lattice(3).poset);
  SBReport report = verify_index2(bad);
  CHECK_FALSE(report.pass);
  REQUIRE_FALSE(report.violations.empty());
  CHECK(report.violations.front().condition == 1);
  CHECK(report.violations.front().u == 0);  // bottom element
}

TEST_CASE("verify_sb_full on the built-in families") {
  CHECK(verify_sb_full(weak_order_symmetric(3).lattice).pass);
  CHECK(verify_sb_full(tamari(4).lattice).pass);

  // Chain of length 3 with distinct labels: single atom per interval.
  LabeledLattice chain;
  chain.poset = Poset::from_covers(4, {{0, 1}, {1, 2}, {2, 3}});
  chain.labeling.labels = {{{0, 1}, 0}, {{1, 2}, 1}, {{2, 3}, 2}};
  CHECK(verify_sb_full(chain).pass);
  CHECK(verify_index2(chain).pass);

  LabeledLattice bad = constant_labels(boolean_lattice(3).poset);
  SBReport report = verify_sb_full(bad);
  CHECK_FALSE(report.pass);
  CHECK(report.violations.front().condition == 1);
}

TEST_CASE("equivalence crosscheck including random relabelings") {
  CHECK(equivalence_crosscheck(weak_order_symmetric(3).lattice).agree);
  CHECK(equivalence_crosscheck(boolean_lattice(4)).agree);
  CHECK(equivalence_crosscheck(tamari(5).lattice).agree);

  auto bad = constant_labels(boolean_lattice(3).poset);
  auto cc = equivalence_crosscheck(bad);
  CHECK(cc.agree);
  CHECK_FALSE(cc.index2_pass);
  CHECK_FALSE(cc.full_pass);

  // 100 seeded random relabelings of T_5: verdicts must always match.
  TamariFamily t5 = tamari(5);
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    LabeledLattice random = t5.lattice;
    for (auto& [edge, label] : random.labeling.labels) label = pick(rng);
    CHECK(equivalence_crosscheck(random).agree);
  }
}

TEST_CASE("label set constancy") {
  WeakOrderFamily s3 = weak_order_symmetric(3);
  const Poset& p = s3.lattice.poset;
  auto verdict = label_set_constancy(s3.lattice, *p.minimum(), *p.maximum());
  CHECK(verdict.constant);
  CHECK(verdict.common_set == std::set<int>{1, 2});

  LabeledLattice chain;
  chain.poset = Poset::from_covers(3, {{0, 1}, {1, 2}});
  chain.labeling.labels = {{{0, 1}, 5}, {{1, 2}, 6}};
  CHECK(label_set_constancy(chain, 0, 2).constant);

  TamariFamily t5 = tamari(5);
  for (int u = 0; u < t5.lattice.poset.size(); ++u)
    for (int v = 0; v < t5.lattice.poset.size(); ++v)
      if (t5.lattice.poset.leq(u, v))
        CHECK(label_set_constancy(t5.lattice, u, v).constant);
}

TEST_CASE("third atom obstruction") {
  CHECK_FALSE(third_atom_obstruction(boolean_lattice(3).poset));
  CHECK_FALSE(third_atom_obstruction(weak_order_symmetric(4).lattice.poset));

  Poset p = third_atom_lattice();
  REQUIRE(is_lattice(p).ok);
  auto cert = third_atom_obstruction(p);
  REQUIRE(cert.has_value());
  REQUIRE(cert->is_third_atom());
  auto witness = std::get<ThirdAtomWitness>(cert->witness);
  CHECK(witness.u == 0);
  std::set<int> atoms{witness.v, witness.w, witness.x};
  CHECK(atoms == std::set<int>{1, 2, 3});
}

TEST_CASE("distinct joins check") {
  LabeledLattice b4 = boolean_lattice(4);
  CHECK(distinct_joins_check(b4, 0, b4.poset.size() - 1).ok);

  WeakOrderFamily s3 = weak_order_symmetric(3);
  const Poset& p = s3.lattice.poset;
  CHECK(distinct_joins_check(s3.lattice, *p.minimum(), *p.maximum()).ok);
  // 2 atoms => 4 distinct joins: e, s1, s2, s1 v s2 = w0.
  auto atoms = p.interval_atoms(*p.minimum(), *p.maximum());
  REQUIRE(atoms.size() == 2);
  CHECK(p.join(atoms[0], atoms[1]) == *p.maximum());

  TamariFamily t6 = tamari(6);
  for (int u = 0; u < t6.lattice.poset.size(); ++u)
    for (int v = 0; v < t6.lattice.poset.size(); ++v)
      if (t6.lattice.poset.less(u, v))
        CHECK(distinct_joins_check(t6.lattice, u, v).ok);
}

TEST_CASE("sb_exists finds witnesses and refutations") {
  auto sat = sb_exists(boolean_lattice(3).poset);
  REQUIRE(std::holds_alternative<SbSat>(sat));
  {
    LabeledLattice witness;
    witness.poset = boolean_lattice(3).poset;
    witness.labeling = std::get<SbSat>(sat).labeling;
    CHECK(verify_index2(witness).pass);
  }

  auto pentagon = sb_exists(tamari(4).lattice.poset);
  REQUIRE(std::holds_alternative<SbSat>(pentagon));

  auto unsat = sb_exists(third_atom_lattice());
  REQUIRE(std::holds_alternative<ObstructionCertificate>(unsat));
  CHECK(std::get<ObstructionCertificate>(unsat).is_third_atom());
}

TEST_CASE("index2 pass implies structural consequences") {
  // Structural invariants on a verified family: constant label sets, atoms
  // of [u, join(S)] exactly S, injective up-star labels.
  WeakOrderFamily s4 = weak_order_symmetric(4);
  REQUIRE(verify_index2(s4.lattice).pass);
  const Poset& p = s4.lattice.poset;
  for (int u = 0; u < p.size(); ++u) {
    std::set<int> seen;
    for (int v : p.up_covers(u)) CHECK(seen.insert(s4.lattice.labeling.at(u, v)).second);
  }
  for (int u = 0; u < p.size(); ++u)
    for (int v = 0; v < p.size(); ++v)
      if (p.less(u, v)) {
        CHECK(label_set_constancy(s4.lattice, u, v).constant);
        CHECK(distinct_joins_check(s4.lattice, u, v).ok);
      }
}
