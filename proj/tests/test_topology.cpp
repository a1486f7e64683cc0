#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "sblat/families.hpp"
#include "sblat/topology.hpp"

using namespace sblat;

namespace {

// Builds a complex from facets by closing under subsets.
SimplicialComplex make_complex(int vertices, const std::vector<std::vector<int>>& facets) {
  std::set<std::vector<int>> faces;
  for (auto facet : facets) {
    std::sort(facet.begin(), facet.end());
    const int k = static_cast<int>(facet.size());
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
      std::vector<int> sub;
      for (int i = 0; i < k; ++i)
        if (mask & (std::uint32_t{1} << i)) sub.push_back(facet[i]);
      faces.insert(sub);
    }
  }
  SimplicialComplex c;
  c.vertex_count = vertices;
  for (const auto& f : faces) {
    int dim = static_cast<int>(f.size()) - 1;
    if (dim >= static_cast<int>(c.faces_by_dim.size())) c.faces_by_dim.resize(dim + 1);
    c.faces_by_dim[dim].push_back(f);
  }
  return c;
}

}  // namespace

TEST_CASE("order complex basics") {
  Poset antichain = Poset::from_covers(2, {});
  CHECK(reduced_euler(order_complex(antichain)) == 1);

  Poset empty = Poset::from_covers(0, {});
  SimplicialComplex c = order_complex(empty);
  CHECK(c.face_count() == 0);
  CHECK(reduced_euler(c) == -1);

  // Open interval of B_3: hexagon, 6 vertices and 6 edges.
  LabeledLattice b3 = boolean_lattice(3);
  auto [open, ids] = b3.poset.induced(b3.poset.open_interval(0, b3.poset.size() - 1));
  (void)ids;
  SimplicialComplex hex = order_complex(open);
  REQUIRE(hex.top_dimension() == 1);
  CHECK(hex.faces_by_dim[0].size() == 6);
  CHECK(hex.faces_by_dim[1].size() == 6);
  CHECK(reduced_euler(hex) == -1);
}

TEST_CASE("crosscut complex") {
  LabeledLattice b3 = boolean_lattice(3);
  const Poset& p = b3.poset;
  // Cover interval: no atoms strictly inside, empty complex.
  auto [lo, hi] = p.covers().front();
  SimplicialComplex cover = crosscut_complex(p, lo, hi);
  CHECK(cover.face_count() == 0);
  CHECK(reduced_euler(cover) == -1);

  // Full interval of B_3: boundary of a triangle.
  SimplicialComplex tri = crosscut_complex(p, 0, p.size() - 1);
  REQUIRE(tri.top_dimension() == 1);
  CHECK(tri.faces_by_dim[0].size() == 3);
  CHECK(tri.faces_by_dim[1].size() == 3);
  CHECK(reduced_euler(tri) == -1);
  CHECK(reduced_euler(tri) == mobius(p, 0, p.size() - 1));

  // Pentagon: two atoms joining to the top, so the crosscut is S^0.
  TamariFamily t4 = tamari(4);
  SimplicialComplex s0 =
      crosscut_complex(t4.lattice.poset, *t4.lattice.poset.minimum(), *t4.lattice.poset.maximum());
  CHECK(s0.top_dimension() == 0);
  CHECK(s0.faces_by_dim[0].size() == 2);
  CHECK(reduced_euler(s0) == 1);
}

TEST_CASE("reduced euler characteristic") {
  CHECK(reduced_euler(make_complex(1, {{0}})) == 0);
  CHECK(reduced_euler(make_complex(2, {{0}, {1}})) == 1);
  CHECK(reduced_euler(make_complex(3, {{0, 1}, {1, 2}, {0, 2}})) == -1);
}

TEST_CASE("betti numbers") {
  // Boundary of a triangle: rank 1 in degree 1.
  BettiVector circle = betti_numbers(make_complex(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(circle.in_degree(-1) == 0);
  CHECK(circle.in_degree(0) == 0);
  CHECK(circle.in_degree(1) == 1);

  // Full simplex: contractible.
  BettiVector simplex = betti_numbers(make_complex(3, {{0, 1, 2}}));
  CHECK(simplex.reduced_betti.empty());

  // Two points: S^0.
  BettiVector s0 = betti_numbers(make_complex(2, {{0}, {1}}));
  CHECK(s0.in_degree(0) == 1);
  CHECK(s0.in_degree(-1) == 0);

  // Empty complex: rank 1 in degree -1.
  SimplicialComplex empty;
  CHECK(betti_numbers(empty).in_degree(-1) == 1);

  // Sphere S^2 as the boundary of a tetrahedron.
  BettiVector sphere = betti_numbers(
      make_complex(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
  CHECK(sphere.in_degree(2) == 1);
  CHECK(sphere.in_degree(1) == 0);
  CHECK(sphere.in_degree(0) == 0);
}

TEST_CASE("euler equals mobius on open intervals") {
  WeakOrderFamily s3 = weak_order_symmetric(3);
  TamariFamily t5 = tamari(5);
  LabeledLattice b4 = boolean_lattice(4);
  for (const Poset* p : {&s3.lattice.poset, &t5.lattice.poset, &b4.poset}) {
    auto mu = mobius_all(*p);
    for (int u = 0; u < p->size(); ++u)
      for (int v = 0; v < p->size(); ++v) {
        if (!p->less(u, v)) continue;
        auto [open, ids] = p->induced(p->open_interval(u, v));
        (void)ids;
        SimplicialComplex c = order_complex(open);
        CHECK(reduced_euler(c) == mu[u][v]);
        CHECK(poset_order_complex_euler(open) == mu[u][v]);
        BettiVector betti = betti_numbers(c);
        CHECK(betti.alternating_sum() == reduced_euler(c));
      }
  }
}

TEST_CASE("classify interval") {
  LabeledLattice b3 = boolean_lattice(3);
  REQUIRE(verify_index2(b3).pass);
  CHECK(classify_interval(b3, true, 0, b3.poset.size() - 1) ==
        HomotopyClass{HomotopyClass::Sphere, 1});
  CHECK_THROWS_AS(classify_interval(b3, false, 0, b3.poset.size() - 1), ToolkitError);

  // Weak order S_3: the top of [e, s1 s2] is not a join of atoms.
  WeakOrderFamily s3 = weak_order_symmetric(3);
  REQUIRE(verify_index2(s3.lattice).pass);
  int s1s2 = -1;
  for (int v = 0; v < s3.lattice.poset.size(); ++v)
    if (s3.lattice.payloads[v] == "231") s1s2 = v;
  REQUIRE(s1s2 >= 0);
  int e = *s3.lattice.poset.minimum();
  CHECK(classify_interval(s3.lattice, true, e, s1s2).kind == HomotopyClass::Contractible);
  CHECK(mobius(s3.lattice.poset, e, s1s2) == 0);

  TamariFamily t4 = tamari(4);
  REQUIRE(verify_index2(t4.lattice).pass);
  CHECK(classify_interval(t4.lattice, true, *t4.lattice.poset.minimum(),
                          *t4.lattice.poset.maximum()) ==
        HomotopyClass{HomotopyClass::Sphere, 0});

  // Covers classify as Sphere(-1).
  auto [lo, hi] = b3.poset.covers().front();
  CHECK(classify_interval(b3, true, lo, hi) == HomotopyClass{HomotopyClass::Sphere, -1});
}

TEST_CASE("crosscut agrees with the order complex") {
  LabeledLattice b4 = boolean_lattice(4);
  TamariFamily t5 = tamari(5);
  for (const Poset* p : {&b4.poset, &t5.lattice.poset}) {
    for (int u = 0; u < p->size(); ++u)
      for (int v = 0; v < p->size(); ++v) {
        if (!p->less(u, v)) continue;
        CrosscutCheck check = crosscut_vs_order_check(*p, u, v);
        CHECK(check.euler_equal);
        if (check.betti_equal) CHECK(*check.betti_equal);
      }
  }
}
