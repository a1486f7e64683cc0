#include <catch2/catch_amalgamated.hpp>

#include "sblat/families.hpp"
#include "sblat/json_io.hpp"

using namespace sblat;

TEST_CASE("poset json round trip") {
  TamariFamily t5 = tamari(5);
  ordered_json j = poset_to_json(t5.lattice.poset);
  Poset back = poset_from_json(j);
  CHECK(back.covers() == t5.lattice.poset.covers());
  CHECK(poset_to_json(back) == j);

  // Reader accepts covers in any order; writer sorts.
  ordered_json shuffled = j;
  std::reverse(shuffled["covers"].begin(), shuffled["covers"].end());
  CHECK(poset_to_json(poset_from_json(shuffled)) == j);
}

TEST_CASE("labeled lattice json round trip") {
  WeakOrderFamily s3 = weak_order_symmetric(3);
  ordered_json j = labeled_lattice_to_json(s3.lattice);
  LabeledLattice back = labeled_lattice_from_json(j);
  CHECK(back.labeling.labels == s3.lattice.labeling.labels);
  CHECK(back.payloads == s3.lattice.payloads);
  CHECK(labeled_lattice_to_json(back) == j);
}

TEST_CASE("json rejects malformed input") {
  CHECK_THROWS_AS(poset_from_json(ordered_json::object()), ToolkitError);
  ordered_json bad;
  bad["n"] = 2;
  bad["covers"] = ordered_json::array({ordered_json::array({0, 1, 2})});
  CHECK_THROWS_AS(poset_from_json(bad), ToolkitError);
}

TEST_CASE("report serialization is stable") {
  LabeledLattice b3 = boolean_lattice(3);
  for (auto& [edge, label] : b3.labeling.labels) label = 0;
  SBReport report = verify_index2(b3);
  ordered_json j = sb_report_to_json(report);
  CHECK(j["verdict"] == "fail");
  CHECK(j["checked_formulation"] == "index2");
  CHECK_FALSE(j["violations"].empty());
  CHECK(j["violations"][0]["condition"] == 1);
  CHECK(sb_report_to_text(report).starts_with("FAIL"));
}

TEST_CASE("dot export") {
  LabeledLattice b2 = boolean_lattice(2);
  std::string dot = poset_to_dot(b2.poset, b2.payloads, &b2.labeling);
  CHECK(dot.find("digraph poset") != std::string::npos);
  CHECK(dot.find("n0 -> n1") != std::string::npos);
  CHECK(dot.find("rank=same") != std::string::npos);
}

TEST_CASE("complex serialization") {
  LabeledLattice b3 = boolean_lattice(3);
  SimplicialComplex c = crosscut_complex(b3.poset, 0, b3.poset.size() - 1);
  ordered_json j = complex_to_json(c);
  CHECK(j["vertices"] == 3);
  CHECK(j["facets"].size() == 3);  // boundary of a triangle
}
