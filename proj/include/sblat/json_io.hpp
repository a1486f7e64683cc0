#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sblat/labeling.hpp"
#include "sblat/poset.hpp"
#include "sblat/topology.hpp"

namespace sblat {

using ordered_json = nlohmann::ordered_json;

inline ordered_json poset_to_json(const Poset& p) {
  ordered_json j;
  j["n"] = p.size();
  auto covers = p.covers();  // already sorted lexicographically
  ordered_json arr = ordered_json::array();
  for (auto [lo, hi] : covers) arr.push_back({lo, hi});
  j["covers"] = std::move(arr);
  return j;
}

inline Poset poset_from_json(const ordered_json& j) {
  if (!j.contains("n") || !j.contains("covers"))
    throw ToolkitError(ErrorKind::InvalidInput, "poset JSON needs fields n and covers");
  std::vector<std::pair<int, int>> covers;
  for (const auto& pair : j.at("covers")) {
    if (!pair.is_array() || pair.size() != 2)
      throw ToolkitError(ErrorKind::InvalidInput, "cover entries must be [lo,hi] pairs");
    covers.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }
  return Poset::from_covers(j.at("n").get<int>(), std::move(covers));
}

inline ordered_json labeled_lattice_to_json(const LabeledLattice& L) {
  ordered_json j = poset_to_json(L.poset);
  ordered_json labels = ordered_json::array();
  for (const auto& [edge, label] : L.labeling.labels)  // map order = lexicographic
    labels.push_back({edge.first, edge.second, label});
  j["labels"] = std::move(labels);
  if (!L.labeling.label_names.empty()) {
    ordered_json names = ordered_json::object();
    for (const auto& [id, name] : L.labeling.label_names) names[std::to_string(id)] = name;
    j["label_names"] = std::move(names);
  }
  if (!L.payloads.empty()) j["payloads"] = L.payloads;
  if (!L.family_tag.empty()) j["family"] = L.family_tag;
  return j;
}

inline LabeledLattice labeled_lattice_from_json(const ordered_json& j) {
  LabeledLattice L;
  L.poset = poset_from_json(j);
  if (!j.contains("labels"))
    throw ToolkitError(ErrorKind::InvalidInput, "labeled lattice JSON needs a labels array");
  for (const auto& entry : j.at("labels")) {
    if (!entry.is_array() || entry.size() != 3)
      throw ToolkitError(ErrorKind::InvalidInput, "label entries must be [lo,hi,label]");
    L.labeling.labels[{entry[0].get<int>(), entry[1].get<int>()}] = entry[2].get<int>();
  }
  if (j.contains("label_names"))
    for (const auto& [key, name] : j.at("label_names").items())
      L.labeling.label_names[std::stoi(key)] = name.get<std::string>();
  if (j.contains("payloads")) L.payloads = j.at("payloads").get<std::vector<std::string>>();
  if (j.contains("family")) L.family_tag = j.at("family").get<std::string>();
  L.labeling.check_domain(L.poset);
  return L;
}

inline ordered_json complex_to_json(const SimplicialComplex& c) {
  ordered_json j;
  j["vertices"] = c.vertex_count;
  ordered_json facets = ordered_json::array();
  for (const auto& f : c.facets()) facets.push_back(f);
  j["facets"] = std::move(facets);
  return j;
}

inline ordered_json sb_report_to_json(const SBReport& r) {
  ordered_json j;
  j["verdict"] = r.pass ? "pass" : "fail";
  switch (r.checked) {
    case SBFormulation::Index2: j["checked_formulation"] = "index2"; break;
    case SBFormulation::LowerSB: j["checked_formulation"] = "lower_sb"; break;
    case SBFormulation::FullSB: j["checked_formulation"] = "full_sb"; break;
  }
  ordered_json viol = ordered_json::array();
  for (const auto& v : r.violations) {
    ordered_json entry;
    entry["condition"] = v.condition;
    entry["u"] = v.u;
    if (v.v >= 0) entry["v"] = v.v;
    if (v.w >= 0) entry["w"] = v.w;
    if (v.top >= 0) entry["top"] = v.top;
    if (!v.atoms.empty()) entry["atoms"] = v.atoms;
    if (!v.chain.empty()) entry["chain"] = v.chain;
    viol.push_back(std::move(entry));
  }
  j["violations"] = std::move(viol);
  return j;
}

inline std::string sb_report_to_text(const SBReport& r) {
  std::string out = r.pass ? "PASS" : "FAIL";
  out += " (";
  out += (r.checked == SBFormulation::Index2 ? "index2" : "full_sb");
  out += ", " + std::to_string(r.violations.size()) + " violations)\n";
  for (const auto& v : r.violations) {
    out += "  condition " + std::to_string(v.condition) + " at u=" + std::to_string(v.u);
    if (v.v >= 0) out += " v=" + std::to_string(v.v);
    if (v.w >= 0) out += " w=" + std::to_string(v.w);
    if (v.top >= 0) out += " top=" + std::to_string(v.top);
    if (!v.chain.empty()) {
      out += " chain=";
      for (std::size_t i = 0; i < v.chain.size(); ++i)
        out += (i ? "<" : "") + std::to_string(v.chain[i]);
    }
    out += "\n";
  }
  return out;
}

/// DOT export: one node per element (payload labels when present), one edge
/// per cover, ranked bottom-up by height.
inline std::string poset_to_dot(const Poset& p, const std::vector<std::string>& payloads = {},
                                const EdgeLabeling* labeling = nullptr) {
  std::vector<int> height(p.size(), 0);
  for (int v : p.topo_order())
    for (int w : p.up_covers(v)) height[w] = std::max(height[w], height[v] + 1);
  std::string out = "digraph poset {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int v = 0; v < p.size(); ++v) {
    std::string label = v < static_cast<int>(payloads.size()) ? payloads[v] : std::to_string(v);
    out += "  n" + std::to_string(v) + " [label=\"" + label + "\"];\n";
  }
  int max_h = 0;
  for (int h : height) max_h = std::max(max_h, h);
  for (int h = 0; h <= max_h; ++h) {
    std::string rank = "  { rank=same;";
    bool any = false;
    for (int v = 0; v < p.size(); ++v)
      if (height[v] == h) {
        rank += " n" + std::to_string(v) + ";";
        any = true;
      }
    rank += " }\n";
    if (any) out += rank;
  }
  for (auto [lo, hi] : p.covers()) {
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi);
    if (labeling) {
      int id = labeling->at(lo, hi);
      auto it = labeling->label_names.find(id);
      out += " [label=\"" + (it != labeling->label_names.end() ? it->second : std::to_string(id)) + "\"]";
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace sblat
