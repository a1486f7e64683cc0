// Command-line front end: generate family lattices, verify SB-labelings,
// tabulate Mobius values, classify interval homotopy types against the
// topology oracles, and run the existence search.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "sblat/families.hpp"
#include "sblat/json_io.hpp"
#include "sblat/labeling.hpp"
#include "sblat/topology.hpp"
#include "sblat/version.hpp"

namespace {

using namespace sblat;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInvalid = 3;

struct Options {
  std::string family;
  std::string input;
  std::string out;
  std::string format = "json";
  std::uint64_t chain_budget = 200000;
  std::uint64_t face_budget = 50000;
  std::uint64_t search_budget = 2000000;
  long seed = 0;
  int jobs = 1;
  int u = -1, v = -1;
};

Budgets budgets_of(const Options& opt) {
  Budgets b;
  b.chain_budget = opt.chain_budget;
  b.face_budget = opt.face_budget;
  b.search_budget = opt.search_budget;
  return b;
}

/// A loaded lattice: labeled when the source carries labels, bare otherwise.
struct Loaded {
  Poset poset;
  std::optional<EdgeLabeling> labeling;
  std::vector<std::string> payloads;
  std::string tag;

  LabeledLattice labeled() const {
    if (!labeling)
      throw ToolkitError(ErrorKind::InvalidInput, "this input carries no edge labeling");
    return LabeledLattice{poset, *labeling, payloads, tag};
  }
};

std::vector<int> parse_parts(const std::string& s) {
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) parts.push_back(std::stoi(item));
  return parts;
}

Loaded from_family(const std::string& spec) {
  auto starts = [&](const std::string& prefix) { return spec.rfind(prefix, 0) == 0; };
  auto tail = [&](std::size_t n) { return spec.substr(n); };
  if (starts("boolean:")) {
    LabeledLattice L = boolean_lattice(std::stoi(tail(8)));
    return {L.poset, L.labeling, L.payloads, L.family_tag};
  }
  if (starts("jp:")) {
    std::ifstream in(tail(3));
    if (!in) throw ToolkitError(ErrorKind::InvalidInput, "cannot open " + tail(3));
    ordered_json j = ordered_json::parse(in);
    LabeledLattice L = distributive_from_poset(poset_from_json(j));
    return {L.poset, L.labeling, L.payloads, L.family_tag};
  }
  if (starts("young:")) {
    std::string rest = tail(6);
    auto slash = rest.find('/');
    if (slash == std::string::npos)
      throw ToolkitError(ErrorKind::InvalidInput, "young:<mu>/<lambda>, e.g. young:/3,2,1");
    LabeledLattice L = young_interval(Partition::of(parse_parts(rest.substr(0, slash))),
                                      Partition::of(parse_parts(rest.substr(slash + 1))));
    return {L.poset, L.labeling, L.payloads, L.family_tag};
  }
  if (starts("weak:sym:")) {
    WeakOrderFamily f = weak_order_symmetric(std::stoi(tail(9)));
    return {f.lattice.poset, f.lattice.labeling, f.lattice.payloads, f.lattice.family_tag};
  }
  if (starts("weak:dih:")) {
    WeakOrderFamily f = weak_order_dihedral(std::stoi(tail(9)));
    return {f.lattice.poset, f.lattice.labeling, f.lattice.payloads, f.lattice.family_tag};
  }
  if (starts("weak:")) {
    throw ToolkitError(ErrorKind::UnsupportedType,
                       "only weak:sym:n and weak:dih:m are implemented");
  }
  if (starts("tamari:")) {
    TamariFamily f = tamari(std::stoi(tail(7)));
    return {f.lattice.poset, f.lattice.labeling, f.lattice.payloads, f.lattice.family_tag};
  }
  if (starts("dominance:")) {
    UnlabeledFamily f = dominance(std::stoi(tail(10)));
    return {f.poset, std::nullopt, f.payloads, f.family_tag};
  }
  if (spec == "dominance-counterexample") {
    DominanceCounterexample ce = dominance_counterexample_interval();
    std::vector<std::string> payloads;
    for (int id : ce.member_ids) payloads.push_back(ce.ambient.payloads[id]);
    return {ce.interval, std::nullopt, payloads, "dominance-counterexample"};
  }
  throw ToolkitError(ErrorKind::InvalidInput, "unknown family: " + spec);
}

Loaded load(const Options& opt) {
  if (!opt.family.empty()) return from_family(opt.family);
  if (opt.input.empty())
    throw ToolkitError(ErrorKind::InvalidInput, "one of --family or --input is required");
  std::ifstream in(opt.input);
  if (!in) throw ToolkitError(ErrorKind::InvalidInput, "cannot open " + opt.input);
  ordered_json j = ordered_json::parse(in);
  Loaded loaded;
  if (j.contains("labels")) {
    LabeledLattice L = labeled_lattice_from_json(j);
    loaded = {L.poset, L.labeling, L.payloads, L.family_tag};
  } else {
    loaded.poset = poset_from_json(j);
    if (j.contains("payloads")) loaded.payloads = j["payloads"].get<std::vector<std::string>>();
  }
  return loaded;
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(opt.out);
    if (!out) throw ToolkitError(ErrorKind::InvalidInput, "cannot write " + opt.out);
    out << text;
  }
}

ordered_json config_json(const Options& opt, const std::string& command) {
  ordered_json j;
  j["version"] = kVersion;
  j["command"] = command;
  if (!opt.family.empty()) j["family"] = opt.family;
  if (!opt.input.empty()) j["input"] = opt.input;
  j["chain_budget"] = opt.chain_budget;
  j["face_budget"] = opt.face_budget;
  j["search_budget"] = opt.search_budget;
  j["seed"] = opt.seed;
  j["jobs"] = opt.jobs;
  return j;
}

int cmd_gen(const Options& opt) {
  Loaded loaded = load(opt);
  if (opt.format == "dot") {
    const EdgeLabeling* lab = loaded.labeling ? &*loaded.labeling : nullptr;
    emit(opt, poset_to_dot(loaded.poset, loaded.payloads, lab));
  } else {
    ordered_json j = loaded.labeling ? labeled_lattice_to_json(loaded.labeled())
                                     : poset_to_json(loaded.poset);
    if (!loaded.labeling && !loaded.payloads.empty()) j["payloads"] = loaded.payloads;
    if (!loaded.labeling && !loaded.tag.empty()) j["family"] = loaded.tag;
    emit(opt, j.dump(2));
  }
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  Loaded loaded = load(opt);
  LabeledLattice L = loaded.labeled();
  Budgets budgets = budgets_of(opt);
  auto verdict = is_lattice(L.poset);
  if (!verdict.ok)
    throw ToolkitError(ErrorKind::NotUnique, "input poset is not a lattice");
  SBReport index2 = verify_index2(L, budgets);
  SBReport full = verify_sb_full(L, budgets);
  bool agree = index2.pass == full.pass;
  ordered_json j;
  j["config"] = config_json(opt, "verify");
  j["index2"] = sb_report_to_json(index2);
  j["full_sb"] = sb_report_to_json(full);
  j["formulations_agree"] = agree;
  if (opt.format == "text") {
    std::string text = "index2:  " + sb_report_to_text(index2);
    text += "full_sb: " + sb_report_to_text(full);
    text += std::string("agreement: ") + (agree ? "yes" : "NO (toolkit bug)") + "\n";
    emit(opt, text);
  } else {
    emit(opt, j.dump(2));
  }
  if (!agree) return kExitViolation;  // equivalence theorem violated: a bug
  return index2.pass ? kExitOk : kExitViolation;
}

int cmd_mobius(const Options& opt) {
  Loaded loaded = load(opt);
  auto mu = mobius_all(loaded.poset);
  if (opt.format == "tsv" || opt.format == "text") {
    std::string text = "u\tv\tmu\n";
    for (int u = 0; u < loaded.poset.size(); ++u)
      for (int v = 0; v < loaded.poset.size(); ++v)
        if (loaded.poset.leq(u, v))
          text += std::to_string(u) + "\t" + std::to_string(v) + "\t" +
                  std::to_string(mu[u][v]) + "\n";
    emit(opt, text);
  } else {
    ordered_json j;
    j["config"] = config_json(opt, "mobius");
    ordered_json rows = ordered_json::array();
    for (int u = 0; u < loaded.poset.size(); ++u)
      for (int v = 0; v < loaded.poset.size(); ++v)
        if (loaded.poset.leq(u, v)) rows.push_back({u, v, mu[u][v]});
    j["mobius"] = std::move(rows);
    emit(opt, j.dump(2));
  }
  return kExitOk;
}

int cmd_classify(const Options& opt) {
  Loaded loaded = load(opt);
  LabeledLattice L = loaded.labeled();
  Budgets budgets = budgets_of(opt);
  if (!verify_index2(L, budgets).pass)
    throw ToolkitError(ErrorKind::NotVerified, "labeling is not SB; classify needs a certificate");
  auto mu = mobius_all(L.poset);
  bool all_ok = true;
  ordered_json rows = ordered_json::array();
  std::string tsv = "u\tv\tatoms_d\tpredicted_class\tmobius\teuler_crosscut\tbetti\n";
  for (int u = 0; u < L.poset.size(); ++u)
    for (int v = 0; v < L.poset.size(); ++v) {
      if (!L.poset.less(u, v)) continue;
      auto atoms = L.poset.interval_atoms(u, v);
      int d = static_cast<int>(atoms.size());
      HomotopyClass cls = classify_interval(L, true, u, v);
      SimplicialComplex cross = crosscut_complex(L.poset, u, v, budgets.atom_cap);
      long long euler = reduced_euler(cross);
      BettiVector betti = betti_numbers(cross, budgets.face_budget);
      // Prediction vs Mobius oracle.
      long long expected_mu = cls.kind == HomotopyClass::Sphere ? (d % 2 ? -1 : 1) : 0;
      bool ok = (mu[u][v] == expected_mu) && (euler == mu[u][v]);
      if (cls.kind == HomotopyClass::Sphere)
        ok = ok && betti.in_degree(cls.sphere_dim) == 1 && betti.alternating_sum() == euler;
      else
        ok = ok && betti.reduced_betti.empty();
      all_ok = all_ok && ok;
      std::string bs = "[";
      for (std::size_t i = 0; i < betti.reduced_betti.size(); ++i)
        bs += (i ? "," : "") + std::to_string(betti.reduced_betti[i]);
      bs += "]";
      tsv += std::to_string(u) + "\t" + std::to_string(v) + "\t" + std::to_string(d) + "\t" +
             cls.to_string() + "\t" + std::to_string(mu[u][v]) + "\t" + std::to_string(euler) +
             "\t" + bs + "\n";
      rows.push_back({{"u", u},
                      {"v", v},
                      {"atoms_d", d},
                      {"predicted_class", cls.to_string()},
                      {"mobius", mu[u][v]},
                      {"euler_crosscut", euler},
                      {"betti", betti.reduced_betti},
                      {"consistent", ok}});
    }
  if (opt.format == "tsv" || opt.format == "text") {
    emit(opt, tsv);
  } else {
    ordered_json j;
    j["config"] = config_json(opt, "classify");
    j["rows"] = std::move(rows);
    j["all_consistent"] = all_ok;
    emit(opt, j.dump(2));
  }
  return all_ok ? kExitOk : kExitViolation;
}

int cmd_homology(const Options& opt) {
  Budgets budgets = budgets_of(opt);
  SimplicialComplex complex;
  if (!opt.input.empty()) {
    std::ifstream in(opt.input);
    if (!in) throw ToolkitError(ErrorKind::InvalidInput, "cannot open " + opt.input);
    ordered_json j = ordered_json::parse(in);
    if (j.contains("facets")) {
      complex.vertex_count = j.at("vertices").get<int>();
      for (const auto& facet : j.at("facets")) {
        std::vector<int> f = facet.get<std::vector<int>>();
        std::sort(f.begin(), f.end());
        const int k = static_cast<int>(f.size());
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
          std::vector<int> sub;
          for (int i = 0; i < k; ++i)
            if (mask & (std::uint32_t{1} << i)) sub.push_back(f[i]);
          int dim = static_cast<int>(sub.size()) - 1;
          if (dim >= static_cast<int>(complex.faces_by_dim.size()))
            complex.faces_by_dim.resize(dim + 1);
          auto& bucket = complex.faces_by_dim[dim];
          if (std::find(bucket.begin(), bucket.end(), sub) == bucket.end())
            bucket.push_back(std::move(sub));
        }
      }
    } else if (opt.u >= 0 && opt.v >= 0) {
      Poset p = poset_from_json(j);
      auto [open, ids] = p.induced(p.open_interval(opt.u, opt.v));
      (void)ids;
      complex = order_complex(open, budgets.face_budget);
    } else {
      throw ToolkitError(ErrorKind::InvalidInput, "need a complex file or --u/--v interval");
    }
  } else {
    Loaded loaded = load(opt);
    if (opt.u < 0 || opt.v < 0)
      throw ToolkitError(ErrorKind::InvalidInput, "homology on a family needs --u and --v");
    auto [open, ids] = loaded.poset.induced(loaded.poset.open_interval(opt.u, opt.v));
    (void)ids;
    complex = order_complex(open, budgets.face_budget);
  }
  BettiVector betti = betti_numbers(complex, budgets.face_budget);
  ordered_json j;
  j["config"] = config_json(opt, "homology");
  j["reduced_betti_from_degree_minus1"] = betti.reduced_betti;
  j["reduced_euler"] = reduced_euler(complex);
  emit(opt, j.dump(2));
  return kExitOk;
}

int cmd_sb_exists(const Options& opt) {
  Loaded loaded = load(opt);
  Budgets budgets = budgets_of(opt);
  SbExistsResult result = sb_exists(loaded.poset, budgets);
  ordered_json j;
  j["config"] = config_json(opt, "sb-exists");
  int status = kExitOk;
  if (std::holds_alternative<SbSat>(result)) {
    j["result"] = "SAT";
    LabeledLattice witness{loaded.poset, std::get<SbSat>(result).labeling, loaded.payloads, loaded.tag};
    j["witness"] = labeled_lattice_to_json(witness);
    j["witness_verified"] = verify_index2(witness, budgets).pass;
  } else if (std::holds_alternative<ObstructionCertificate>(result)) {
    j["result"] = "UNSAT";
    const auto& cert = std::get<ObstructionCertificate>(result);
    if (cert.is_third_atom()) {
      const auto& w = std::get<ThirdAtomWitness>(cert.witness);
      j["certificate"] = {{"kind", "third_atom"}, {"u", w.u}, {"v", w.v}, {"w", w.w}, {"x", w.x}};
    } else {
      const auto& r = std::get<CspRefutation>(cert.witness);
      j["certificate"] = {{"kind", "csp_refutation"},
                          {"nodes_explored", r.nodes_explored},
                          {"constraint_count", r.constraint_count}};
    }
  } else {
    j["result"] = "UNKNOWN";
    j["nodes_explored"] = std::get<SbUnknown>(result).nodes_explored;
    status = kExitBudget;
  }
  emit(opt, j.dump(2));
  return status;
}

int cmd_report(const Options& opt) {
  Loaded loaded = load(opt);
  Budgets budgets = budgets_of(opt);
  ordered_json j;
  j["config"] = config_json(opt, "report");
  j["elements"] = loaded.poset.size();
  j["covers"] = loaded.poset.covers().size();
  auto lattice_verdict = is_lattice(loaded.poset);
  j["is_lattice"] = lattice_verdict.ok;
  bool ok = lattice_verdict.ok;

  auto mu = mobius_all(loaded.poset);
  bool mobius_small = true;
  for (int u = 0; u < loaded.poset.size() && mobius_small; ++u)
    for (int v = 0; v < loaded.poset.size(); ++v)
      if (loaded.poset.leq(u, v) && (mu[u][v] < -1 || mu[u][v] > 1)) {
        mobius_small = false;
        break;
      }
  j["mobius_in_0_pm1"] = mobius_small;

  if (loaded.labeling && lattice_verdict.ok) {
    LabeledLattice L = loaded.labeled();
    SBReport index2 = verify_index2(L, budgets);
    SBReport full = verify_sb_full(L, budgets);
    j["index2"] = sb_report_to_json(index2);
    j["full_sb"] = sb_report_to_json(full);
    j["formulations_agree"] = (index2.pass == full.pass);
    ok = ok && index2.pass && full.pass && (index2.pass == full.pass) && mobius_small;

    bool classification_ok = index2.pass;
    bool crosscut_ok = true;
    if (index2.pass) {
      for (int u = 0; u < L.poset.size(); ++u)
        for (int v = 0; v < L.poset.size(); ++v) {
          if (!L.poset.less(u, v)) continue;
          HomotopyClass cls = classify_interval(L, true, u, v);
          int d = static_cast<int>(L.poset.interval_atoms(u, v).size());
          long long expected = cls.kind == HomotopyClass::Sphere ? (d % 2 ? -1 : 1) : 0;
          if (mu[u][v] != expected) classification_ok = false;
          CrosscutCheck cc = crosscut_vs_order_check(L.poset, u, v, budgets);
          if (!cc.euler_equal || (cc.betti_equal && !*cc.betti_equal)) crosscut_ok = false;
        }
    }
    j["classification_matches_mobius"] = classification_ok;
    j["crosscut_matches_order_complex"] = crosscut_ok;
    ok = ok && classification_ok && crosscut_ok;
  }
  j["summary"] = ok ? "pass" : "fail";
  emit(opt, j.dump(2));
  return ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-lattice SB-labeling toolkit"};
  app.set_version_flag("--version", sblat::kVersion);
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--family", opt.family, "family spec, e.g. tamari:5, weak:sym:4, boolean:3");
    cmd->add_option("--input", opt.input, "input JSON file");
    cmd->add_option("--out", opt.out, "output path (default: stdout)");
    cmd->add_option("--format", opt.format, "json|dot|tsv|text")->default_val("json");
    cmd->add_option("--chain-budget", opt.chain_budget, "saturated chain cap per interval");
    cmd->add_option("--face-budget", opt.face_budget, "simplicial face cap");
    cmd->add_option("--search-budget", opt.search_budget, "sb-exists node cap");
    cmd->add_option("--seed", opt.seed, "seed for randomized corpora");
    cmd->add_option("--jobs", opt.jobs, "worker count")->check(CLI::PositiveNumber);
  };

  auto* gen = app.add_subcommand("gen", "emit a family lattice (JSON or DOT)");
  auto* verify = app.add_subcommand("verify", "run both SB verifiers and their crosscheck");
  auto* mob = app.add_subcommand("mobius", "all-pairs Mobius table");
  auto* classify = app.add_subcommand("classify", "interval classification vs topology oracles");
  auto* homology = app.add_subcommand("homology", "Betti vectors of a complex or interval");
  auto* sbex = app.add_subcommand("sb-exists", "decide SB-labeling existence");
  auto* report = app.add_subcommand("report", "full verification summary for one lattice");
  for (CLI::App* cmd : {gen, verify, mob, classify, homology, sbex, report}) add_common(cmd);
  homology->add_option("--u", opt.u, "interval bottom");
  homology->add_option("--v", opt.v, "interval top");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (mob->parsed()) return cmd_mobius(opt);
    if (classify->parsed()) return cmd_classify(opt);
    if (homology->parsed()) return cmd_homology(opt);
    if (sbex->parsed()) return cmd_sb_exists(opt);
    if (report->parsed()) return cmd_report(opt);
  } catch (const sblat::ToolkitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_budget() ? kExitBudget : kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
