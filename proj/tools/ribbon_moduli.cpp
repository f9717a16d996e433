// ribbon_moduli: classification, component tables, stratification graphs and
// exact local verifications for semistable sheaves on ribbons.
//
// Every command prints one JSON report:
//   {"command", "params", "result", "checks": [{"name", "pass", "detail"}], "ms"}
// Exit status: 0 success, 1 invalid input, 2 a verification check failed.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ribbon/ribbon.hpp"

namespace {

using json = nlohmann::json;
using ribbon::local::Check;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitFailed = 2;

struct Report {
  std::string command;
  json params = json::object();
  json result = json::object();
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

struct GlobalOptions {
  std::string json_path;
  bool no_timing = false;
};

std::string fraction(const ribbon::Rational& r) { return std::to_string(r.num()) + "/" + std::to_string(r.den()); }

std::string pair_string(std::int64_t a, std::int64_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<std::int64_t> out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw ribbon::InvalidInput(flag + ": '" + item + "' is not an integer");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw ribbon::InvalidInput(flag + ": '" + item + "' is not an integer");
    }
    out.push_back(v);
  }
  return out;
}

json check_json(const Check& c) { return json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}}; }

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
  std::int64_t g = 0;
  std::int64_t gbar = 0;
  std::optional<std::int64_t> d;
  std::optional<std::string> index;
  std::optional<std::string> vb;
  std::optional<std::string> status;
  std::int64_t degL = 1;
};

ribbon::StabilityStatus parse_status(const std::string& s) {
  if (s == "stable") return ribbon::StabilityStatus::Stable;
  if (s == "strictly-semistable") return ribbon::StabilityStatus::StrictlySemistable;
  if (s == "unstable") return ribbon::StabilityStatus::Unstable;
  throw ribbon::InvalidInput("--status must be stable, strictly-semistable or unstable");
}

json gr_json(const ribbon::GrClass& gr) {
  if (std::holds_alternative<ribbon::SelfClass>(gr)) return "self";
  const auto& split = std::get<ribbon::SplitClass>(gr);
  return pair_string(split.deg_F1, split.deg_Ibar);
}

Report run_classify(const ClassifyArgs& a) {
  Report rep;
  rep.command = "classify";
  rep.params = {{"g", a.g}, {"gbar", a.gbar}, {"degL", a.degL}};
  if (a.d) rep.params["d"] = *a.d;
  if (a.index.has_value() == a.vb.has_value()) throw ribbon::InvalidInput("give exactly one of --index and --vb");
  const auto ribbon = ribbon::mk_ribbon(a.g, a.gbar);

  if (a.index) {
    if (!a.d) throw ribbon::InvalidInput("--d is required with --index");
    if (a.status) throw ribbon::InvalidInput("--status applies to --vb only");
    rep.params["index"] = *a.index;
    const auto glb = ribbon::mk_glb(ribbon, *a.d, parse_int_list(*a.index, "--index"));
    const auto verdict = ribbon::classify_glb(ribbon, glb);
    const auto inv = ribbon::glb_invariants(ribbon, glb);
    const auto sl = ribbon::slopes(ribbon, a.degL, glb);
    rep.result = {
        {"kind", "generalized-line-bundle"},
        {"indices", glb.indices().to_string()},
        {"b", inv.b},
        {"verdict", std::string(to_string(verdict))},
        {"blowup_genus", inv.blowup_genus},
        {"deg_Ibar", inv.deg_Ibar},
        {"deg_F1", inv.deg_F1},
        {"e", inv.e},
        {"slopes", {{"mu_I", fraction(sl.mu_I)}, {"mu_Ibar", fraction(sl.mu_Ibar)}, {"mu_F1", fraction(sl.mu_F1)}}},
        {"gr", verdict == ribbon::Verdict::Unstable ? json(nullptr) : gr_json(ribbon::gr_class(ribbon, glb))},
    };
    return rep;
  }

  rep.params["vb"] = *a.vb;
  if (a.status) rep.params["status"] = *a.status;
  const auto nums = parse_int_list(*a.vb, "--vb");
  if (nums.size() != 1 && nums.size() != 3) throw ribbon::InvalidInput("--vb takes e or e,a,b");
  const std::int64_t e = nums[0];
  if (a.d && ribbon.vb_degree(*a.d) != e) {
    throw ribbon::InvalidInput("rank-2 degree " + std::to_string(e) + " differs from d + deg N = " +
                               std::to_string(ribbon.vb_degree(*a.d)));
  }
  std::optional<ribbon::SplitType> split;
  if (nums.size() == 3) split = ribbon::SplitType{nums[1], nums[2]};
  const auto vb = ribbon::mk_vb(ribbon, e, split, a.status ? parse_status(*a.status) : ribbon::StabilityStatus::Unspecified);
  const auto verdict = ribbon::classify_vb(ribbon, vb);
  json gr = nullptr;
  if (verdict && *verdict != ribbon::Verdict::Unstable) gr = gr_json(ribbon::gr_class(ribbon, vb));
  rep.result = {
      {"kind", "rank-2-bundle"},
      {"e", e},
      {"split", split ? json(pair_string(split->a, split->b)) : json(nullptr)},
      {"verdict", verdict ? std::string(to_string(*verdict)) : std::string("unknown")},
      {"gr", gr},
  };
  return rep;
}

// ---------------------------------------------------------------- components / strata

struct GeometryArgs {
  std::int64_t g = 0;
  std::int64_t gbar = 0;
  std::int64_t d = 0;
  std::string dot_path;
  bool semistable = false;
};

Report run_components(const GeometryArgs& a) {
  Report rep;
  rep.command = "components";
  rep.params = {{"g", a.g}, {"gbar", a.gbar}, {"d", a.d}};
  const auto table = ribbon::component_table(ribbon::mk_ribbon(a.g, a.gbar), a.d);
  json glb = json::array();
  for (const auto& c : table.glb_components) glb.push_back({{"generic", c.generic.to_string()}, {"dim", c.dim}});
  json special = nullptr;
  if (table.special_case) special = {{"empty", table.special_case->empty}, {"dim", table.special_case->dim}};
  rep.result = {
      {"count", table.component_count()},
      {"glb_components", glb},
      {"vb", {{"status", std::string(to_string(table.vb_component.status))},
              {"dim", table.vb_component.dim ? json(*table.vb_component.dim) : json(nullptr)}}},
      {"special_case", special},
  };
  return rep;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string to_dot(const ribbon::StratGraph& graph) {
  std::string out = "digraph strata {\n";
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + dot_escape(graph.nodes[i].label()) + "\"];\n";
  }
  for (const auto& e : graph.edges) {
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) + " [label=\"" +
           std::string(to_string(e.kind)) + "\"];\n";
  }
  return out + "}\n";
}

Report run_strata(const GeometryArgs& a) {
  Report rep;
  rep.command = "strata";
  rep.params = {{"g", a.g}, {"gbar", a.gbar}, {"d", a.d}, {"semistable", a.semistable}};
  const auto ribbon = ribbon::mk_ribbon(a.g, a.gbar);
  json strata = json::array();
  for (const auto& s : ribbon::enumerate_strata(ribbon, a.d, a.semistable)) {
    strata.push_back(
        {{"indices", s.indices.to_string()}, {"dim", s.dim}, {"stability", std::string(to_string(s.stability))}});
  }
  const auto graph = ribbon::stratification_graph(ribbon, a.d);
  json nodes = json::array();
  for (const auto& n : graph.nodes) nodes.push_back(n.label());
  json edges = json::array();
  for (const auto& e : graph.edges) {
    edges.push_back({{"from", e.from}, {"to", e.to}, {"kind", std::string(to_string(e.kind))}});
  }
  rep.result = {{"strata", strata}, {"graph", {{"nodes", nodes}, {"edges", edges}, {"connected", graph.connected}}}};
  if (!a.dot_path.empty()) {
    std::ofstream out(a.dot_path);
    if (!out) throw ribbon::InvalidInput("cannot write " + a.dot_path);
    out << to_dot(graph);
  }
  return rep;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  int n = 0;
  int b = 0;
  std::uint64_t prime = 101;
  std::optional<int> trunc;
  std::optional<std::size_t> expect;
  std::optional<std::int64_t> t;
  std::optional<std::uint64_t> seed;
  bool allow_char2 = false;
};

void check_prime(const VerifyArgs& a) {
  ribbon::local::PrimeField f(a.prime);  // validates
  if (a.prime == 2 && !a.allow_char2) throw ribbon::InvalidInput("characteristic 2 needs --allow-char2");
}

Report run_homology(const VerifyArgs& a, bool ext) {
  Report rep;
  rep.command = ext ? "verify ext" : "verify endo";
  check_prime(a);
  const int T = a.trunc.value_or(ext ? 4 * a.n + 4 : 2 * a.n + 2);
  rep.params = {{"n", a.n}, {"prime", a.prime}, {"trunc", T}};
  const std::size_t expected =
      a.expect.value_or(ext ? 2 * static_cast<std::size_t>(a.n) : static_cast<std::size_t>(a.n));
  const std::string name = ext ? "ext1 dimension" : "End/O length";
  try {
    const std::size_t dim = ext ? ribbon::local::ext1_dim(a.n, a.prime, T) : ribbon::local::endo_quotient_dim(a.n, a.prime, T);
    rep.result = {{"dim", dim}, {"expected", expected}, {"truncations", {T, T + 2}}};
    rep.checks.push_back({"stabilized", true, "T=" + std::to_string(T) + " and T=" + std::to_string(T + 2) + " agree"});
    rep.checks.push_back({name, dim == expected, "got " + std::to_string(dim) + ", expected " + std::to_string(expected)});
  } catch (const ribbon::NotStabilized& e) {
    rep.result = {{"dim", nullptr}, {"expected", expected}, {"truncations", {T, T + 2}}};
    rep.checks.push_back({"stabilized", false, e.what()});
  }
  return rep;
}

Report run_deformation(const VerifyArgs& a, bool first) {
  Report rep;
  rep.command = first ? "verify deform1" : "verify deform2";
  check_prime(a);
  std::int64_t t = 0;
  if (a.t) {
    t = *a.t;
  } else {
    std::mt19937_64 rng(a.seed.value_or(ribbon::sweep::seed_from_env()));
    t = std::uniform_int_distribution<std::int64_t>(1, static_cast<std::int64_t>(a.prime) - 1)(rng);
  }
  const auto r = first ? ribbon::local::verify_deformation_I(a.b, a.prime, t)
                       : ribbon::local::verify_deformation_II(a.b, a.prime, t);
  rep.params = {{"b", a.b}, {"prime", a.prime}, {"t", r.t}};
  rep.result = {
      {"generic_fiber", r.generic_fiber},
      {"special_fiber", r.special_fiber},
      {"colength", {{"generic", r.generic_colength}, {"special", r.special_colength}}},
      {"index", {{"at_0", r.index_at_zero}, {"at_t", r.index_at_t}}},
  };
  rep.checks = r.checks;
  return rep;
}

Report run_sweep(const VerifyArgs& a) {
  Report rep;
  rep.command = "verify sweep";
  const std::uint64_t seed = a.seed.value_or(ribbon::sweep::seed_from_env());
  rep.params = {{"seed", seed}};
  json criteria = json::array();
  for (const auto& c : ribbon::sweep::run_all(seed)) {
    criteria.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"cases", c.cases}, {"detail", c.detail}});
    rep.checks.push_back({std::to_string(c.id) + ". " + c.name, c.pass, c.detail});
  }
  rep.result = {{"criteria", criteria}};
  return rep;
}

// ---------------------------------------------------------------- output

int emit(const Report& rep, const GlobalOptions& opts, double ms) {
  json checks = json::array();
  for (const auto& c : rep.checks) checks.push_back(check_json(c));
  const json doc = {
      {"command", rep.command},
      {"params", rep.params},
      {"result", rep.result},
      {"checks", checks},
      {"ms", opts.no_timing ? 0.0 : ms},
  };
  const std::string text = doc.dump(2) + "\n";
  if (opts.json_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opts.json_path);
    if (!out) {
      std::cerr << "error: cannot write " << opts.json_path << "\n";
      return kExitInvalid;
    }
    out << text;
  }
  return rep.passed() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moduli of semistable sheaves on ribbons: classification, strata and local verification"};
  app.require_subcommand(1);
  GlobalOptions opts;
  app.add_option("--json", opts.json_path, "Write the report to FILE instead of stdout");
  app.add_flag("--no-timing", opts.no_timing, "Report ms as 0 so output is byte-reproducible");

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "Stability verdict, slopes and Gr-class of one sheaf");
  classify->add_option("--g", ca.g, "Arithmetic genus of the ribbon")->required();
  classify->add_option("--gbar", ca.gbar, "Genus of the reduced curve")->required();
  classify->add_option("--d", ca.d, "Degree");
  classify->add_option("--index", ca.index, "Local indices of a generalized line bundle, e.g. 2,1 (empty for a line bundle)");
  classify->add_option("--vb", ca.vb, "Rank-2 bundle as e or e,a,b (split type a+b=e)");
  classify->add_option("--status", ca.status, "Stability of the rank-2 bundle when no split type is given");
  classify->add_option("--degL", ca.degL, "Polarization degree")->check(CLI::PositiveNumber);

  GeometryArgs ga;
  auto* components = app.add_subcommand("components", "Irreducible components of the moduli space");
  auto* strata = app.add_subcommand("strata", "Strata by local index sequence and the specialization graph");
  for (auto* sub : {components, strata}) {
    sub->add_option("--g", ga.g, "Arithmetic genus of the ribbon")->required();
    sub->add_option("--gbar", ga.gbar, "Genus of the reduced curve")->required();
    sub->add_option("--d", ga.d, "Degree")->required();
  }
  strata->add_option("--dot", ga.dot_path, "Write the graph in DOT format");
  strata->add_flag("--semistable", ga.semistable, "List strictly semistable index sequences too");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Exact verification over F_p");
  verify->require_subcommand(1);
  auto* ext = verify->add_subcommand("ext", "dim Ext^1(I_n, I_n) = 2n");
  auto* endo = verify->add_subcommand("endo", "length End(I_n)/O = n");
  auto* deform1 = verify->add_subcommand("deform1", "Flat family specializing index b0 + 2 to b0");
  auto* deform2 = verify->add_subcommand("deform2", "Flat family merging indices (1, b1) into b1 + 1");
  auto* sweep = verify->add_subcommand("sweep", "Full acceptance grid");
  for (auto* sub : {ext, endo}) {
    sub->add_option("--n", va.n, "Local index")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--trunc", va.trunc, "Truncation order T");
    sub->add_option("--expect", va.expect, "Expected value (default 2n for ext, n for endo)");
  }
  for (auto* sub : {deform1, deform2}) {
    sub->add_option("--b", va.b, "Index b0 (deform1) or b1 (deform2)")->required();
    sub->add_option("--t", va.t, "Nonzero parameter value; random when omitted");
    sub->add_option("--seed", va.seed, "Seed for a random --t");
  }
  for (auto* sub : {ext, endo, deform1, deform2}) {
    sub->add_option("--prime", va.prime, "Characteristic p");
    sub->add_flag("--allow-char2", va.allow_char2, "Permit p = 2");
  }
  sweep->add_option("--seed", va.seed, "Seed for random draws (default: RIBBON_MODULI_SEED or built-in)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Report rep;
    if (*classify) {
      rep = run_classify(ca);
    } else if (*components) {
      rep = run_components(ga);
    } else if (*strata) {
      rep = run_strata(ga);
    } else if (*ext) {
      rep = run_homology(va, true);
    } else if (*endo) {
      rep = run_homology(va, false);
    } else if (*deform1) {
      rep = run_deformation(va, true);
    } else if (*deform2) {
      rep = run_deformation(va, false);
    } else {
      rep = run_sweep(va);
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return emit(rep, opts, ms);
  } catch (const ribbon::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ribbon::ArithmeticOverflow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return kExitFailed;
  }
}
