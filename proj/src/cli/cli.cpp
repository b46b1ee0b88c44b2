#include "agmloop/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <fmt/core.h>

#include "CLI11.hpp"
#include "agmloop/errors.hpp"
#include "agmloop/finite_models.hpp"
#include "agmloop/means.hpp"
#include "agmloop/oploop.hpp"
#include "agmloop/proofcheck/checker.hpp"
#include "agmloop/proofcheck/parser.hpp"
#include "agmloop/theta.hpp"
#include "json_writer.hpp"

namespace agmloop::cli {

namespace {

// A finished command: the structured document, its text rendering, and the exit code.
struct Outcome {
  Json doc;
  std::string text;
  int code = kExitOk;
};

std::string num(double v) { return fmt::format("{:.17g}", v); }

Json law_json(const LawRecord& r) {
  Json j;
  j["id"] = r.id;
  j["description"] = r.description;
  j["polarity"] = to_string(r.polarity);
  j["criterion"] = to_string(r.criterion);
  j["tolerance"] = r.tolerance;
  j["samples"] = r.samples;
  j["worst_defect"] = r.worst_defect;
  j["witness"] = r.witness;
  j["holds"] = r.holds;
  j["pass"] = r.pass;
  return j;
}

std::string witness_text(const std::vector<double>& w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? ", " : "") + fmt::format("{:g}", w[k]);
  return s + ")";
}

std::string law_line(const LawRecord& r) {
  return fmt::format("{:<4} {:<20} {:<11} worst {:<24} at {:<22} {}\n", r.pass ? "PASS" : "FAIL",
                     r.id, to_string(r.polarity), num(r.worst_defect), witness_text(r.witness),
                     r.holds ? "holds" : "fails");
}

// --- subcommands -----------------------------------------------------------------------

Outcome cmd_mean(const std::string& kind_name, double x, double y) {
  const MeanKind kind = parse_mean_kind(kind_name);
  const PositivePair p(x, y);
  Outcome o;
  o.doc["command"] = "mean";
  o.doc["kind"] = std::string(to_string(kind));
  o.doc["x"] = x;
  o.doc["y"] = y;
  double value = 0.0;
  if (kind == MeanKind::AGM) {
    const AgmTrace t = agm(p);
    value = t.value;
    o.doc["value"] = value;
    o.doc["iterations"] = t.iterations;
  } else {
    value = classical_mean(kind, p);
    o.doc["value"] = value;
  }
  o.text = num(value) + "\n";
  return o;
}

Outcome cmd_star(double x, double y) {
  const double v = star(x, y);
  Outcome o;
  o.doc["command"] = "star";
  o.doc["x"] = x;
  o.doc["y"] = y;
  o.doc["value"] = v;
  o.text = num(v) + "\n";
  return o;
}

Outcome cmd_nome(double a) {
  const double q = inverse_nome(a).value();
  const double th = theta(Nome(q)).value;
  Outcome o;
  o.doc["command"] = "nome";
  o.doc["a"] = a;
  o.doc["q"] = q;
  o.doc["residual"] = a * th * th - 1.0;
  o.text = num(q) + "\n";
  return o;
}

Outcome cmd_laws(const std::string& grid_spec, double tol) {
  StarConfig cfg;
  cfg.law_tol = tol;
  if (!grid_spec.empty()) cfg.grid = parse_grid(grid_spec);
  cfg.validate();
  const LawReport report = law_suite(cfg);
  Outcome o;
  o.doc["command"] = "laws";
  o.doc["tolerance"] = tol;
  o.doc["grid"] = cfg.grid;
  o.doc["laws"] = Json::array();
  for (const auto& r : report.laws) {
    o.doc["laws"].push_back(law_json(r));
    o.text += law_line(r);
  }
  o.doc["pass"] = report.all_pass();
  o.text += report.all_pass() ? "all laws as expected\n" : "some laws not as expected\n";
  o.code = report.all_pass() ? kExitOk : kExitCheckFailed;
  return o;
}

Outcome cmd_counterexamples() {
  constexpr double kThreshold = 1e-6;
  struct Point {
    std::string name;
    std::vector<double> at;
    double defect;
    bool required;
  };
  const BinaryOp m = mean_function(MeanKind::AGM);
  const std::vector<Point> points = {
      {"agm.medial", {1, 2, 3, 4}, medial_defect(m, 1, 2, 3, 4), true},
      {"agm.selfdist", {1, 2, 3}, selfdist_defect(m, 1, 2, 3), true},
      {"star.associativity", {1, 2, 3}, associativity_defect(1, 2, 3), false},
      {"star.moufang", {1, 2, 3}, moufang_defect(1, 2, 3), false},
      {"star.associativity", {2, 3, 4}, associativity_defect(2, 3, 4), false},
      {"star.moufang", {2, 3, 4}, moufang_defect(2, 3, 4), false},
  };
  Outcome o;
  o.doc["command"] = "counterexamples";
  o.doc["threshold"] = kThreshold;
  o.doc["points"] = Json::array();
  bool ok = true;
  for (const auto& p : points) {
    const bool exceeds = std::abs(p.defect) > kThreshold;
    if (p.required) ok = ok && exceeds;
    Json j;
    j["law"] = p.name;
    j["at"] = p.at;
    j["defect"] = p.defect;
    j["exceeds_threshold"] = exceeds;
    j["required"] = p.required;
    o.doc["points"].push_back(j);
    o.text += fmt::format("{:<20} at {:<16} defect {:<24} {}\n", p.name, witness_text(p.at),
                          num(p.defect), exceeds ? "fails" : "holds");
  }
  // Grid-wide witnesses for every law expected to fail.
  const LawReport report = law_suite();
  o.doc["grid_witnesses"] = Json::array();
  for (const auto& r : report.laws) {
    if (r.polarity != Polarity::ShouldFail) continue;
    ok = ok && r.pass;
    o.doc["grid_witnesses"].push_back(law_json(r));
    o.text += law_line(r);
  }
  o.doc["pass"] = ok;
  o.code = ok ? kExitOk : kExitCheckFailed;
  return o;
}

Outcome cmd_models(int max_order, std::size_t budget) {
  if (max_order < 1) throw DomainError("--max-order must be at least 1");
  if (max_order > kMaxModelOrder) {
    throw OrderTooLarge(fmt::format("--max-order {} exceeds the cap {}", max_order, kMaxModelOrder));
  }
  Outcome o;
  o.doc["command"] = "models";
  o.doc["budget"] = budget;
  o.doc["orders"] = Json::array();
  bool ok = true;
  for (int n = 1; n <= max_order; ++n) {
    const EquivalenceReport r = theorem_equivalence_check(n, budget);
    ok = ok && r.ok() && !r.budget_exhausted;
    Json j;
    j["order"] = n;
    j["structures"] = r.structures;
    j["budget_exhausted"] = r.budget_exhausted;
    j["combinations"] = Json::object();
    for (const auto& [flags, count] : r.combinations) j["combinations"][flags] = count;
    j["medial_violations"] = r.medial_violations;
    j["moufang_violations"] = r.moufang_violations;
    j["invariant_failures"] = r.invariant_failures;
    j["contains_cyclic_group"] = r.contains_cyclic_group;
    j["ok"] = r.ok();
    o.doc["orders"].push_back(j);
    o.text += fmt::format("order {}: {} structures, {} medial and {} moufang violations{}\n", n,
                          r.structures, r.medial_violations, r.moufang_violations,
                          r.budget_exhausted ? " (budget exhausted)" : "");
  }
  o.doc["pass"] = ok;
  o.code = ok ? kExitOk : kExitCheckFailed;
  return o;
}

Outcome cmd_proof_check(const std::string& file, const std::vector<int>& orders,
                        std::size_t replay_budget) {
  using namespace proofcheck;
  std::ifstream in(file);
  if (!in) throw DomainError("cannot read " + file);
  std::stringstream ss;
  ss << in.rdbuf();
  const ProofTrace t = parse_trace(ss.str());

  std::vector<Model> models;
  for (int n : orders) {
    const Enumeration e = enumerate(n);
    for (std::size_t k = 0; k < e.structures.size(); ++k) {
      models.push_back(make_model(fmt::format("order{}#{}", n, k), e.structures[k]));
    }
  }
  if (models.empty()) throw DomainError("no models of the requested orders exist");

  const std::string id = std::filesystem::path(file).filename().string();
  const TraceReport r = check_trace(t, models, replay_budget, id);

  Outcome o;
  o.doc["trace_id"] = r.trace_id;
  o.doc["dag_valid"] = r.dag.valid;
  o.doc["dag_violations"] = r.dag.violations;
  o.doc["goal_ancestry_ids"] = r.goal_ancestry_ids;
  o.doc["model_check"] = Json::array();
  for (const auto& m : r.model_check.models) {
    Json j;
    j["model"] = m.model;
    j["pass"] = m.pass;
    j["clauses_checked"] = m.clauses_checked;
    j["failures"] = Json::array();
    for (const auto& f : m.failures) j["failures"].push_back({{"step", f.step}, {"assignment", f.assignment}});
    o.doc["model_check"].push_back(j);
  }
  o.doc["replay"] = Json::array();
  for (const auto& e : r.replay) {
    o.doc["replay"].push_back({{"step", e.step},
                               {"status", std::string(to_string(e.result.status))},
                               {"depth", e.result.depth},
                               {"expansions", e.result.expansions},
                               {"budget_exhausted", e.result.budget_exhausted}});
  }
  o.doc["verified"] = r.verified;
  o.doc["unverified"] = r.unverified;
  o.doc["pass"] = r.pass();

  o.text += fmt::format("trace {}: {} steps\n", id, t.steps.size());
  o.text += fmt::format("dag: {}\n", r.dag.valid ? "valid" : "INVALID");
  for (const auto& v : r.dag.violations) o.text += "  " + v + "\n";
  std::string anc;
  for (int s : r.goal_ancestry_ids) anc += (anc.empty() ? "" : ",") + std::to_string(s);
  o.text += "goal ancestry: " + anc + "\n";
  for (const auto& m : r.model_check.models) {
    o.text += fmt::format("model {}: {} ({} clauses)\n", m.model, m.pass ? "pass" : "FAIL",
                          m.clauses_checked);
    for (const auto& f : m.failures) o.text += fmt::format("  step {} fails at {}\n", f.step, f.assignment);
  }
  for (const auto& e : r.replay) {
    o.text += fmt::format("step {:>5}: {}\n", e.step, to_string(e.result.status));
  }
  o.text += fmt::format("replay: {} verified, {} unverified\n", r.verified, r.unverified);
  o.text += r.pass() ? "PASS\n" : "FAIL\n";
  o.code = r.pass() ? kExitOk : kExitCheckFailed;
  return o;
}

}  // namespace

std::vector<double> parse_grid(const std::string& spec) {
  double v[3];
  std::size_t start = 0;
  for (int k = 0; k < 3; ++k) {
    const std::size_t colon = spec.find(':', start);
    if ((k < 2) == (colon == std::string::npos)) {
      throw DomainError("grid spec must look like start:stop:step, got '" + spec + "'");
    }
    const std::string part = spec.substr(start, k < 2 ? colon - start : std::string::npos);
    try {
      std::size_t used = 0;
      v[k] = std::stod(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw DomainError("grid spec has a non-numeric field '" + part + "'");
    }
    start = colon + 1;
  }
  const double lo = v[0], hi = v[1], step = v[2];
  if (!(lo > 0.0) || !(step > 0.0) || !(hi >= lo) || !std::isfinite(hi)) {
    throw DomainError("grid spec needs 0 < start <= stop and step > 0");
  }
  std::vector<double> grid;
  for (std::size_t k = 0;; ++k) {
    const double x = lo + static_cast<double>(k) * step;
    if (x > hi + 1e-9 * step) break;
    if (grid.size() == kMaxGridPoints) {
      throw DomainError(fmt::format("grid spec yields more than {} points", kMaxGridPoints));
    }
    grid.push_back(x);
  }
  return grid;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical and symbolic checks for the AGM loop", "agmloop"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string output;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", output, "Write the report to this file");

  std::function<Outcome()> action;

  std::string kind;
  double x = 0, y = 0, a = 0;
  auto* mean = app.add_subcommand("mean", "Evaluate AM, GM, HM or AGM");
  mean->add_option("kind", kind)->required();
  mean->add_option("x", x)->required();
  mean->add_option("y", y)->required();
  mean->callback([&] { action = [&] { return cmd_mean(kind, x, y); }; });

  auto* star_cmd = app.add_subcommand("star", "Evaluate the AGM loop operation");
  star_cmd->add_option("x", x)->required();
  star_cmd->add_option("y", y)->required();
  star_cmd->callback([&] { action = [&] { return cmd_star(x, y); }; });

  auto* nome = app.add_subcommand("nome", "Solve theta(q)^2 = 1/a for q");
  nome->add_option("a", a)->required();
  nome->callback([&] { action = [&] { return cmd_nome(a); }; });

  std::string grid;
  double tol = StarConfig{}.law_tol;
  auto* laws = app.add_subcommand("laws", "Sweep the loop laws over a grid");
  laws->add_option("--grid", grid, "start:stop:step");
  laws->add_option("--tol", tol, "Relative tolerance");
  laws->callback([&] { action = [&] { return cmd_laws(grid, tol); }; });

  auto* cex = app.add_subcommand("counterexamples", "Evaluate the laws expected to fail");
  cex->callback([&] { action = [&] { return cmd_counterexamples(); }; });

  int max_order = 0;
  std::size_t budget = 1'000'000;
  auto* models = app.add_subcommand("models", "Enumerate finite models and check the equivalences");
  models->add_option("--max-order", max_order)->required();
  models->add_option("--budget", budget, "Search node budget per order");
  models->callback([&] { action = [&] { return cmd_models(max_order, budget); }; });

  std::string file;
  std::vector<int> orders;
  std::size_t replay_budget = proofcheck::kDefaultReplayBudget;
  auto* proof = app.add_subcommand("proof", "Proof trace tools");
  proof->require_subcommand(1);
  auto* check = proof->add_subcommand("check", "Validate, model-check and replay a trace");
  check->add_option("file", file)->required();
  check->add_option("--model-order", orders, "Model order (repeatable; default 3 and 5)");
  check->add_option("--replay-budget", replay_budget, "Node expansions per step");
  check->callback([&] {
    action = [&] {
      if (orders.empty()) orders = {3, 5};
      return cmd_proof_check(file, orders, replay_budget);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Outcome result;
  try {
    result = action();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string rendered = format == "json" ? write_json(result.doc) : result.text;
  if (output.empty()) {
    out << rendered;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f || !(f << rendered)) {
      err << "error: cannot write " << output << "\n";
      return kExitUsage;
    }
  }
  return result.code;
}

}  // namespace agmloop::cli
