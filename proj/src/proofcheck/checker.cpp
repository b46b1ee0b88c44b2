#include "agmloop/proofcheck/checker.hpp"

#include <algorithm>
#include <map>

#include "agmloop/errors.hpp"

namespace agmloop::proofcheck {

namespace {

// Variables of a step in order of first occurrence.
void collect_variables(const Term& t, std::vector<std::string>& out) {
  if (t.kind() == Term::Kind::Variable) {
    if (std::find(out.begin(), out.end(), t.name()) == out.end()) out.push_back(t.name());
  } else if (t.kind() == Term::Kind::Apply) {
    collect_variables(t.left(), out);
    collect_variables(t.right(), out);
  }
}

class Evaluator {
 public:
  Evaluator(const Model& model, const std::vector<std::string>& vars, const std::vector<int>& values)
      : model_(model), vars_(vars), values_(values) {}

  int eval(const Term& t) const {
    switch (t.kind()) {
      case Term::Kind::Variable: {
        const auto it = std::find(vars_.begin(), vars_.end(), t.name());
        return values_[static_cast<std::size_t>(it - vars_.begin())];
      }
      case Term::Kind::Constant:
        if (t.name() == "e" || t.name() == "1") return model_.op.identity();
        throw DomainError("uninterpreted constant " + t.name());
      case Term::Kind::Apply: break;
    }
    const int l = eval(t.left());
    const int r = eval(t.right());
    return t.symbol() == Symbol::Star ? model_.op.op(l, r) : model_.mean.mean(l, r);
  }

  bool holds(const Literal& lit) const {
    switch (lit.kind) {
      case Literal::Kind::Contradiction: return false;
      case Literal::Kind::Equation: return eval(lit.lhs) == eval(lit.rhs);
      case Literal::Kind::Disequation: return eval(lit.lhs) != eval(lit.rhs);
    }
    return false;
  }

 private:
  const Model& model_;
  const std::vector<std::string>& vars_;
  const std::vector<int>& values_;
};

}  // namespace

DagReport validate_dag(const ProofTrace& t) {
  DagReport r;
  auto flag = [&](std::string v) {
    r.valid = false;
    r.violations.push_back(std::move(v));
  };
  if (t.steps.empty()) flag("trace has no steps");

  std::set<int> seen;
  int previous = 0;
  std::size_t contradictions = 0;
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    const ProofStep& s = t.steps[k];
    const std::string tag = "step " + std::to_string(s.id);
    if (s.id <= 0) flag(tag + ": id must be positive");
    if (k > 0 && s.id <= previous) flag(tag + ": id not greater than preceding id " + std::to_string(previous));
    previous = s.id;
    for (int p : s.parents) {
      if (p >= s.id) {
        flag(tag + ": parent " + std::to_string(p) + " is not an earlier step");
      } else if (!seen.count(p)) {
        flag(tag + ": parent " + std::to_string(p) + " does not resolve");
      }
    }
    if (s.has_label("goal") && !s.is_input()) flag(tag + ": goal clause carries a justification");
    const bool has_false = std::any_of(s.literals.begin(), s.literals.end(), [](const Literal& l) {
      return l.kind == Literal::Kind::Contradiction;
    });
    if (s.is_contradiction()) {
      ++contradictions;
      if (k + 1 != t.steps.size()) flag(tag + ": contradiction is not the last step");
      if (s.is_input()) flag(tag + ": contradiction has no justification");
    } else if (has_false) {
      flag(tag + ": $F mixed with other literals");
    }
    seen.insert(s.id);
  }
  if (contradictions == 0) flag("no terminal contradiction");
  if (contradictions > 1) flag("more than one contradiction step");
  return r;
}

std::set<int> goal_ancestry(const ProofTrace& t) {
  std::set<int> out;
  for (const auto& s : t.steps) {
    const bool descends = std::any_of(s.parents.begin(), s.parents.end(),
                                      [&](int p) { return out.count(p) > 0; });
    if (s.has_label("goal") || descends) out.insert(s.id);
  }
  return out;
}

Model make_model(std::string name, const FiniteMagma& g) {
  return Model{std::move(name), g, derive_mean(g)};
}

bool ModelCheckReport::pass() const {
  return std::all_of(models.begin(), models.end(), [](const ModelResult& m) { return m.pass; });
}

std::optional<std::string> falsifying_assignment(const ProofStep& step, const Model& model) {
  std::vector<std::string> vars;
  for (const auto& lit : step.literals) {
    if (lit.kind == Literal::Kind::Contradiction) continue;
    collect_variables(lit.lhs, vars);
    collect_variables(lit.rhs, vars);
  }
  const int n = model.op.order();
  std::vector<int> values(vars.size(), 0);
  const Evaluator ev(model, vars, values);
  try {
    while (true) {
      const bool holds = std::any_of(step.literals.begin(), step.literals.end(),
                                     [&](const Literal& l) { return ev.holds(l); });
      if (!holds) {
        std::string a;
        for (std::size_t i = 0; i < vars.size(); ++i) {
          if (i) a += ",";
          a += vars[i] + "=" + std::to_string(values[i]);
        }
        return a;
      }
      // Odometer over n^k assignments.
      std::size_t i = 0;
      while (i < values.size() && ++values[i] == n) values[i++] = 0;
      if (i == values.size()) break;
    }
  } catch (const DomainError& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

ModelCheckReport model_check(const ProofTrace& t, const std::vector<Model>& models) {
  const std::set<int> goals = goal_ancestry(t);
  ModelCheckReport report;
  for (const Model& model : models) {
    ModelResult r;
    r.model = model.name;
    for (const auto& step : t.steps) {
      if (goals.count(step.id)) continue;
      ++r.clauses_checked;
      if (auto bad = falsifying_assignment(step, model)) {
        if (step.is_input()) {
          throw ModelRejectsAxioms("model " + model.name + " falsifies input clause " +
                                   std::to_string(step.id) + " at " + *bad);
        }
        r.pass = false;
        r.failures.push_back({step.id, *bad});
      }
    }
    report.models.push_back(std::move(r));
  }
  return report;
}

TraceReport check_trace(const ProofTrace& t, const std::vector<Model>& models,
                        std::size_t replay_budget, std::string trace_id) {
  TraceReport r;
  r.trace_id = std::move(trace_id);
  r.dag = validate_dag(t);
  r.goal_ancestry_ids = goal_ancestry(t);
  r.model_check = model_check(t, models);
  for (const auto& step : t.steps) {
    if (step.is_input()) continue;
    ReplayEntry e{step.id, replay_step(t, step.id, replay_budget)};
    (e.result.status == ReplayStatus::Verified ? r.verified : r.unverified) += 1;
    r.replay.push_back(e);
  }
  return r;
}

}  // namespace agmloop::proofcheck
