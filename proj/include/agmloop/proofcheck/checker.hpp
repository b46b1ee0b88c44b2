#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "agmloop/finite_models.hpp"
#include "agmloop/proofcheck/replay.hpp"
#include "agmloop/proofcheck/trace.hpp"

namespace agmloop::proofcheck {

struct DagReport {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Structural checks: ids strictly increasing, parents resolve to earlier steps, goal-labelled
/// steps are inputs, and exactly one contradiction step which is last and derived.
DagReport validate_dag(const ProofTrace& t);

/// Goal-labelled steps and everything descending from them.
std::set<int> goal_ancestry(const ProofTrace& t);

/// A finite interpretation: * is the table, m its derived mean, e and 1 the identity.
struct Model {
  std::string name;
  FiniteMagma op;
  MeanTable mean;
};

Model make_model(std::string name, const FiniteMagma& g);

struct ClauseFailure {
  int step = 0;
  /// Variable assignment, e.g. "x=1,y=2"; or a note for uninterpreted symbols.
  std::string assignment;
};

struct ModelResult {
  std::string model;
  bool pass = true;
  std::size_t clauses_checked = 0;
  std::vector<ClauseFailure> failures;
};

struct ModelCheckReport {
  std::vector<ModelResult> models;

  bool pass() const;
};

/// Every clause outside the goal ancestry must hold under every assignment in every model
/// (a disjunction holds when one of its literals does). Only the first falsifying assignment
/// per step and model is recorded. Throws ModelRejectsAxioms when a model falsifies an input
/// clause, since the screen is meaningless for such a model.
ModelCheckReport model_check(const ProofTrace& t, const std::vector<Model>& models);

/// Evaluates one step under a model for all assignments; returns the first falsifying
/// assignment, if any.
std::optional<std::string> falsifying_assignment(const ProofStep& step, const Model& model);

struct ReplayEntry {
  int step = 0;
  ReplayResult result;
};

struct TraceReport {
  std::string trace_id;
  DagReport dag;
  std::set<int> goal_ancestry_ids;
  ModelCheckReport model_check;
  std::vector<ReplayEntry> replay;
  std::size_t verified = 0;
  std::size_t unverified = 0;

  /// Valid DAG and a clean model check. Unverified replays do not fail a trace.
  bool pass() const { return dag.valid && model_check.pass(); }
};

TraceReport check_trace(const ProofTrace& t, const std::vector<Model>& models,
                        std::size_t replay_budget, std::string trace_id);

}  // namespace agmloop::proofcheck
