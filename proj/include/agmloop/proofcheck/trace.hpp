#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace agmloop::proofcheck {

enum class Symbol { Star, Mean };

/// A term over the two binary symbols `*` (infix) and `m` (prefix).
///
/// Names starting with u..z are variables; every other name is a constant.
class Term {
 public:
  enum class Kind { Variable, Constant, Apply };

  /// Classifies `name` by its leading letter.
  static Term named(std::string name);
  static Term apply(Symbol symbol, Term left, Term right);

  Kind kind() const noexcept { return kind_; }
  bool is_variable() const noexcept { return kind_ == Kind::Variable; }
  const std::string& name() const noexcept { return name_; }
  Symbol symbol() const noexcept { return symbol_; }
  const Term& left() const { return args_[0]; }
  const Term& right() const { return args_[1]; }

  friend bool operator==(const Term&, const Term&) = default;

 private:
  Kind kind_ = Kind::Constant;
  std::string name_;
  Symbol symbol_ = Symbol::Star;
  std::vector<Term> args_;
};

bool is_variable_name(std::string_view name);

struct Literal {
  enum class Kind { Equation, Disequation, Contradiction };

  Kind kind = Kind::Contradiction;
  Term lhs;
  Term rhs;

  static Literal contradiction() { return {}; }

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct ProofStep {
  int id = 0;
  std::vector<Literal> literals;
  std::vector<std::string> labels;
  std::vector<int> parents;

  bool is_input() const noexcept { return parents.empty(); }
  bool has_label(std::string_view label) const;
  /// True when the step's sole literal is the contradiction marker.
  bool is_contradiction() const;
};

struct ProofTrace {
  std::string header;
  std::vector<ProofStep> steps;

  const ProofStep* find(int id) const;
};

std::string to_string(const Term& t);
std::string to_string(const Literal& l);
/// One step in the trace line format, e.g. "16 x * y = y * x.  [3,5,15]."
std::string to_string(const ProofStep& s);
/// The header (if any) followed by one line per step.
std::string unparse(const ProofTrace& t);

}  // namespace agmloop::proofcheck
