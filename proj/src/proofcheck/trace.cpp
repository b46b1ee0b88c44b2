#include "agmloop/proofcheck/trace.hpp"

#include <algorithm>

namespace agmloop::proofcheck {

bool is_variable_name(std::string_view name) {
  return !name.empty() && name.front() >= 'u' && name.front() <= 'z';
}

Term Term::named(std::string name) {
  Term t;
  t.kind_ = is_variable_name(name) ? Kind::Variable : Kind::Constant;
  t.name_ = std::move(name);
  return t;
}

Term Term::apply(Symbol symbol, Term left, Term right) {
  Term t;
  t.kind_ = Kind::Apply;
  t.symbol_ = symbol;
  t.args_.reserve(2);
  t.args_.push_back(std::move(left));
  t.args_.push_back(std::move(right));
  return t;
}

bool ProofStep::has_label(std::string_view label) const {
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

bool ProofStep::is_contradiction() const {
  return literals.size() == 1 && literals.front().kind == Literal::Kind::Contradiction;
}

const ProofStep* ProofTrace::find(int id) const {
  auto it = std::lower_bound(steps.begin(), steps.end(), id,
                             [](const ProofStep& s, int v) { return s.id < v; });
  if (it != steps.end() && it->id == id) return &*it;
  // Out-of-order traces still resolve.
  it = std::find_if(steps.begin(), steps.end(), [&](const ProofStep& s) { return s.id == id; });
  return it == steps.end() ? nullptr : &*it;
}

namespace {

std::string operand(const Term& t) {
  if (t.kind() == Term::Kind::Apply && t.symbol() == Symbol::Star) return "(" + to_string(t) + ")";
  return to_string(t);
}

}  // namespace

std::string to_string(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Variable:
    case Term::Kind::Constant: return t.name();
    case Term::Kind::Apply: break;
  }
  if (t.symbol() == Symbol::Mean) return "m(" + to_string(t.left()) + "," + to_string(t.right()) + ")";
  return operand(t.left()) + " * " + operand(t.right());
}

std::string to_string(const Literal& l) {
  switch (l.kind) {
    case Literal::Kind::Contradiction: return "$F";
    case Literal::Kind::Equation: return to_string(l.lhs) + " = " + to_string(l.rhs);
    case Literal::Kind::Disequation: return to_string(l.lhs) + " != " + to_string(l.rhs);
  }
  return "";
}

std::string to_string(const ProofStep& s) {
  std::string out = std::to_string(s.id) + " ";
  for (std::size_t i = 0; i < s.literals.size(); ++i) {
    if (i) out += " | ";
    out += to_string(s.literals[i]);
  }
  for (const auto& label : s.labels) out += " # label(" + label + ")";
  out += ".  [";
  for (std::size_t i = 0; i < s.parents.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.parents[i]);
  }
  out += "].";
  return out;
}

std::string unparse(const ProofTrace& t) {
  std::string out;
  if (!t.header.empty()) out += t.header + "\n";
  for (const auto& s : t.steps) out += to_string(s) + "\n";
  return out;
}

}  // namespace agmloop::proofcheck
