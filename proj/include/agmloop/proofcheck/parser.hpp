#pragma once

#include <string_view>

#include "agmloop/proofcheck/trace.hpp"

namespace agmloop::proofcheck {

/// Parses a proof trace:
///
///   trace    := header? line+
///   line     := INT clause label* "." "[" idlist? "]" "."
///   clause   := literal ("|" literal)*
///   literal  := "$F" | term "=" term | term "!=" term
///   term     := factor ("*" factor)*            (left-associative)
///   factor   := IDENT | "m" "(" term "," term ")" | "(" term ")"
///   label    := "#" "label" "(" IDENT ")"
///   idlist   := INT ("," INT)*
///
/// Leading lines whose first non-blank character is not a digit form the header. Whitespace
/// between tokens is free. Throws ParseError with the 1-based line and column of the first
/// deviation, including for input with no steps.
ProofTrace parse_trace(std::string_view text);

}  // namespace agmloop::proofcheck
