#pragma once

#include <cstddef>
#include <string_view>

#include "agmloop/proofcheck/trace.hpp"

namespace agmloop::proofcheck {

enum class ReplayStatus { Verified, Unverified };

struct ReplayResult {
  ReplayStatus status = ReplayStatus::Unverified;
  /// Node expansions spent.
  std::size_t expansions = 0;
  /// Number of inferences in the derivation found (Verified only).
  int depth = 0;
  bool budget_exhausted = false;
};

inline constexpr int kMaxReplayDepth = 4;
inline constexpr std::size_t kDefaultReplayBudget = 100'000;

/// Bounded search for a derivation of step `id` from the steps it cites.
///
/// Starting from each cited clause, the search applies paramodulation between the current
/// clause and a cited unit equation (in either direction, at any non-variable position),
/// unit resolution against a cited clause, and equality resolution, by iterative deepening
/// up to kMaxReplayDepth inferences. A state that subsumes the target (up to variable
/// renaming, literal order, and the orientation of each literal) closes the search.
/// Unverified means no derivation was found within the bounds, not that the step is wrong.
///
/// Throws UnknownStep if `id` is absent or names an input step.
ReplayResult replay_step(const ProofTrace& t, int id, std::size_t budget = kDefaultReplayBudget);

std::string_view to_string(ReplayStatus s);

}  // namespace agmloop::proofcheck
