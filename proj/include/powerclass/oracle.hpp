#pragma once

#include <cstdint>
#include <optional>

#include "powerclass/edge_coloring.hpp"

namespace powerclass {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

enum class Verdict { Yes, No, Indeterminate };

struct ColorabilityResult {
  Verdict verdict = Verdict::Indeterminate;
  std::optional<EdgeColoring> witness;  ///< present iff verdict == Yes
  std::uint64_t nodes = 0;
};

/// Exhaustive k-edge-colorability test. Rejects immediately when Delta > k or
/// |E| > k * floor(n/2). Otherwise backtracks over edges in descending
/// endpoint-degree-sum order with the edges of one maximum-degree vertex
/// pre-colored 0..d-1 and fresh colors opened in increasing order only.
/// Supports k <= 64.
ColorabilityResult is_k_edge_colorable(const Graph& g, std::size_t k,
                                       std::uint64_t budget = kDefaultNodeBudget);

struct OracleResult {
  std::optional<std::size_t> chromatic_index;  ///< empty when the Delta test ran out of budget
  std::optional<EdgeColoring> witness;
  std::uint64_t nodes_explored = 0;
  bool budget_exhausted = false;
};

/// Chromatic index restricted to {Delta, Delta+1}. The Delta+1 witness comes
/// from misra_gries, and is also returned when the search runs out of budget.
OracleResult exact_chromatic_index(const Graph& g, std::uint64_t budget = kDefaultNodeBudget);

}  // namespace powerclass
