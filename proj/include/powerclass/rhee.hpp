#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "powerclass/edge_coloring.hpp"
#include "powerclass/oracle.hpp"

namespace powerclass {

/// Working state of an edge-exchange run: a proper coloring of a working graph
/// that differs from the target by `extra` (colored, not in target) and
/// `missing` (in target, uncolored).
struct ExchangeState {
  EdgeColoring coloring;
  std::shared_ptr<const Graph> target;
  std::set<Edge> extra;
  std::set<Edge> missing;

  std::size_t working_edge_count() const { return coloring.assigned_count(); }
};

ExchangeState make_exchange_state(std::shared_ptr<const Graph> target, EdgeColoring coloring);

struct ExchangeStats {
  std::size_t exchanges = 0;
  std::size_t direct = 0;           ///< add colored with a color already free at both ends
  std::size_t kempe = 0;            ///< one alternating-path inversion first
  std::size_t multi_step = 0;       ///< successes that needed a sacrificed target edge
  std::size_t random_restarts = 0;
  std::size_t random_inversions = 0;
};

/// Deletes `remove` (colored) and inserts `add` (uncolored), keeping the
/// coloring proper. Colors `add` directly when its endpoints share a free
/// color (the removed color preferred), otherwise inverts one maximal
/// alternating path that frees a common color. Returns std::nullopt when no
/// single inversion works; throws std::invalid_argument on bad arguments.
std::optional<ExchangeState> exchange_edge(const ExchangeState& s, const Edge& remove, const Edge& add);

/// In-place variant; leaves `s` untouched and returns false on failure.
bool try_exchange(ExchangeState& s, const Edge& remove, const Edge& add, ExchangeStats* stats = nullptr);

struct RheeOptions {
  std::uint64_t seed = 0x5eed;
  std::size_t sacrifice_depth = 3;      ///< max exchanges chained per missing edge
  std::size_t restarts = 400;           ///< randomized Kempe restarts per stuck edge
  std::size_t moves_per_restart = 0;    ///< 0 means n
  bool allow_backtracking = true;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

enum class RheeRung { Base, Direct, Kempe, MultiStep, Randomized, Backtracking };

struct RheeResult {
  std::optional<EdgeColoring> coloring;  ///< palette n-1, total on the target, on success
  ExchangeStats stats;
  RheeRung highest_rung = RheeRung::Base;
  std::size_t leftover_removed = 0;      ///< extra edges dropped once nothing was missing
  std::optional<EdgeColoring> partial;   ///< working coloring restricted to the target, on failure
  std::vector<Edge> remaining_extra;     ///< diagnostics on failure
  std::vector<Edge> remaining_missing;
  std::uint64_t backtracking_nodes = 0;
};

/// Starts from base_near_coloring(n) and trades colored non-target edges for
/// uncolored target edges until the target is fully colored with n-1 colors.
/// Requires n odd >= 3, target max degree n-1 and |E(target)| <= (n-1)^2/2
/// (not overfull). Failure says nothing about the target's class.
RheeResult rhee_transform(const Graph& target, const RheeOptions& options = {});

std::string to_string(RheeRung r);

}  // namespace powerclass
