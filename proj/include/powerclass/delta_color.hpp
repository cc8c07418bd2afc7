#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "powerclass/groups.hpp"
#include "powerclass/overfull.hpp"
#include "powerclass/rhee.hpp"

namespace powerclass {

enum class Strategy { Auto, RoundRobin, Sp, Rhee, Exact };

Strategy parse_strategy(const std::string& s);
std::string to_string(Strategy s);

struct DeltaColorOptions {
  Strategy strategy = Strategy::Auto;
  RheeOptions rhee;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

struct DeltaColoring {
  EdgeColoring coloring;
  std::optional<EdgeClass> label;             ///< empty when nothing was proven
  std::string strategy;                       ///< what actually produced the coloring
  bool determinate = true;                    ///< false: partial coloring, escalation exhausted
  std::optional<OverfullReport> certificate;  ///< overfull counting proof for Class 2
  std::optional<RheeResult> rhee;             ///< exchange statistics when the transform ran
  std::uint64_t search_nodes = 0;
};

/// Edge-colors the power graph of g. Auto dispatch: even order -> round-robin
/// 1-factorization of K_n restricted to the graph; odd prime-power cyclic ->
/// S_p classes (Delta+1 colors, overfull certificate); other odd orders ->
/// rhee_transform. Other strategies force one route and throw
/// std::invalid_argument when it does not apply (roundrobin needs even order,
/// sp and rhee need odd order).
DeltaColoring delta_color(const Group& g, const DeltaColorOptions& options = {});
DeltaColoring delta_color(const Group& g, const Graph& power_graph, const DeltaColorOptions& options);

}  // namespace powerclass
