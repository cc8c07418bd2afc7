#include "powerclass/delta_color.hpp"

#include <stdexcept>

#include "powerclass/constructions.hpp"
#include "powerclass/power_graph.hpp"

namespace powerclass {

Strategy parse_strategy(const std::string& s) {
  if (s == "auto") return Strategy::Auto;
  if (s == "roundrobin") return Strategy::RoundRobin;
  if (s == "sp") return Strategy::Sp;
  if (s == "rhee") return Strategy::Rhee;
  if (s == "exact") return Strategy::Exact;
  throw std::invalid_argument("unknown strategy '" + s + "'");
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::RoundRobin: return "roundrobin";
    case Strategy::Sp: return "sp";
    case Strategy::Rhee: return "rhee";
    case Strategy::Exact: return "exact";
  }
  return "unknown";
}

namespace {

DeltaColoring by_round_robin(const Graph& pg) {
  const std::size_t n = pg.n();
  if (n % 2 != 0) throw std::invalid_argument("roundrobin strategy needs an even order");
  DeltaColoring out;
  out.coloring = restrict_to(round_robin_even(n), pg);
  out.strategy = "roundrobin";
  if (out.coloring.distinct_colors() == max_degree(pg)) out.label = EdgeClass::Class1;
  return out;
}

DeltaColoring by_sp(const Graph& pg) {
  const std::size_t n = pg.n();
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("sp strategy needs an odd order >= 3");
  DeltaColoring out;
  out.coloring = restrict_to(sp_coloring(n), pg);
  out.strategy = "sp";
  const auto report = deficiency_report(pg);
  if (report.overfull) {
    out.label = EdgeClass::Class2;
    out.certificate = report;
  }
  return out;
}

DeltaColoring by_rhee(const Graph& pg, const DeltaColorOptions& options) {
  DeltaColoring out;
  auto result = rhee_transform(pg, options.rhee);
  out.strategy = result.highest_rung == RheeRung::Backtracking ? "rhee+backtracking" : "rhee";
  out.search_nodes = result.backtracking_nodes;
  if (result.coloring) {
    out.coloring = *result.coloring;
    out.label = EdgeClass::Class1;
  } else {
    out.determinate = false;
    out.coloring = result.partial ? *result.partial : EdgeColoring(pg.n(), pg.n() - 1);
  }
  out.rhee = std::move(result);
  return out;
}

DeltaColoring by_exact(const Graph& pg, const DeltaColorOptions& options) {
  DeltaColoring out;
  auto result = exact_chromatic_index(pg, options.node_budget);
  out.strategy = "exact";
  out.search_nodes = result.nodes_explored;
  if (!result.chromatic_index || !result.witness) {
    out.determinate = false;
    out.coloring = EdgeColoring(pg.n(), max_degree(pg));
    return out;
  }
  out.coloring = *result.witness;
  const bool class1 = *result.chromatic_index == max_degree(pg);
  out.label = class1 ? EdgeClass::Class1 : EdgeClass::Class2;
  if (!class1 && is_overfull(pg)) out.certificate = deficiency_report(pg);
  return out;
}

}  // namespace

DeltaColoring delta_color(const Group& g, const DeltaColorOptions& options) {
  return delta_color(g, build_power_graph(g), options);
}

DeltaColoring delta_color(const Group& g, const Graph& pg, const DeltaColorOptions& options) {
  switch (options.strategy) {
    case Strategy::RoundRobin: return by_round_robin(pg);
    case Strategy::Sp: return by_sp(pg);
    case Strategy::Rhee: return by_rhee(pg, options);
    case Strategy::Exact: return by_exact(pg, options);
    case Strategy::Auto: break;
  }
  if (g.order() == 1) {
    DeltaColoring out;
    out.coloring = EdgeColoring(1, 0);
    out.label = EdgeClass::Class1;
    out.strategy = "trivial";
    return out;
  }
  if (g.order() % 2 == 0) return by_round_robin(pg);
  if (predict_class(g).label == EdgeClass::Class2) return by_sp(pg);
  return by_rhee(pg, options);
}

}  // namespace powerclass
