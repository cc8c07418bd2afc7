#include "powerclass/power_graph.hpp"

#include <cstdint>

#include "powerclass/number_theory.hpp"

namespace powerclass {

namespace {

std::vector<Edge> row_edges(const Group& g, Element a) {
  std::vector<Edge> out;
  const auto& mine = g.cyclic_subgroup(a);
  for (Element b = a + 1; b < g.order(); ++b)
    if (mine.test(b) || g.cyclic_subgroup(b).test(a)) out.emplace_back(a, b);
  return out;
}

Graph assemble(const Group& g, const std::vector<std::vector<Edge>>& rows) {
  std::vector<Edge> edges;
  for (const auto& r : rows) edges.insert(edges.end(), r.begin(), r.end());
  Graph graph(g.order(), edges);
  graph.set_labels(g.element_names());
  return graph;
}

}  // namespace

Graph build_power_graph(const Group& g) {
  const auto n = static_cast<std::int64_t>(g.order());
  std::vector<std::vector<Edge>> rows(g.order());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t a = 0; a < n; ++a) rows[static_cast<std::size_t>(a)] = row_edges(g, static_cast<Element>(a));
  return assemble(g, rows);
}

Graph build_power_graph_serial(const Group& g) {
  std::vector<std::vector<Edge>> rows;
  rows.reserve(g.order());
  for (Element a = 0; a < g.order(); ++a) rows.push_back(row_edges(g, a));
  return assemble(g, rows);
}

std::size_t expected_join_set_size(const Group& g) {
  const std::size_t n = g.order();
  if (is_cyclic(g)) return (n == 1 || is_prime_power(n)) ? n : 1 + euler_phi(n);
  if (is_generalized_quaternion(g)) return 2;
  return 1;
}

}  // namespace powerclass
