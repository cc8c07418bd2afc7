#include "doctest.h"
#include "powerclass/catalog.hpp"
#include "powerclass/number_theory.hpp"
#include "powerclass/overfull.hpp"
#include "powerclass/power_graph.hpp"

using namespace powerclass;

TEST_CASE("is_overfull examples") {
  CHECK(is_overfull(build_power_graph(make_cyclic(9))));
  CHECK_FALSE(is_overfull(build_power_graph(make_cyclic(15))));
  CHECK_FALSE(is_overfull(build_power_graph(make_cyclic(6))));
  CHECK_FALSE(is_overfull(Graph(1)));
  CHECK_FALSE(is_overfull(Graph(0)));
  CHECK(is_overfull(complete_graph(3)));
  CHECK_FALSE(is_overfull(complete_graph(2)));
}

TEST_CASE("deficiency_report examples") {
  const auto c15 = deficiency_report(build_power_graph(make_cyclic(15)));
  CHECK(c15.deficiency == 8);
  CHECK(c15.budget == std::optional<std::size_t>(6));
  CHECK_FALSE(c15.overfull);
  CHECK(c15.edge_count == 97);
  CHECK(c15.max_degree == 14);

  const auto k9 = deficiency_report(complete_graph(9));
  CHECK(k9.deficiency == 0);
  CHECK(k9.budget == std::optional<std::size_t>(3));
  CHECK(k9.overfull);

  const auto c21 = deficiency_report(build_power_graph(make_cyclic(21)));
  CHECK(c21.edge_count == 198);
  CHECK(c21.deficiency == 12);
  CHECK(c21.budget == std::optional<std::size_t>(9));
  CHECK_FALSE(c21.overfull);

  CHECK_FALSE(deficiency_report(complete_graph(8)).budget.has_value());
}

TEST_CASE("odd order with full vertex: overfull iff deficiency within budget") {
  for (std::size_t n = 3; n <= 15; n += 2) {
    const auto all = complete_graph(n).edges();
    // Remove the first k edges not at vertex 0 so Delta stays n - 1.
    std::vector<Edge> removable;
    for (const auto& e : all)
      if (e.u != 0) removable.push_back(e);
    for (std::size_t k = 0; k <= n; ++k) {
      std::vector<Edge> kept;
      std::size_t dropped = 0;
      for (const auto& e : all) {
        if (e.u != 0 && dropped < k) {
          ++dropped;
          continue;
        }
        kept.push_back(e);
      }
      const Graph g(n, kept);
      const auto r = deficiency_report(g);
      REQUIRE(r.max_degree == n - 1);
      REQUIRE(r.overfull == (r.deficiency <= *r.budget));
    }
  }
}

TEST_CASE("predict_class examples") {
  CHECK(predict_class(make_cyclic(27)).label == EdgeClass::Class2);
  CHECK(predict_class(make_cyclic(27)).reason == ClassReason::OddPrimePowerCyclicOverfull);
  CHECK(predict_class(make_cyclic(15)).label == EdgeClass::Class1);
  CHECK(predict_class(make_cyclic(16)).label == EdgeClass::Class1);
  CHECK(predict_class(make_cyclic(16)).reason == ClassReason::EvenOrder);
  CHECK(predict_class(make_cyclic(1)).label == EdgeClass::Class1);
  CHECK(predict_class(make_cyclic(2)).label == EdgeClass::Class1);
  const auto p = predict_class(construct_group("product:cyclic:3,cyclic:3"));
  CHECK(p.label == EdgeClass::Class1);
  CHECK_FALSE(p.facts.cyclic);
  CHECK(p.facts.odd);
  CHECK(p.facts.prime_power);
}

TEST_CASE("core_class1_check examples") {
  CHECK(core_class1_check(build_power_graph(make_dihedral(3))) == CoreWitness::AtMostTwoVertices);
  CHECK(core_class1_check(build_power_graph(make_quaternion(2))) == CoreWitness::AtMostTwoVertices);
  CHECK_FALSE(core_class1_check(complete_graph(9)).has_value());
  // Path on 4 vertices: core is the two middle vertices.
  CHECK(core_class1_check(Graph(4, {Edge(0, 1), Edge(1, 2), Edge(2, 3)})) == CoreWitness::AtMostTwoVertices);
  // Three degree-4 centers joined in a path: the core is a path.
  const Graph caterpillar(11, {Edge(0, 1), Edge(1, 2), Edge(0, 3), Edge(0, 4), Edge(0, 9), Edge(1, 5), Edge(1, 6),
                               Edge(2, 7), Edge(2, 8), Edge(2, 10)});
  CHECK(core_class1_check(caterpillar) == CoreWitness::Acyclic);
}

TEST_CASE("catalog sweep: overfullness and predicted class") {
  for (const auto& entry : generate_catalog(48)) {
    const auto g = construct_group(entry.spec);
    const auto pg = build_power_graph(g);
    const auto r = deficiency_report(pg);
    const auto pred = predict_class(g);
    const std::size_t n = g.order();
    CAPTURE(entry.spec);
    const bool theorem = is_cyclic(g) && n % 2 == 1 && is_prime_power(n) && n >= 3;
    REQUIRE(r.overfull == theorem);
    if (n % 2 == 0) REQUIRE_FALSE(r.overfull);
    if (n % 2 == 1 && n >= 3 && full_degree_vertices(pg).size() == 1) REQUIRE(r.deficiency >= (n - 1) / 2);
    REQUIRE((pred.label == EdgeClass::Class2) == r.overfull);
    if (core_class1_check(pg)) REQUIRE(pred.label == EdgeClass::Class1);
  }
}
