#include "powerclass/overfull.hpp"

#include "powerclass/number_theory.hpp"

namespace powerclass {

bool is_overfull(const Graph& g) {
  if (g.n() <= 1) return false;
  return g.edge_count() > max_degree(g) * (g.n() / 2);
}

OverfullReport deficiency_report(const Graph& g) {
  OverfullReport r;
  r.n = g.n();
  r.edge_count = g.edge_count();
  r.max_degree = max_degree(g);
  r.overfull = is_overfull(g);
  r.deficiency = r.n * (r.n > 0 ? r.n - 1 : 0) / 2 - r.edge_count;
  if (r.n % 2 == 1 && r.n >= 3) r.budget = (r.n - 1) / 2 - 1;
  return r;
}

GroupFacts group_facts(const Group& g) {
  return {is_cyclic(g), g.order() % 2 == 1, is_prime_power(g.order())};
}

ClassPrediction predict_class(const Group& g) {
  ClassPrediction p;
  p.facts = group_facts(g);
  if (!p.facts.odd) {
    p.reason = ClassReason::EvenOrder;
  } else if (p.facts.cyclic && p.facts.prime_power && g.order() >= 3) {
    p.label = EdgeClass::Class2;
    p.reason = ClassReason::OddPrimePowerCyclicOverfull;
  } else if (!p.facts.cyclic) {
    // Only the identity is joined to everything (Cameron), so the core is one vertex.
    p.reason = ClassReason::CoreSmall;
  } else {
    p.reason = ClassReason::TheoremClassification;
  }
  return p;
}

std::optional<CoreWitness> core_class1_check(const Graph& g) {
  const auto core = core_subgraph(g);
  if (core.graph.n() <= 2) return CoreWitness::AtMostTwoVertices;
  if (is_acyclic(core.graph)) return CoreWitness::Acyclic;
  return std::nullopt;
}

std::string to_string(EdgeClass c) { return c == EdgeClass::Class1 ? "Class1" : "Class2"; }

std::string to_string(ClassReason r) {
  switch (r) {
    case ClassReason::EvenOrder: return "even-order";
    case ClassReason::OddPrimePowerCyclicOverfull: return "odd-prime-power-cyclic-overfull";
    case ClassReason::CoreSmall: return "core-small";
    case ClassReason::TheoremClassification: return "theorem-classification";
  }
  return "unknown";
}

std::string to_string(CoreWitness w) {
  return w == CoreWitness::AtMostTwoVertices ? "core has at most 2 vertices" : "core is acyclic";
}

}  // namespace powerclass
