#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "powerclass/graph.hpp"
#include "powerclass/groups.hpp"

namespace powerclass {

/// |E| > Delta * floor(n/2), in exact integer arithmetic. False for n <= 1.
bool is_overfull(const Graph& g);

struct OverfullReport {
  std::size_t n = 0;
  std::size_t edge_count = 0;
  std::size_t max_degree = 0;
  bool overfull = false;
  std::size_t deficiency = 0;           ///< n(n-1)/2 - |E|
  std::optional<std::size_t> budget;    ///< odd n = 2m+1 only: m - 1 (how many edges K_n may lose and stay overfull)
};

OverfullReport deficiency_report(const Graph& g);

enum class EdgeClass { Class1, Class2 };

enum class ClassReason {
  EvenOrder,
  OddPrimePowerCyclicOverfull,
  CoreSmall,
  TheoremClassification,
};

struct GroupFacts {
  bool cyclic = false;
  bool odd = false;
  bool prime_power = false;
};

struct ClassPrediction {
  EdgeClass label = EdgeClass::Class1;
  ClassReason reason = ClassReason::TheoremClassification;
  GroupFacts facts;
};

GroupFacts group_facts(const Group& g);

/// Class 2 exactly for cyclic groups of odd prime-power order >= 3.
ClassPrediction predict_class(const Group& g);

enum class CoreWitness { AtMostTwoVertices, Acyclic };

/// Sufficient (not necessary) Class 1 conditions on the max-degree core.
/// An empty result says nothing about the class.
std::optional<CoreWitness> core_class1_check(const Graph& g);

std::string to_string(EdgeClass c);
std::string to_string(ClassReason r);
std::string to_string(CoreWitness w);

}  // namespace powerclass
