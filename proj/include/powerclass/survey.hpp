#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "powerclass/catalog.hpp"
#include "powerclass/overfull.hpp"
#include "powerclass/oracle.hpp"

namespace powerclass {

struct SurveyOptions {
  std::size_t oracle_max_order = 0;  ///< exact cross-check for orders <= this (0: off)
  bool witness = false;              ///< build and verify a coloring per group
  std::uint64_t seed = 0x5eed;
  std::uint64_t node_budget = kDefaultNodeBudget;
  int threads = 0;                   ///< 0: OpenMP default
  bool timing = false;               ///< include wall-clock fields (breaks byte-identical output)
};

struct WitnessStatus {
  std::size_t colors_used = 0;
  std::size_t palette = 0;
  bool verified = false;
  bool determinate = true;
  std::string strategy;
  std::optional<EdgeClass> label;
  std::size_t exchanges = 0;
  std::size_t kempe_steps = 0;
  std::size_t multi_steps = 0;
  std::size_t random_restarts = 0;
  std::uint64_t search_nodes = 0;
};

struct OracleStatus {
  std::optional<std::size_t> chromatic_index;
  std::uint64_t nodes = 0;
};

struct ClassReport {
  std::string spec;
  std::size_t order = 0;
  GroupFacts facts;
  OverfullReport overfull;
  std::size_t join_set_size = 0;
  std::size_t expected_join_set_size = 0;
  std::optional<CoreWitness> core_witness;
  ClassPrediction prediction;
  std::optional<WitnessStatus> witness;
  std::optional<OracleStatus> oracle;
  std::vector<std::string> mismatches;
  double seconds = 0.0;
};

struct SurveyResult {
  std::vector<ClassReport> reports;
  std::vector<std::string> overfull_groups;
  std::vector<std::string> mismatches;  ///< "spec: what failed"
};

/// Analyzes one group and records every theorem-consistency failure in
/// report.mismatches. Group construction errors propagate.
ClassReport survey_group(const std::string& spec, const SurveyOptions& options);

/// Per-group work fanned out over OpenMP threads; reports keep catalog order.
SurveyResult run_survey(const Catalog& catalog, const SurveyOptions& options);
/// Single-threaded reference for run_survey.
SurveyResult run_survey_serial(const Catalog& catalog, const SurveyOptions& options);

nlohmann::json report_to_json(const ClassReport& r, bool timing);
/// {"params": {...}, "reports": [...], "summary": {"overfull_groups": [...], "mismatches": [...]}}
nlohmann::json survey_to_json(const SurveyResult& result, const SurveyOptions& options, std::size_t max_order);

}  // namespace powerclass
