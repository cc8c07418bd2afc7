#include "powerclass/survey.hpp"

#include <chrono>
#include <omp.h>

#include "powerclass/delta_color.hpp"
#include "powerclass/power_graph.hpp"

namespace powerclass {

ClassReport survey_group(const std::string& spec, const SurveyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Group g = construct_group(spec);
  const Graph pg = build_power_graph(g);

  ClassReport r;
  r.spec = g.label();
  r.order = g.order();
  r.facts = group_facts(g);
  r.overfull = deficiency_report(pg);
  r.join_set_size = full_degree_vertices(pg).size();
  r.expected_join_set_size = expected_join_set_size(g);
  r.core_witness = core_class1_check(pg);
  r.prediction = predict_class(g);

  auto flag = [&](const std::string& what) { r.mismatches.push_back(what); };
  const bool theorem_overfull = r.facts.cyclic && r.facts.odd && r.facts.prime_power && r.order >= 3;
  if (r.overfull.overfull != theorem_overfull) flag("overfull predicate disagrees with the cyclic odd prime-power criterion");
  if (r.join_set_size != r.expected_join_set_size) flag("join-set size disagrees with the cyclic/quaternion trichotomy");
  if ((r.prediction.label == EdgeClass::Class2) != r.overfull.overfull) flag("predicted class disagrees with overfullness");
  if (r.core_witness && r.prediction.label != EdgeClass::Class1) flag("core condition holds but Class 2 was predicted");

  const std::size_t delta = r.overfull.max_degree;
  const std::size_t expected_colors = delta + (r.prediction.label == EdgeClass::Class2 ? 1 : 0);

  if (options.witness) {
    DeltaColorOptions dco;
    dco.rhee.seed = options.seed;
    dco.rhee.node_budget = options.node_budget;
    dco.node_budget = options.node_budget;
    const auto dc = delta_color(g, pg, dco);
    const auto check = verify_proper(pg, dc.coloring);
    WitnessStatus w;
    w.colors_used = check.distinct_colors;
    w.palette = dc.coloring.palette();
    w.determinate = dc.determinate;
    w.verified = dc.determinate && check.valid() && check.distinct_colors == expected_colors;
    w.strategy = dc.strategy;
    w.label = dc.label;
    w.search_nodes = dc.search_nodes;
    if (dc.rhee) {
      w.exchanges = dc.rhee->stats.exchanges;
      w.kempe_steps = dc.rhee->stats.kempe;
      w.multi_steps = dc.rhee->stats.multi_step;
      w.random_restarts = dc.rhee->stats.random_restarts;
    }
    if (!dc.determinate) flag("witness generation indeterminate");
    else if (!check.valid()) flag("witness coloring failed verification");
    else if (check.distinct_colors != expected_colors) flag("witness uses " + std::to_string(check.distinct_colors) + " colors, expected " + std::to_string(expected_colors));
    if (dc.label && *dc.label != r.prediction.label) flag("witness class disagrees with prediction");
    r.witness = w;
  }

  if (options.oracle_max_order > 0 && r.order <= options.oracle_max_order) {
    const auto res = exact_chromatic_index(pg, options.node_budget);
    r.oracle = OracleStatus{res.chromatic_index, res.nodes_explored};
    if (!res.chromatic_index) flag("oracle indeterminate within budget");
    else if (*res.chromatic_index != expected_colors) flag("oracle chromatic index " + std::to_string(*res.chromatic_index) + " disagrees with prediction");
    else if (!res.witness || !verify_proper(pg, *res.witness).valid()) flag("oracle witness failed verification");
  }

  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace {

SurveyResult summarize(std::vector<ClassReport> reports) {
  SurveyResult s;
  s.reports = std::move(reports);
  for (const auto& r : s.reports) {
    if (r.overfull.overfull) s.overfull_groups.push_back(r.spec);
    for (const auto& m : r.mismatches) s.mismatches.push_back(r.spec + ": " + m);
  }
  return s;
}

}  // namespace

SurveyResult run_survey(const Catalog& catalog, const SurveyOptions& options) {
  std::vector<ClassReport> reports(catalog.size());
  const auto count = static_cast<std::int64_t>(catalog.size());
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
  // Largest groups first so the dynamic schedule balances.
  std::vector<std::size_t> order(catalog.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = catalog.size() - 1 - i;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto idx = order[static_cast<std::size_t>(i)];
    reports[idx] = survey_group(catalog[idx].spec, options);
  }
  return summarize(std::move(reports));
}

SurveyResult run_survey_serial(const Catalog& catalog, const SurveyOptions& options) {
  std::vector<ClassReport> reports;
  reports.reserve(catalog.size());
  for (const auto& entry : catalog) reports.push_back(survey_group(entry.spec, options));
  return summarize(std::move(reports));
}

nlohmann::json report_to_json(const ClassReport& r, bool timing) {
  nlohmann::json j;
  j["spec"] = r.spec;
  j["order"] = r.order;
  j["is_cyclic"] = r.facts.cyclic;
  j["odd"] = r.facts.odd;
  j["prime_power"] = r.facts.prime_power;
  j["edge_count"] = r.overfull.edge_count;
  j["max_degree"] = r.overfull.max_degree;
  j["deficiency"] = r.overfull.deficiency;
  j["budget"] = r.overfull.budget ? nlohmann::json(*r.overfull.budget) : nlohmann::json(nullptr);
  j["overfull"] = r.overfull.overfull;
  j["join_set_size"] = r.join_set_size;
  j["core_witness"] = r.core_witness ? nlohmann::json(to_string(*r.core_witness)) : nlohmann::json(nullptr);
  j["predicted_class"] = to_string(r.prediction.label);
  j["reason"] = to_string(r.prediction.reason);
  if (r.witness) {
    const auto& w = *r.witness;
    j["witness"] = {{"colors_used", w.colors_used},
                    {"palette", w.palette},
                    {"verified", w.verified},
                    {"determinate", w.determinate},
                    {"strategy", w.strategy},
                    {"class", w.label ? nlohmann::json(to_string(*w.label)) : nlohmann::json(nullptr)},
                    {"exchanges", w.exchanges},
                    {"kempe_steps", w.kempe_steps},
                    {"multi_steps", w.multi_steps},
                    {"random_restarts", w.random_restarts},
                    {"search_nodes", w.search_nodes}};
  }
  if (r.oracle) {
    j["oracle"] = {{"chromatic_index", r.oracle->chromatic_index ? nlohmann::json(*r.oracle->chromatic_index) : nlohmann::json("indeterminate")},
                   {"nodes", r.oracle->nodes}};
  }
  j["mismatches"] = r.mismatches;
  if (timing) j["seconds"] = r.seconds;
  return j;
}

nlohmann::json survey_to_json(const SurveyResult& result, const SurveyOptions& options, std::size_t max_order) {
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& r : result.reports) reports.push_back(report_to_json(r, options.timing));
  return {{"params", {{"max_order", max_order},
                      {"oracle_max_order", options.oracle_max_order},
                      {"witness", options.witness},
                      {"seed", options.seed},
                      {"node_budget", options.node_budget}}},
          {"reports", reports},
          {"summary", {{"overfull_groups", result.overfull_groups}, {"mismatches", result.mismatches}}}};
}

}  // namespace powerclass
