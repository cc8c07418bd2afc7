// powerclass: power graphs of finite groups, overfullness, and edge-coloring witnesses.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "powerclass/catalog.hpp"
#include "powerclass/delta_color.hpp"
#include "powerclass/io.hpp"
#include "powerclass/power_graph.hpp"
#include "powerclass/survey.hpp"

using namespace powerclass;
using nlohmann::json;

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("POWERCLASS_SEED")) return std::stoull(env);
  return 0x5eed;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    write_file(out, text);
  }
}

json edges_json(const std::vector<Edge>& es) {
  json a = json::array();
  for (const auto& e : es) a.push_back({e.u, e.v});
  return a;
}

EdgeColoring load_coloring(const std::string& path, std::size_t n) {
  const auto text = read_file(path);
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return coloring_from_json(json::parse(text), n);
  return coloring_from_csv(text, n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power graphs of finite groups: overfullness, edge-chromatic class, and verified colorings"};
  app.require_subcommand(1);

  std::string group_spec, out, format = "json", strategy = "auto", graph_path, coloring_path;
  std::uint64_t seed = default_seed();
  std::uint64_t budget = kDefaultNodeBudget;

  auto* build = app.add_subcommand("build", "Power graph of a group as JSON or DOT");
  build->add_option("-g,--group", group_spec, "Group spec, e.g. cyclic:15")->required();
  build->add_option("-f,--format", format, "json|dot")->check(CLI::IsMember({"json", "dot"}));
  build->add_option("-o,--out", out, "Output file (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "Overfull/deficiency/core report");
  analyze->add_option("-g,--group", group_spec)->required();
  analyze->add_option("-o,--out", out);

  auto* classify = app.add_subcommand("classify", "Class 1 / Class 2 prediction");
  classify->add_option("-g,--group", group_spec)->required();
  classify->add_option("-o,--out", out);

  auto* color = app.add_subcommand("color", "Produce and verify an edge-coloring witness");
  color->add_option("-g,--group", group_spec)->required();
  color->add_option("-s,--strategy", strategy, "auto|roundrobin|sp|rhee|exact")
      ->check(CLI::IsMember({"auto", "roundrobin", "sp", "rhee", "exact"}));
  color->add_option("--seed", seed, "Seed for randomized Kempe restarts (env POWERCLASS_SEED)");
  color->add_option("--budget", budget, "Backtracking node budget");
  color->add_option("-f,--format", format, "csv|json|dot")->check(CLI::IsMember({"csv", "json", "dot"}));
  color->add_option("-o,--out", out);

  auto* verify = app.add_subcommand("verify", "Check a coloring against a group's power graph or a graph JSON");
  auto* vgroup = verify->add_option("-g,--group", group_spec);
  auto* vgraph = verify->add_option("--graph", graph_path, "Graph JSON file");
  vgroup->excludes(vgraph);
  verify->add_option("-c,--coloring", coloring_path, "Coloring CSV (one column per color) or JSON")->required();
  std::optional<std::size_t> expect_colors;
  verify->add_option("--expect-colors", expect_colors, "Fail unless exactly this many colors are used");
  verify->add_option("-o,--out", out);

  auto* survey = app.add_subcommand("survey", "Theorem sweep over the group catalog");
  std::size_t max_order = 48, oracle_max = 0;
  bool witness = false, timing = false;
  int threads = 0;
  std::vector<std::string> extra;
  survey->add_option("--max-order", max_order)->check(CLI::PositiveNumber);
  survey->add_option("--oracle-max-order", oracle_max, "Exact chromatic index for orders up to this");
  survey->add_flag("--witness", witness, "Build and verify a coloring for every group");
  survey->add_option("--seed", seed);
  survey->add_option("--budget", budget);
  survey->add_option("--threads", threads);
  survey->add_option("--extra", extra, "Additional group specs (e.g. table:file)");
  survey->add_flag("--timing", timing, "Include per-group wall time");
  survey->add_option("-o,--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) {
      const auto g = construct_group(group_spec);
      const auto pg = build_power_graph(g);
      emit(format == "dot" ? graph_to_dot(pg) : graph_to_json(pg).dump(2) + "\n", out);
      return 0;
    }
    if (*analyze) {
      const auto g = construct_group(group_spec);
      const auto pg = build_power_graph(g);
      const auto rep = deficiency_report(pg);
      const auto core = core_subgraph(pg);
      const auto witness_kind = core_class1_check(pg);
      json j{{"group", g.label()},
             {"n", rep.n},
             {"edge_count", rep.edge_count},
             {"max_degree", rep.max_degree},
             {"overfull", rep.overfull},
             {"deficiency", rep.deficiency},
             {"budget", rep.budget ? json(*rep.budget) : json(nullptr)},
             {"full_degree_vertices", full_degree_vertices(pg)},
             {"core", {{"vertices", core.parent}, {"edges", edges_json(core.graph.edges())}}},
             {"core_class1_witness", witness_kind ? json(to_string(*witness_kind)) : json(nullptr)},
             {"complement_edges", edges_json(complement_edges(pg))}};
      emit(j.dump(2) + "\n", out);
      return 0;
    }
    if (*classify) {
      const auto g = construct_group(group_spec);
      const auto p = predict_class(g);
      json j{{"group", g.label()},
             {"order", g.order()},
             {"class", to_string(p.label)},
             {"reason", to_string(p.reason)},
             {"is_cyclic", p.facts.cyclic},
             {"odd", p.facts.odd},
             {"prime_power", p.facts.prime_power}};
      emit(j.dump(2) + "\n", out);
      return 0;
    }
    if (*color) {
      const auto g = construct_group(group_spec);
      const auto pg = build_power_graph(g);
      DeltaColorOptions opt;
      opt.strategy = parse_strategy(strategy);
      opt.rhee.seed = seed;
      opt.rhee.node_budget = budget;
      opt.node_budget = budget;
      const auto dc = delta_color(g, pg, opt);
      const auto check = verify_proper(pg, dc.coloring);
      if (format == "csv") emit(coloring_to_csv(dc.coloring), out);
      else if (format == "dot") emit(graph_to_dot(pg, &dc.coloring), out);
      else emit(coloring_to_json(dc.coloring).dump(2) + "\n", out);
      std::cerr << g.label() << ": strategy=" << dc.strategy << " colors=" << check.distinct_colors
                << " max_degree=" << max_degree(pg)
                << " class=" << (dc.label ? to_string(*dc.label) : std::string("unproven"))
                << " verified=" << (check.valid() && dc.determinate ? "yes" : "no") << "\n";
      return check.valid() && dc.determinate ? 0 : 1;
    }
    if (*verify) {
      Graph pg;
      if (!group_spec.empty()) {
        pg = build_power_graph(construct_group(group_spec));
      } else if (!graph_path.empty()) {
        pg = graph_from_json(json::parse(read_file(graph_path)));
      } else {
        std::cerr << "verify: need --group or --graph\n";
        return 2;
      }
      const auto c = load_coloring(coloring_path, pg.n());
      const auto rep = verify_proper(pg, c);
      auto j = verification_to_json(rep);
      bool ok = rep.valid();
      if (expect_colors) {
        j["expected_colors"] = *expect_colors;
        ok = ok && rep.distinct_colors == *expect_colors;
      }
      emit(j.dump(2) + "\n", out);
      return ok ? 0 : 1;
    }
    if (*survey) {
      auto catalog = generate_catalog(max_order);
      for (const auto& spec : extra) catalog.push_back({construct_group(spec).label(), construct_group(spec).order()});
      sort_catalog(catalog);
      SurveyOptions opt;
      opt.oracle_max_order = oracle_max;
      opt.witness = witness;
      opt.seed = seed;
      opt.node_budget = budget;
      opt.threads = threads;
      opt.timing = timing;
      const auto result = run_survey(catalog, opt);
      emit(survey_to_json(result, opt, max_order).dump(2) + "\n", out);
      std::cerr << result.reports.size() << " groups, " << result.overfull_groups.size() << " overfull, "
                << result.mismatches.size() << " mismatches\n";
      for (const auto& m : result.mismatches) std::cerr << "  " << m << "\n";
      return result.mismatches.empty() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
