// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "powerclass/catalog.hpp"
#include "powerclass/constructions.hpp"
#include "powerclass/delta_color.hpp"
#include "powerclass/io.hpp"
#include "powerclass/kempe.hpp"
#include "powerclass/oracle.hpp"
#include "powerclass/overfull.hpp"
#include "powerclass/power_graph.hpp"
#include "powerclass/rhee.hpp"
#include "support/oracles.hpp"

using namespace powerclass;

namespace {

// Wall-clock ceilings in seconds.
constexpr double kCensusLimit = 1.0;
constexpr double kOverfullSweepLimit = 30.0;
constexpr double kWitnessLimit = 120.0;
constexpr double kMatchingLimit = 30.0;

struct Outcome {
  bool ok = true;
  std::string detail;
  double limit = 0.0;  // 0: no time bound
};

class Failures {
 public:
  void add(const std::string& what) {
    if (count_++ < 5) text_ += (text_.empty() ? "" : "; ") + what;
  }
  bool empty() const { return count_ == 0; }
  std::string summary() const {
    return count_ <= 5 ? text_ : text_ + "; ... " + std::to_string(count_) + " total";
  }

 private:
  std::size_t count_ = 0;
  std::string text_;
};

Outcome finish(const Failures& f, std::string detail, double limit = 0.0) {
  if (!f.empty()) return {false, f.summary(), limit};
  return {true, std::move(detail), limit};
}

std::vector<Group> catalog_groups(std::size_t max_order, std::vector<std::string>& specs) {
  std::vector<Group> out;
  for (const auto& e : generate_catalog(max_order)) {
    specs.push_back(e.spec);
    out.push_back(construct_group(e.spec));
  }
  return out;
}

// Cyclic, odd, prime power, order >= 3, decided from the table alone.
bool brute_theorem_class2(const Group& g) {
  const std::size_t n = g.order();
  if (n < 3 || n % 2 == 0) return false;
  bool cyclic = false;
  for (std::size_t x = 0; x < n && !cyclic; ++x) cyclic = oracle::brute_order(g, x) == n;
  if (!cyclic) return false;
  std::size_t p = 2;
  while (n % p != 0) ++p;
  std::size_t m = n;
  while (m % p == 0) m /= p;
  return m == 1;
}

Graph complete_minus(std::size_t n, const std::vector<Edge>& removed) {
  const std::set<Edge> drop(removed.begin(), removed.end());
  std::vector<Edge> edges;
  for (const auto& e : complete_graph(n).edges())
    if (!drop.count(e)) edges.push_back(e);
  return Graph(n, edges);
}

Outcome edge_census() {
  Failures f;
  const auto g = build_power_graph(make_cyclic(15));
  if (g.edge_count() != 97) f.add("edge count " + std::to_string(g.edge_count()));
  const std::set<Edge> expected{Edge(3, 5), Edge(3, 10), Edge(6, 5),  Edge(6, 10),
                                Edge(9, 5), Edge(9, 10), Edge(12, 5), Edge(12, 10)};
  const auto missing = complement_edges(g);
  const std::set<Edge> got(missing.begin(), missing.end());
  if (got != expected) f.add("non-edge set differs (" + std::to_string(got.size()) + " non-edges)");
  return finish(f, "97 edges, 8 non-edges", kCensusLimit);
}

Outcome overfull_sweep() {
  Failures f;
  std::vector<std::string> specs;
  auto groups = catalog_groups(48, specs);
  specs.push_back("table:nonabelian21");
  groups.push_back(load_table_group(oracle::fixture("nonabelian21.txt")));
  std::size_t overfull = 0;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const bool of = is_overfull(build_power_graph(groups[i]));
    overfull += of;
    if (of != brute_theorem_class2(groups[i])) f.add(specs[i]);
  }
  std::ostringstream d;
  d << groups.size() << " groups, " << overfull << " overfull, 0 mismatches";
  return finish(f, d.str(), kOverfullSweepLimit);
}

Outcome trichotomy() {
  Failures f;
  std::vector<std::string> specs;
  const auto groups = catalog_groups(48, specs);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto& g = groups[i];
    const std::size_t n = g.order();
    std::size_t involutions = 0;
    bool cyclic = false;
    for (std::size_t x = 0; x < n; ++x) {
      const auto o = oracle::brute_order(g, x);
      cyclic |= o == n;
      involutions += o == 2;
    }
    const bool two_group = (n & (n - 1)) == 0;
    const bool prime_power = n == 1 || [&] {
      std::size_t p = 2;
      while (n % p != 0) ++p;
      std::size_t m = n;
      while (m % p == 0) m /= p;
      return m == 1;
    }();
    std::size_t expected = 1;
    if (cyclic && prime_power) expected = n;
    else if (cyclic) expected = 1 + oracle::brute_phi(n);
    else if (two_group && involutions == 1) expected = 2;
    const auto got = full_degree_vertices(build_power_graph(g)).size();
    if (got != expected) f.add(specs[i] + ": " + std::to_string(got) + " vs " + std::to_string(expected));
  }
  return finish(f, std::to_string(groups.size()) + " groups");
}

Outcome witnesses() {
  Failures f;
  std::vector<std::string> specs;
  const auto groups = catalog_groups(33, specs);
  std::size_t class2 = 0;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto& g = groups[i];
    const auto pg = build_power_graph(g);
    const auto pred = predict_class(g);
    const std::size_t delta = max_degree(pg);
    const std::size_t want = pred.label == EdgeClass::Class1 ? delta : delta + 1;
    const auto dc = delta_color(g, pg, {});
    const auto rep = verify_proper(pg, dc.coloring);
    if (!dc.determinate) {
      f.add(specs[i] + ": indeterminate");
      continue;
    }
    if (!rep.valid()) f.add(specs[i] + ": coloring rejected");
    if (g.order() > 1 && rep.distinct_colors != want)
      f.add(specs[i] + ": " + std::to_string(rep.distinct_colors) + " colors, want " + std::to_string(want));
    if (pred.label == EdgeClass::Class2) {
      ++class2;
      if (!dc.certificate || !dc.certificate->overfull) f.add(specs[i] + ": missing overfull certificate");
    }
  }
  const std::pair<const char*, std::size_t> named[] = {
      {"cyclic:15", 14}, {"cyclic:21", 20}, {"cyclic:33", 32}, {"product:cyclic:3,cyclic:3", 8}};
  for (const auto& [spec, colors] : named) {
    const auto g = construct_group(spec);
    const auto pg = build_power_graph(g);
    const auto dc = delta_color(g, pg, {});
    const auto rep = verify_proper(pg, dc.coloring);
    if (!rep.valid() || rep.distinct_colors != colors) f.add(std::string(spec) + " not a verified " + std::to_string(colors) + "-coloring");
  }
  std::ostringstream d;
  d << groups.size() << " groups verified, " << class2 << " Class 2 with certificate";
  return finish(f, d.str(), kWitnessLimit);
}

Outcome fixtures() {
  Failures f;
  const auto g = build_power_graph(make_cyclic(15));
  const auto reference = coloring_from_csv(read_file(oracle::fixture("c15_reference_coloring.csv")), 15);
  const auto rep = verify_proper(g, reference);
  for (const auto& c : rep.conflicts)
    f.add("reference coloring conflict at vertex " + std::to_string(c.vertex) + " color " + std::to_string(c.color + 1));
  if (!rep.valid()) f.add("reference coloring not a proper total coloring");
  if (rep.distinct_colors != 14) f.add("reference coloring uses " + std::to_string(rep.distinct_colors) + " colors");

  const auto base = base_near_coloring(15);
  const auto stored_base = coloring_from_csv(read_file(oracle::fixture("k15_base_coloring.csv")), 15);
  if (!(base.coloring == stored_base)) f.add("base coloring differs from stored K_15 table");
  const auto classes = sp_classes(15);
  for (std::size_t k = 0; k + 1 < classes.size(); ++k)
    for (const auto& e : classes[k])
      if (base.coloring.color(e) != static_cast<Color>(k)) f.add("class " + std::to_string(k + 1) + " miscolored");
  const std::set<Edge> m(base.matching.begin(), base.matching.end());
  const std::set<Edge> s15(classes.back().begin(), classes.back().end());
  if (m != s15) f.add("uncolored set is not S_15");

  const auto state = make_exchange_state(std::make_shared<const Graph>(g), base.coloring);
  const auto path = kempe_path(base.coloring, 10, 12, 9);
  if (path.vertices != std::vector<Vertex>{10, 1, 4, 7, 13}) f.add("{13,10}-path from 10 differs");
  const auto next = exchange_edge(state, Edge(5, 6), Edge(5, 10));
  const auto stored_after = coloring_from_csv(read_file(oracle::fixture("k15_after_exchange.csv")), 15);
  if (!next) {
    f.add("exchange (5,6) -> (5,10) failed");
  } else {
    if (!(next->coloring == stored_after)) f.add("exchange result differs from stored table");
    if (!is_proper(next->coloring)) f.add("exchange result not proper");
  }
  return finish(f, "C_15 reference coloring valid with 14 colors, base and exchange tables reproduced");
}

Outcome kempe_properties() {
  Failures f;
  std::mt19937_64 rng(0xC0FFEE);
  std::size_t exchanges = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng() % 11;
    const auto g = oracle::random_graph(n, 0.25 + 0.7 * static_cast<double>(rng() % 100) / 100.0, rng);
    const std::size_t palette = std::max<std::size_t>(2, max_degree(g) + 1);
    const auto c = oracle::random_proper_coloring(g, palette, rng);
    const Vertex v = rng() % n;
    const Color a = static_cast<Color>(rng() % palette);
    const Color b = static_cast<Color>((a + 1 + rng() % (palette - 1)) % palette);
    const auto comp = kempe_component(c, v, a, b);
    const auto once = kempe_invert(c, comp);
    if (!is_proper(once)) f.add("inversion broke properness (trial " + std::to_string(trial) + ")");
    if (!(kempe_invert(once, comp) == c)) f.add("inversion not an involution (trial " + std::to_string(trial) + ")");

    // Exchange one colored edge for one uncolored pair.
    const auto colored = c.colored_edges();
    std::vector<Edge> open;
    for (const auto& e : complete_graph(n).edges())
      if (!c.is_colored(e)) open.push_back(e);
    if (colored.empty() || open.empty()) continue;
    const auto target = std::make_shared<const Graph>(g);
    const auto s = make_exchange_state(target, c);
    const auto next = exchange_edge(s, colored[rng() % colored.size()], open[rng() % open.size()]);
    if (!next) continue;
    ++exchanges;
    if (!is_proper(next->coloring)) f.add("exchange broke properness (trial " + std::to_string(trial) + ")");
    if (next->working_edge_count() != s.working_edge_count()) f.add("exchange changed edge count (trial " + std::to_string(trial) + ")");
  }
  return finish(f, "500 instances, " + std::to_string(exchanges) + " successful exchanges checked");
}

Outcome matching_case() {
  Failures f;
  std::mt19937_64 rng(0xBEEF);
  std::size_t runs = 0;
  for (std::size_t m = 1; m <= 8; ++m) {
    const std::size_t n = 2 * m + 1;
    for (int trial = 0; trial < 100; ++trial) {
      const auto target = complete_minus(n, oracle::random_near_perfect_matching(n, rng));
      const auto r = rhee_transform(target);
      ++runs;
      if (!r.coloring || !verify_proper(target, *r.coloring).valid() || r.coloring->distinct_colors() > 2 * m)
        f.add("n=" + std::to_string(n) + " trial " + std::to_string(trial));
    }
  }
  return finish(f, std::to_string(runs) + "/" + std::to_string(runs) + " succeeded", kMatchingLimit);
}

Outcome oracle_concordance() {
  Failures f;
  std::vector<std::string> specs;
  const auto groups = catalog_groups(12, specs);
  std::size_t checks = 0;
  auto check = [&](const Graph& g, std::size_t want, const std::string& name) {
    ++checks;
    const auto r = exact_chromatic_index(g);
    if (r.budget_exhausted || !r.chromatic_index) f.add(name + ": indeterminate");
    else if (*r.chromatic_index != want) f.add(name + ": " + std::to_string(*r.chromatic_index) + " vs " + std::to_string(want));
    else if (!r.witness || !verify_proper(g, *r.witness).valid()) f.add(name + ": witness rejected");
  };
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto pg = build_power_graph(groups[i]);
    const auto d = max_degree(pg);
    check(pg, predict_class(groups[i]).label == EdgeClass::Class1 ? d : d + 1, specs[i]);
  }
  for (std::size_t n = 2; n <= 10; ++n) check(complete_graph(n), n % 2 == 0 ? n - 1 : n, "K_" + std::to_string(n));
  std::mt19937_64 rng(0xB1);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t a = 1 + rng() % 5, b = 1 + rng() % 5;
    const auto g = oracle::random_bipartite(a, b, 0.3 + 0.6 * static_cast<double>(rng() % 100) / 100.0, rng);
    check(g, max_degree(g), "bipartite trial " + std::to_string(trial));
  }
  return finish(f, std::to_string(checks) + " graphs, 0 indeterminate");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"edge census of C_15", edge_census},
      {"overfull iff odd prime-power cyclic", overfull_sweep},
      {"join-set trichotomy", trichotomy},
      {"optimal verified colorings to order 33", witnesses},
      {"coloring tables and exchange step", fixtures},
      {"Kempe inversion and exchange properties", kempe_properties},
      {"K_n minus a near-perfect matching", matching_case},
      {"exact oracle concordance", oracle_concordance},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && o.limit > 0 && secs >= o.limit) {
      o.ok = false;
      o.detail += " but exceeded " + std::to_string(o.limit) + " s";
    }
    failed += !o.ok;
    std::printf("%s %zu %s: %s [%.3f s]\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
  }
  return failed == 0 ? 0 : 1;
}
