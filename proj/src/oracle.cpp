#include "powerclass/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "powerclass/misra_gries.hpp"

namespace powerclass {

namespace {

class EdgeSearch {
 public:
  EdgeSearch(const Graph& g, std::size_t k, std::uint64_t budget)
      : g_(g), k_(k), budget_(budget), full_(k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1),
        used_(g.n(), 0), open_(g.n(), 0) {}

  ColorabilityResult run() {
    edges_ = g_.edges();
    colors_.assign(edges_.size(), kNoColor);
    incident_.assign(g_.n(), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      incident_[edges_[i].u].push_back(i);
      incident_[edges_[i].v].push_back(i);
      ++open_[edges_[i].u];
      ++open_[edges_[i].v];
    }

    Vertex anchor = 0;
    for (Vertex v = 0; v < g_.n(); ++v)
      if (g_.degree(v) > g_.degree(anchor)) anchor = v;
    Color next = 0;
    for (std::size_t idx : incident_[anchor]) place(idx, next++);
    highest_ = next - 1;

    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (colors_[i] == kNoColor) order_.push_back(i);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      const auto sa = g_.degree(edges_[a].u) + g_.degree(edges_[a].v);
      const auto sb = g_.degree(edges_[b].u) + g_.degree(edges_[b].v);
      return sa > sb;
    });

    ColorabilityResult r;
    const bool found = dfs(0);
    r.nodes = nodes_;
    if (found) {
      r.verdict = Verdict::Yes;
      EdgeColoring c(g_.n(), k_);
      for (std::size_t i = 0; i < edges_.size(); ++i) c.assign(edges_[i], colors_[i]);
      r.witness = std::move(c);
    } else {
      r.verdict = exhausted_ ? Verdict::Indeterminate : Verdict::No;
    }
    return r;
  }

 private:
  void place(std::size_t idx, Color c) {
    const auto& e = edges_[idx];
    colors_[idx] = c;
    used_[e.u] |= std::uint64_t{1} << c;
    used_[e.v] |= std::uint64_t{1} << c;
    --open_[e.u];
    --open_[e.v];
  }

  void unplace(std::size_t idx) {
    const auto& e = edges_[idx];
    const auto bit = std::uint64_t{1} << colors_[idx];
    used_[e.u] &= ~bit;
    used_[e.v] &= ~bit;
    ++open_[e.u];
    ++open_[e.v];
    colors_[idx] = kNoColor;
  }

  bool vertex_feasible(Vertex x) const {
    const auto free = k_ - static_cast<std::size_t>(std::popcount(used_[x]));
    if (open_[x] > free) return false;
    for (std::size_t idx : incident_[x]) {
      if (colors_[idx] != kNoColor) continue;
      const auto& e = edges_[idx];
      if (((used_[e.u] | used_[e.v]) & full_) == full_) return false;
    }
    return true;
  }

  bool dfs(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t idx = order_[depth];
    const auto& e = edges_[idx];
    const std::uint64_t blocked = used_[e.u] | used_[e.v];
    const Color limit = std::min<Color>(static_cast<Color>(k_) - 1, highest_ + 1);
    for (Color c = 0; c <= limit; ++c) {
      if (blocked & (std::uint64_t{1} << c)) continue;
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      const Color saved_high = highest_;
      highest_ = std::max(highest_, c);
      place(idx, c);
      if (vertex_feasible(e.u) && vertex_feasible(e.v) && dfs(depth + 1)) return true;
      unplace(idx);
      highest_ = saved_high;
      if (exhausted_) return false;
    }
    return false;
  }

  const Graph& g_;
  std::size_t k_;
  std::uint64_t budget_;
  std::uint64_t full_;
  std::vector<Edge> edges_;
  std::vector<Color> colors_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<std::uint64_t> used_;
  std::vector<std::size_t> open_;
  std::vector<std::size_t> order_;
  Color highest_ = -1;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

ColorabilityResult is_k_edge_colorable(const Graph& g, std::size_t k, std::uint64_t budget) {
  ColorabilityResult r;
  if (g.edge_count() == 0) {
    r.verdict = Verdict::Yes;
    r.witness = EdgeColoring(g.n(), k);
    return r;
  }
  if (max_degree(g) > k || g.edge_count() > k * (g.n() / 2)) {
    r.verdict = Verdict::No;
    return r;
  }
  if (k > 64) throw std::invalid_argument("is_k_edge_colorable supports at most 64 colors");
  return EdgeSearch(g, k, budget).run();
}

OracleResult exact_chromatic_index(const Graph& g, std::uint64_t budget) {
  OracleResult r;
  const std::size_t delta = max_degree(g);
  auto test = is_k_edge_colorable(g, delta, budget);
  r.nodes_explored = test.nodes;
  switch (test.verdict) {
    case Verdict::Yes:
      r.chromatic_index = delta;
      r.witness = std::move(test.witness);
      break;
    case Verdict::No:
      r.chromatic_index = delta + 1;
      r.witness = misra_gries(g);
      break;
    case Verdict::Indeterminate:
      r.budget_exhausted = true;
      r.witness = misra_gries(g);
      break;
  }
  return r;
}

}  // namespace powerclass
