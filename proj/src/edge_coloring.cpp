#include "powerclass/edge_coloring.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace powerclass {

EdgeColoring::EdgeColoring(std::size_t n, std::size_t palette)
    : n_(n), palette_(palette), colors_(n * n, kNoColor) {}

void EdgeColoring::set_palette(std::size_t palette) {
  for (Color c : colors_)
    if (c != kNoColor && static_cast<std::size_t>(c) >= palette)
      throw std::invalid_argument("palette too small for existing assignment");
  palette_ = palette;
}

void EdgeColoring::assign(const Edge& e, Color c) {
  if (e.v >= n_) throw std::out_of_range("edge outside coloring vertex range");
  if (c < 0 || static_cast<std::size_t>(c) >= palette_)
    throw std::out_of_range("color " + std::to_string(c) + " outside palette of size " + std::to_string(palette_));
  if (colors_[e.u * n_ + e.v] == kNoColor) ++assigned_;
  colors_[e.u * n_ + e.v] = c;
  colors_[e.v * n_ + e.u] = c;
}

void EdgeColoring::clear(const Edge& e) {
  if (colors_[e.u * n_ + e.v] != kNoColor) --assigned_;
  colors_[e.u * n_ + e.v] = kNoColor;
  colors_[e.v * n_ + e.u] = kNoColor;
}

std::vector<std::pair<Edge, Color>> EdgeColoring::assignments() const {
  std::vector<std::pair<Edge, Color>> out;
  out.reserve(assigned_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (color(u, v) != kNoColor) out.emplace_back(Edge(u, v), color(u, v));
  return out;
}

std::vector<Edge> EdgeColoring::colored_edges() const {
  std::vector<Edge> out;
  for (const auto& [e, c] : assignments()) out.push_back(e);
  return out;
}

std::optional<Vertex> EdgeColoring::neighbor_via(Vertex v, Color c) const {
  const Color* row = colors_.data() + v * n_;
  for (Vertex w = 0; w < n_; ++w)
    if (row[w] == c) return w;
  return std::nullopt;
}

std::vector<Color> EdgeColoring::missing_colors(Vertex v) const {
  std::vector<bool> present(palette_, false);
  const Color* row = colors_.data() + v * n_;
  for (Vertex w = 0; w < n_; ++w)
    if (row[w] != kNoColor) present[static_cast<std::size_t>(row[w])] = true;
  std::vector<Color> out;
  for (std::size_t c = 0; c < palette_; ++c)
    if (!present[c]) out.push_back(static_cast<Color>(c));
  return out;
}

std::size_t EdgeColoring::distinct_colors() const {
  std::set<Color> seen;
  for (Color c : colors_)
    if (c != kNoColor) seen.insert(c);
  return seen.size();
}

VerificationReport verify_proper(const Graph& g, const EdgeColoring& c) {
  if (g.n() != c.n())
    throw std::invalid_argument("coloring has " + std::to_string(c.n()) + " vertices, graph has " + std::to_string(g.n()));
  VerificationReport r;
  r.edge_count = g.edge_count();
  for (const auto& [e, col] : c.assignments()) {
    if (!g.has_edge(e)) r.foreign.push_back(e);
    if (static_cast<std::size_t>(col) >= c.palette()) r.out_of_palette.push_back(e);
  }
  for (const auto& e : g.edges())
    if (!c.is_colored(e)) r.uncolored.push_back(e);
  for (Vertex v = 0; v < c.n(); ++v) {
    std::vector<Vertex> seen;
    for (Vertex w = 0; w < c.n(); ++w) {
      if (c.color(v, w) == kNoColor) continue;
      for (Vertex x : seen)
        if (c.color(v, x) == c.color(v, w)) r.conflicts.push_back({v, c.color(v, w), Edge(v, x), Edge(v, w)});
      seen.push_back(w);
    }
  }
  r.distinct_colors = c.distinct_colors();
  return r;
}

bool is_proper(const EdgeColoring& c) {
  for (Vertex v = 0; v < c.n(); ++v) {
    std::vector<bool> present(c.palette(), false);
    for (Vertex w = 0; w < c.n(); ++w) {
      const Color col = c.color(v, w);
      if (col == kNoColor) continue;
      if (present[static_cast<std::size_t>(col)]) return false;
      present[static_cast<std::size_t>(col)] = true;
    }
  }
  return true;
}

EdgeColoring restrict_to(const EdgeColoring& c, const Graph& g) {
  EdgeColoring out(c.n(), c.palette());
  for (const auto& e : g.edges())
    if (c.is_colored(e)) out.assign(e, c.color(e));
  return out;
}

}  // namespace powerclass
