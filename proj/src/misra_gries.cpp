#include "powerclass/misra_gries.hpp"

#include <algorithm>
#include <stdexcept>

#include "powerclass/kempe.hpp"

namespace powerclass {

namespace {

bool is_free(const EdgeColoring& c, Vertex v, Color col) { return !c.vertex_has(v, col); }

Color first_free(const EdgeColoring& c, Vertex v) { return c.missing_colors(v).front(); }

std::vector<Vertex> maximal_fan(const Graph& g, const EdgeColoring& c, Vertex x, Vertex f) {
  std::vector<Vertex> fan{f};
  std::vector<bool> in_fan(g.n(), false);
  in_fan[f] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Vertex y : g.neighbors(x)) {
      if (in_fan[y]) continue;
      const Color col = c.color(x, y);
      if (col != kNoColor && is_free(c, fan.back(), col)) {
        fan.push_back(y);
        in_fan[y] = true;
        grew = true;
        break;
      }
    }
  }
  return fan;
}

}  // namespace

EdgeColoring misra_gries(const Graph& g) {
  EdgeColoring c(g.n(), max_degree(g) + 1);
  for (const auto& e : g.edges()) {
    const Vertex x = e.u;
    const auto fan = maximal_fan(g, c, x, e.v);
    const Color cx = first_free(c, x);
    const Color d = first_free(c, fan.back());
    if (cx != d) {
      // x misses cx, so x is an endpoint of its {cx,d} component.
      const auto path = kempe_path(c, x, d, cx);
      kempe_invert_in_place(c, path);
    }
    std::size_t w = 0;
    for (; w < fan.size(); ++w) {
      if (w > 0 && !is_free(c, fan[w - 1], c.color(x, fan[w]))) {
        w = fan.size();
        break;
      }
      if (is_free(c, fan[w], d)) break;
    }
    if (w >= fan.size()) throw std::logic_error("misra_gries: no rotatable fan prefix");
    for (std::size_t i = 0; i < w; ++i) c.assign(Edge(x, fan[i]), c.color(x, fan[i + 1]));
    c.clear(Edge(x, fan[w]));
    c.assign(Edge(x, fan[w]), d);
  }
  return c;
}

}  // namespace powerclass
