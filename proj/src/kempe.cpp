#include "powerclass/kempe.hpp"

#include <algorithm>

namespace powerclass {

namespace {

Color other(Color x, Color a, Color b) { return x == a ? b : a; }

std::vector<Vertex> walk(const EdgeColoring& c, Vertex v, Color start, Color a, Color b, bool& closed) {
  std::vector<Vertex> seq{v};
  closed = false;
  Vertex cur = v;
  Color col = start;
  while (true) {
    const auto next = c.neighbor_via(cur, col);
    if (!next) break;
    if (*next == v) {
      closed = true;
      break;
    }
    seq.push_back(*next);
    cur = *next;
    col = other(col, a, b);
  }
  return seq;
}

void check_colors(const EdgeColoring& c, Color a, Color b) {
  if (a == b) throw KempeError("kempe: the two colors must differ");
  const auto pal = static_cast<Color>(c.palette());
  if (a < 0 || b < 0 || a >= pal || b >= pal) throw KempeError("kempe: color outside palette");
}

}  // namespace

KempePath kempe_path(const EdgeColoring& c, Vertex v, Color a, Color b) {
  check_colors(c, a, b);
  KempePath p{{v}, a, b, false};
  Color start = kNoColor;
  if (c.vertex_has(v, a)) {
    start = a;
  } else if (c.vertex_has(v, b)) {
    start = b;
  } else {
    return p;
  }
  p.vertices = walk(c, v, start, a, b, p.cycle);
  return p;
}

KempePath kempe_component(const EdgeColoring& c, Vertex v, Color a, Color b) {
  KempePath forward = kempe_path(c, v, a, b);
  if (forward.cycle || forward.vertices.size() < 2) return forward;
  const Color first = c.color(v, forward.vertices[1]);
  const Color back_color = other(first, a, b);
  if (!c.vertex_has(v, back_color)) return forward;
  bool closed = false;
  auto backward = walk(c, v, back_color, a, b, closed);
  std::reverse(backward.begin(), backward.end());
  backward.insert(backward.end(), forward.vertices.begin() + 1, forward.vertices.end());
  forward.vertices = std::move(backward);
  return forward;
}

void kempe_invert_in_place(EdgeColoring& c, const KempePath& p) {
  check_colors(c, p.a, p.b);
  const auto& vs = p.vertices;
  if (vs.empty()) throw KempeError("kempe: empty path");
  if (vs.size() == 1) {
    if (p.cycle) throw KempeError("kempe: a single vertex cannot close a cycle");
    return;
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) edges.emplace_back(vs[i], vs[i + 1]);
  if (p.cycle) {
    if (edges.size() % 2 == 0) throw KempeError("kempe: alternating cycle must have even length");
    edges.emplace_back(vs.back(), vs.front());
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Color col = c.color(edges[i]);
    if (col != p.a && col != p.b) throw KempeError("kempe: edge off the color pair");
    if (i > 0 && col == c.color(edges[i - 1])) throw KempeError("kempe: colors do not alternate");
  }
  if (p.cycle) {
    if (c.color(edges.front()) == c.color(edges.back())) throw KempeError("kempe: cycle does not alternate");
  } else {
    const Color head = other(c.color(edges.front()), p.a, p.b);
    const Color tail = other(c.color(edges.back()), p.a, p.b);
    if (c.vertex_has(vs.front(), head) || c.vertex_has(vs.back(), tail))
      throw KempeError("kempe: path is not maximal");
  }
  std::vector<Color> flipped;
  flipped.reserve(edges.size());
  for (const auto& e : edges) flipped.push_back(other(c.color(e), p.a, p.b));
  for (std::size_t i = 0; i < edges.size(); ++i) c.assign(edges[i], flipped[i]);
}

EdgeColoring kempe_invert(const EdgeColoring& c, const KempePath& p) {
  EdgeColoring out = c;
  kempe_invert_in_place(out, p);
  return out;
}

}  // namespace powerclass
