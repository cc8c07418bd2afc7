#pragma once

#include <stdexcept>
#include <vector>

#include "powerclass/edge_coloring.hpp"

namespace powerclass {

class KempeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two-color alternating walk v_0 .. v_k. When `cycle` is set the walk closes
/// with an edge v_k -> v_0 that is not repeated in `vertices`.
struct KempePath {
  std::vector<Vertex> vertices;
  Color a = kNoColor;
  Color b = kNoColor;
  bool cycle = false;

  std::size_t edge_count() const {
    if (vertices.size() < 2) return 0;
    return vertices.size() - 1 + (cycle ? 1 : 0);
  }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
};

/// Walks the {a,b}-alternating subgraph from v. Leaves along color a when v
/// has an a-edge, otherwise along b. The walk is maximal whenever v misses a
/// or b; if v carries both colors the result is a cycle or only the forward
/// half of a longer path.
KempePath kempe_path(const EdgeColoring& c, Vertex v, Color a, Color b);

/// Whole {a,b}-component through v: a maximal path (in either orientation) or a cycle.
KempePath kempe_component(const EdgeColoring& c, Vertex v, Color a, Color b);

/// Swaps a <-> b on every edge of a maximal alternating path or a full cycle.
/// Throws KempeError if the walk is not alternating or a path is not maximal.
EdgeColoring kempe_invert(const EdgeColoring& c, const KempePath& p);

/// In-place form of kempe_invert with the same validation.
void kempe_invert_in_place(EdgeColoring& c, const KempePath& p);

}  // namespace powerclass
