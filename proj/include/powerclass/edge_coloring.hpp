#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "powerclass/graph.hpp"

namespace powerclass {

using Color = std::int32_t;
inline constexpr Color kNoColor = -1;

/// Partial assignment of colors 0..palette-1 to edges of K_n. Properness is
/// not enforced on assignment so that externally supplied colorings with
/// conflicts can be loaded and reported by verify_proper.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  EdgeColoring(std::size_t n, std::size_t palette);

  std::size_t n() const { return n_; }
  std::size_t palette() const { return palette_; }
  void set_palette(std::size_t palette);

  Color color(Vertex u, Vertex v) const { return colors_[u * n_ + v]; }
  Color color(const Edge& e) const { return color(e.u, e.v); }
  bool is_colored(const Edge& e) const { return color(e) != kNoColor; }

  /// Throws std::out_of_range if c >= palette.
  void assign(const Edge& e, Color c);
  void clear(const Edge& e);

  std::size_t assigned_count() const { return assigned_; }

  /// Colored edges in lexicographic order.
  std::vector<std::pair<Edge, Color>> assignments() const;
  std::vector<Edge> colored_edges() const;

  /// First neighbor w (ascending) with color(v, w) == c.
  std::optional<Vertex> neighbor_via(Vertex v, Color c) const;
  bool vertex_has(Vertex v, Color c) const { return neighbor_via(v, c).has_value(); }
  /// Palette colors not present at v, ascending.
  std::vector<Color> missing_colors(Vertex v) const;

  std::size_t distinct_colors() const;

  friend bool operator==(const EdgeColoring& a, const EdgeColoring& b) {
    return a.n_ == b.n_ && a.palette_ == b.palette_ && a.colors_ == b.colors_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t palette_ = 0;
  std::size_t assigned_ = 0;
  std::vector<Color> colors_;
};

struct ColorConflict {
  Vertex vertex;
  Color color;
  Edge first;
  Edge second;
};

struct VerificationReport {
  std::vector<ColorConflict> conflicts;
  std::vector<Edge> uncolored;     ///< graph edges without a color
  std::vector<Edge> foreign;       ///< colored edges absent from the graph (structural)
  std::vector<Edge> out_of_palette;
  std::size_t edge_count = 0;
  std::size_t distinct_colors = 0;

  bool structurally_sound() const { return foreign.empty() && out_of_palette.empty(); }
  bool valid() const { return conflicts.empty() && uncolored.empty() && structurally_sound(); }
};

/// Throws std::invalid_argument if the vertex counts differ.
VerificationReport verify_proper(const Graph& g, const EdgeColoring& c);

/// Properness alone, ignoring completeness against any graph.
bool is_proper(const EdgeColoring& c);

/// Restriction of c to the edges of g (palette unchanged).
EdgeColoring restrict_to(const EdgeColoring& c, const Graph& g);

}  // namespace powerclass
