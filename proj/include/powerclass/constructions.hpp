#pragma once

#include <cstddef>
#include <vector>

#include "powerclass/edge_coloring.hpp"

namespace powerclass {

/// Display labeling: vertex i shows as i for i > 0, the identity (0) as n.
inline std::size_t display_label(Vertex v, std::size_t n) { return v == 0 ? n : v; }
inline Vertex from_display_label(std::size_t label, std::size_t n) { return label % n; }

/// Circle-method 1-factorization of K_n, n even: vertex n-1 fixed, the rest
/// rotate; round r becomes color r. Throws std::invalid_argument for odd n.
EdgeColoring round_robin_even(std::size_t n);

/// Near-perfect matchings S_1..S_n of K_n (n odd >= 3), S_p = {(p-q, p+q) mod n :
/// q = 1..(n-1)/2} over labels 1..n. Entry p-1 holds S_p in internal vertex
/// indices (label L -> L mod n); S_p misses exactly the vertex labelled p.
std::vector<std::vector<Edge>> sp_classes(std::size_t n);

/// All of K_n colored with n colors, class S_p getting color p-1.
EdgeColoring sp_coloring(std::size_t n);

struct NearColoring {
  EdgeColoring coloring;      ///< S_1..S_{n-1} with colors 0..n-2
  std::vector<Edge> matching; ///< S_n, left uncolored
};

/// K_n colored with n-1 colors except for the near-perfect matching S_n.
NearColoring base_near_coloring(std::size_t n);

}  // namespace powerclass
