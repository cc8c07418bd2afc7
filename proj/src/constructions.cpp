#include "powerclass/constructions.hpp"

#include <stdexcept>
#include <string>

namespace powerclass {

EdgeColoring round_robin_even(std::size_t n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("round_robin_even: n must be even and >= 2, got " + std::to_string(n));
  const std::size_t m = n - 1;
  EdgeColoring c(n, m);
  for (std::size_t r = 0; r < m; ++r) {
    const auto color = static_cast<Color>(r);
    c.assign(Edge(r, n - 1), color);
    for (std::size_t k = 1; k < n / 2; ++k) c.assign(Edge((r + k) % m, (r + m - k) % m), color);
  }
  return c;
}

std::vector<std::vector<Edge>> sp_classes(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("sp_classes: n must be odd and >= 3, got " + std::to_string(n));
  std::vector<std::vector<Edge>> classes(n);
  for (std::size_t p = 1; p <= n; ++p)
    for (std::size_t q = 1; q <= (n - 1) / 2; ++q)
      classes[p - 1].emplace_back((p + n - q) % n, (p + q) % n);
  return classes;
}

EdgeColoring sp_coloring(std::size_t n) {
  const auto classes = sp_classes(n);
  EdgeColoring c(n, n);
  for (std::size_t p = 0; p < n; ++p)
    for (const auto& e : classes[p]) c.assign(e, static_cast<Color>(p));
  return c;
}

NearColoring base_near_coloring(std::size_t n) {
  auto classes = sp_classes(n);
  NearColoring out{EdgeColoring(n, n - 1), std::move(classes.back())};
  for (std::size_t p = 0; p + 1 < n; ++p)
    for (const auto& e : classes[p]) out.coloring.assign(e, static_cast<Color>(p));
  return out;
}

}  // namespace powerclass
