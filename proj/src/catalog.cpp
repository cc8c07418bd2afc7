#include "powerclass/catalog.hpp"

#include <algorithm>
#include <functional>

namespace powerclass {

std::vector<std::vector<std::size_t>> invariant_factor_lists(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t remaining, std::size_t last) {
    if (remaining == 1) {
      if (!current.empty()) out.push_back(current);
      return;
    }
    for (std::size_t d = last; d <= remaining; d += last) {
      if (remaining % d != 0) continue;
      // Later factors are multiples of d, so what remains must be divisible by d.
      if ((remaining / d) % d != 0 && remaining != d) continue;
      current.push_back(d);
      extend(remaining / d, d);
      current.pop_back();
    }
  };
  if (n == 1) return {{}};
  for (std::size_t d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    if ((n / d) % d != 0 && n != d) continue;
    current = {d};
    extend(n / d, d);
  }
  return out;
}

void sort_catalog(Catalog& c) {
  std::sort(c.begin(), c.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return a.order != b.order ? a.order < b.order : a.spec < b.spec;
  });
}

Catalog generate_catalog(std::size_t max_order) {
  Catalog c;
  for (std::size_t n = 1; n <= max_order; ++n) {
    c.push_back({"cyclic:" + std::to_string(n), n});
    for (const auto& factors : invariant_factor_lists(n)) {
      if (factors.size() < 2) continue;
      std::string spec = "product:";
      for (std::size_t i = 0; i < factors.size(); ++i) spec += (i ? ",cyclic:" : "cyclic:") + std::to_string(factors[i]);
      c.push_back({spec, n});
    }
    if (n >= 6 && n % 2 == 0) c.push_back({"dihedral:" + std::to_string(n / 2), n});
    if (n >= 8 && n % 4 == 0) c.push_back({"quaternion:" + std::to_string(n / 4), n});
  }
  sort_catalog(c);
  return c;
}

}  // namespace powerclass
