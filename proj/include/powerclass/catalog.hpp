#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace powerclass {

struct CatalogEntry {
  std::string spec;
  std::size_t order = 0;

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

using Catalog = std::vector<CatalogEntry>;

/// Cyclic groups, non-cyclic abelian groups in invariant-factor form
/// (d1 | d2 | ... | dk), dihedral and quaternion families up to max_order,
/// sorted by (order, spec).
Catalog generate_catalog(std::size_t max_order);

/// Invariant-factor lists d1 | d2 | ... | dk (d1 >= 2) with product n. For
/// n = 1 the only list is empty.
std::vector<std::vector<std::size_t>> invariant_factor_lists(std::size_t n);

void sort_catalog(Catalog& c);

}  // namespace powerclass
