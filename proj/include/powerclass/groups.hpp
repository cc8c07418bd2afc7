#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "powerclass/bitset.hpp"

namespace powerclass {

using Element = std::size_t;

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite group stored as its Cayley table. Element 0 is the identity.
///
/// Element orders and the membership bitset of every cyclic subgroup <g> are
/// computed once at construction; a Group is immutable afterwards and may be
/// shared read-only between threads.
class Group {
 public:
  /// Validates the table (Latin square, identity at 0, associativity) and
  /// throws GroupError on failure. `names` may be empty.
  static Group from_table(std::vector<std::vector<Element>> table, std::string label,
                          std::vector<std::string> names = {});

  std::size_t order() const { return table_.size(); }
  const std::string& label() const { return label_; }
  const std::vector<std::vector<Element>>& table() const { return table_; }

  Element multiply(Element g, Element h) const { return table_[g][h]; }
  Element inverse(Element g) const;
  Element power(Element g, std::uint64_t k) const;

  /// Smallest k >= 1 with g^k = e. Throws std::out_of_range on a bad index.
  std::size_t element_order(Element g) const;
  const std::vector<std::size_t>& element_orders() const { return orders_; }

  /// True iff a lies in the cyclic subgroup generated by b.
  bool is_power_of(Element a, Element b) const;
  const DynBitset& cyclic_subgroup(Element g) const { return cyclic_[g]; }

  const std::string& element_name(Element g) const { return names_[g]; }
  const std::vector<std::string>& element_names() const { return names_; }

 private:
  Group() = default;
  void check_index(Element g) const;

  std::vector<std::vector<Element>> table_;
  std::vector<std::size_t> orders_;
  std::vector<DynBitset> cyclic_;
  std::vector<std::string> names_;
  std::string label_;
};

Group make_cyclic(std::size_t n);
/// Dihedral group of order 2n (n >= 3).
Group make_dihedral(std::size_t n);
/// Dicyclic group of order 4m (m >= 2); generalized quaternion when m is a power of two.
Group make_quaternion(std::size_t m);
Group make_direct_product(const std::vector<Group>& factors);

/// Reads "n" followed by n rows of n indices. Row g, column h holds g*h.
Group load_table_group(const std::filesystem::path& path);
void write_table_group(const Group& g, const std::filesystem::path& path);

/// Parses cyclic:n | dihedral:n | quaternion:m | product:<spec>,<spec>[,...] |
/// table:<file>. Product factors that are themselves products go in parentheses.
Group construct_group(std::string_view spec);

bool is_cyclic(const Group& g);
/// A non-cyclic 2-group with a unique involution.
bool is_generalized_quaternion(const Group& g);

/// Serial and OpenMP computations of every cyclic-subgroup bitset; used by the
/// constructor (parallel) and kept for testing/benchmarking against each other.
std::vector<DynBitset> cyclic_subgroups_serial(const std::vector<std::vector<Element>>& table);
std::vector<DynBitset> cyclic_subgroups_parallel(const std::vector<std::vector<Element>>& table);

}  // namespace powerclass
