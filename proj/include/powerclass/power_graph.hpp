#pragma once

#include "powerclass/graph.hpp"
#include "powerclass/groups.hpp"

namespace powerclass {

/// Undirected power graph: a ~ b iff a != b and one is a power of the other.
/// Rows are filled in parallel; vertex labels are the group's element names.
Graph build_power_graph(const Group& g);

/// Single-threaded reference for build_power_graph.
Graph build_power_graph_serial(const Group& g);

/// Size of the set of vertices joined to all others, as predicted from the
/// group structure alone: |G| for cyclic prime-power (and trivial) groups,
/// 1 + phi(|G|) for other cyclic groups, 2 for generalized quaternion groups, 1 otherwise.
std::size_t expected_join_set_size(const Group& g);

}  // namespace powerclass
