#pragma once

#include <cstddef>
#include <vector>

namespace dupcodes {

/// Undirected graph as sorted adjacency lists over vertices 0..n-1.
using AdjacencyList = std::vector<std::vector<std::size_t>>;

/// Exact maximum independent set, returned as ascending vertex indices.
/// Works per connected component: a greedy set seeds the incumbent, then a
/// colour-bounded branch and bound (maximum clique on the complement)
/// proves optimality. Ties resolve towards lower vertex indices.
std::vector<std::size_t> maximum_independent_set(const AdjacencyList& graph);

}  // namespace dupcodes
