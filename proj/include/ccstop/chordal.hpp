#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ccstop/construction.hpp"
#include "ccstop/graph.hpp"

namespace ccstop {

// A vertex ordering in which the earlier neighbors of every vertex form a clique
// (the reverse of a perfect elimination ordering). Under such an ordering each
// connected induced subgraph has exactly one vertex with no earlier neighbor in it,
// so components can be counted as witnessing vertices.
struct CliqueOrdering {
    std::vector<Vertex> order;
    std::vector<std::int32_t> back_size;  // indexed by vertex id
};

// Maximum cardinality search followed by a clique check; nullopt when g is not chordal.
std::optional<CliqueOrdering> clique_ordering(const Graph& g);

// histogram[s] = number of vertices whose earlier-neighbor set has size s.
std::vector<std::int64_t> back_size_histogram(const CliqueOrdering& ordering);

}  // namespace ccstop
