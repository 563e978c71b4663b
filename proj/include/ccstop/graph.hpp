#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ccstop {

using Vertex = std::int32_t;

struct Edge {
    Vertex u;
    Vertex v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
// Immutable once built.
class Graph {
public:
    Graph() = default;

    // Validates: ids in range, no self-loops, no duplicate edges (in either orientation).
    static Graph from_edges(Vertex n, std::span<const Edge> edges);

    Vertex n() const noexcept { return static_cast<Vertex>(adjacency_.size()); }
    std::int64_t edge_count() const noexcept { return edge_count_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    std::size_t degree(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }
    bool adjacent(Vertex u, Vertex v) const;

    // Each edge once, u < v, lexicographic.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::int64_t edge_count_ = 0;
};

// Connected components of the induced subgraph on `members` (members[v] != 0).
std::int64_t count_components(const Graph& g, std::span<const char> members);

// Number of connected components of g itself.
std::int64_t count_components(const Graph& g);

bool is_forest(const Graph& g);

}  // namespace ccstop
