#include "ccstop/graph.hpp"

#include <algorithm>
#include <string>

#include "ccstop/errors.hpp"

namespace ccstop {

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges) {
    if (n < 0) throw ValidationError("negative vertex count");
    Graph g;
    g.adjacency_.resize(static_cast<std::size_t>(n));
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
            throw ValidationError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} references a vertex outside [0," + std::to_string(n) + ")");
        }
        if (e.u == e.v) throw ValidationError("self-loop at vertex " + std::to_string(e.u));
        g.adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        g.adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& list = g.adjacency_[static_cast<std::size_t>(v)];
        std::sort(list.begin(), list.end());
        if (auto dup = std::adjacent_find(list.begin(), list.end()); dup != list.end()) {
            throw ValidationError("duplicate edge {" + std::to_string(v) + "," + std::to_string(*dup) + "}");
        }
    }
    g.edge_count_ = static_cast<std::int64_t>(edges.size());
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& list = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < n(); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) out.push_back({u, v});
        }
    }
    return out;
}

std::int64_t count_components(const Graph& g, std::span<const char> members) {
    const auto n = static_cast<std::size_t>(g.n());
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack;
    std::int64_t components = 0;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (!members[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)]) continue;
        ++components;
        seen[static_cast<std::size_t>(s)] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u)) {
                auto wi = static_cast<std::size_t>(w);
                if (members[wi] && !seen[wi]) {
                    seen[wi] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return components;
}

std::int64_t count_components(const Graph& g) {
    std::vector<char> all(static_cast<std::size_t>(g.n()), 1);
    return count_components(g, all);
}

bool is_forest(const Graph& g) { return g.edge_count() == g.n() - count_components(g); }

}  // namespace ccstop
