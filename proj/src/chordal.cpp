#include "ccstop/chordal.hpp"

#include <algorithm>
#include <queue>
#include <utility>

namespace ccstop {

std::optional<CliqueOrdering> clique_ordering(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.n());
    std::vector<std::int32_t> weight(n, 0);
    std::vector<std::size_t> position(n, n);
    // Max-heap on (weight, -id): deterministic tie-break towards smaller ids.
    std::priority_queue<std::pair<std::int32_t, Vertex>> heap;
    for (Vertex v = 0; v < g.n(); ++v) heap.push({0, -v});

    CliqueOrdering out;
    out.order.reserve(n);
    out.back_size.assign(n, 0);
    while (!heap.empty()) {
        auto [w, neg] = heap.top();
        heap.pop();
        const Vertex v = -neg;
        const auto vi = static_cast<std::size_t>(v);
        if (position[vi] != n || w != weight[vi]) continue;
        position[vi] = out.order.size();
        out.order.push_back(v);
        out.back_size[vi] = w;
        for (Vertex u : g.neighbors(v)) {
            const auto ui = static_cast<std::size_t>(u);
            if (position[ui] == n) heap.push({++weight[ui], -u});
        }
    }

    // Earlier neighbors must form a clique: all of them adjacent to the latest one.
    for (Vertex v = 0; v < g.n(); ++v) {
        const auto pv = position[static_cast<std::size_t>(v)];
        Vertex latest = -1;
        for (Vertex u : g.neighbors(v)) {
            const auto pu = position[static_cast<std::size_t>(u)];
            if (pu < pv && (latest < 0 || pu > position[static_cast<std::size_t>(latest)])) latest = u;
        }
        if (latest < 0) continue;
        for (Vertex u : g.neighbors(v)) {
            if (u != latest && position[static_cast<std::size_t>(u)] < pv && !g.adjacent(u, latest)) return std::nullopt;
        }
    }
    return out;
}

std::vector<std::int64_t> back_size_histogram(const CliqueOrdering& ordering) {
    std::vector<std::int64_t> histogram;
    for (auto s : ordering.back_size) {
        if (static_cast<std::size_t>(s) >= histogram.size()) histogram.resize(static_cast<std::size_t>(s) + 1, 0);
        ++histogram[static_cast<std::size_t>(s)];
    }
    return histogram;
}

}  // namespace ccstop
