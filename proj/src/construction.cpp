#include "ccstop/construction.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ccstop/errors.hpp"

namespace ccstop {

namespace {

constexpr std::size_t kUnplaced = std::numeric_limits<std::size_t>::max();

[[noreturn]] void reject(std::size_t index, Vertex v, const std::string& why) {
    throw ValidationError("construction entry " + std::to_string(index) + " (vertex " + std::to_string(v) +
                          "): " + why);
}

}  // namespace

ConstructionSequence::ConstructionSequence(int k, std::vector<ConstructionEntry> order)
    : k_(k), order_(std::move(order)) {
    if (k_ < 1) throw ValidationError("construction width k must be >= 1, got " + std::to_string(k_));
    const std::size_t n = order_.size();
    position_.assign(n, kUnplaced);
    for (std::size_t i = 0; i < n; ++i) {
        auto& e = order_[i];
        if (e.v < 0 || static_cast<std::size_t>(e.v) >= n) {
            reject(i, e.v, "vertex id outside [0," + std::to_string(n) + ")");
        }
        if (position_[static_cast<std::size_t>(e.v)] != kUnplaced) reject(i, e.v, "vertex appears twice");
        std::sort(e.back.begin(), e.back.end());
        if (std::adjacent_find(e.back.begin(), e.back.end()) != e.back.end()) {
            reject(i, e.v, "back-neighborhood repeats a vertex");
        }
        for (Vertex w : e.back) {
            if (w < 0 || static_cast<std::size_t>(w) >= n || position_[static_cast<std::size_t>(w)] == kUnplaced) {
                reject(i, e.v, "back-neighbor " + std::to_string(w) + " is not an earlier vertex");
            }
        }
        if (i < static_cast<std::size_t>(k_)) {
            if (e.back.size() != i) {
                reject(i, e.v, "initial-clique entry must list all " + std::to_string(i) + " earlier vertices");
            }
        } else if (e.back.size() != static_cast<std::size_t>(k_)) {
            reject(i, e.v, "expected " + std::to_string(k_) + " back-neighbors, got " + std::to_string(e.back.size()));
        }
        position_[static_cast<std::size_t>(e.v)] = i;
    }
}

std::span<const Vertex> ConstructionSequence::back_neighbors(Vertex v) const {
    return order_[position_[static_cast<std::size_t>(v)]].back;
}

std::vector<Vertex> ConstructionSequence::initial_clique() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < order_.size() && i < static_cast<std::size_t>(k_); ++i) out.push_back(order_[i].v);
    return out;
}

Graph graph_from_construction(const ConstructionSequence& seq) {
    std::vector<Edge> edges;
    for (const auto& e : seq.entries()) {
        for (Vertex w : e.back) edges.push_back({e.v, w});
    }
    return Graph::from_edges(seq.size(), edges);
}

bool is_ktree(const ConstructionSequence& seq, const Graph& g) {
    for (const auto& e : seq.entries()) {
        for (std::size_t a = 0; a < e.back.size(); ++a) {
            for (std::size_t b = a + 1; b < e.back.size(); ++b) {
                if (!g.adjacent(e.back[a], e.back[b])) return false;
            }
        }
    }
    return true;
}

KSystem::KSystem(int k, Vertex ground_size, std::vector<KSystemPair> pairs)
    : k_(k), ground_size_(ground_size), pairs_(std::move(pairs)) {
    std::vector<char> used(static_cast<std::size_t>(ground_size_), 0);
    for (auto& p : pairs_) {
        if (p.v < 0 || p.v >= ground_size_) throw ValidationError("k-system pair vertex out of range");
        if (used[static_cast<std::size_t>(p.v)]) {
            throw ValidationError("vertex " + std::to_string(p.v) + " occurs in two k-system pairs");
        }
        used[static_cast<std::size_t>(p.v)] = 1;
        std::sort(p.m.begin(), p.m.end());
        if (p.m.size() != static_cast<std::size_t>(k_) || std::adjacent_find(p.m.begin(), p.m.end()) != p.m.end()) {
            throw ValidationError("k-system pair for vertex " + std::to_string(p.v) + " needs " +
                                  std::to_string(k_) + " distinct vertices");
        }
        for (Vertex w : p.m) {
            if (w == p.v) throw ValidationError("k-system pair for vertex " + std::to_string(p.v) + " contains v");
            if (w < 0 || w >= ground_size_) throw ValidationError("k-system set element out of range");
        }
    }
}

std::size_t KSystem::degree(Vertex v) const {
    std::size_t d = 0;
    for (const auto& p : pairs_) d += std::binary_search(p.m.begin(), p.m.end(), v) ? 1 : 0;
    return d;
}

std::int64_t KSystem::active_pairs(std::span<const char> active) const {
    std::int64_t count = 0;
    for (const auto& p : pairs_) {
        if (!active[static_cast<std::size_t>(p.v)]) continue;
        bool witness = std::none_of(p.m.begin(), p.m.end(), [&](Vertex w) { return active[static_cast<std::size_t>(w)]; });
        count += witness ? 1 : 0;
    }
    return count;
}

KSystem ksystem_from_construction(const ConstructionSequence& seq) {
    std::vector<KSystemPair> pairs;
    for (const auto& e : seq.entries()) {
        if (e.back.size() == static_cast<std::size_t>(seq.k())) pairs.push_back({e.v, e.back});
    }
    return KSystem(seq.k(), seq.size(), std::move(pairs));
}

}  // namespace ccstop
