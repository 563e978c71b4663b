#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ccstop/graph.hpp"

namespace ccstop {

// One step of a construction ordering: vertex v and its back-neighborhood M_v
// (the neighbors of v that precede it in the ordering).
struct ConstructionEntry {
    Vertex v;
    std::vector<Vertex> back;
    friend bool operator==(const ConstructionEntry&, const ConstructionEntry&) = default;
};

// Ordering v_1..v_n certifying a maximal k-degenerate graph. The first k entries form
// the initial clique with M_{v_i} = {v_1..v_{i-1}}; every later entry has |M_v| = k.
// Back-neighborhoods are stored sorted. The constructor validates and throws
// ValidationError naming the offending entry.
class ConstructionSequence {
public:
    ConstructionSequence(int k, std::vector<ConstructionEntry> order);

    int k() const noexcept { return k_; }
    Vertex size() const noexcept { return static_cast<Vertex>(order_.size()); }
    std::span<const ConstructionEntry> entries() const noexcept { return order_; }
    const ConstructionEntry& entry(std::size_t i) const { return order_[i]; }

    // M_v looked up by vertex id.
    std::span<const Vertex> back_neighbors(Vertex v) const;
    std::size_t position(Vertex v) const { return position_[static_cast<std::size_t>(v)]; }

    // Vertices of the initial clique K_k, in order.
    std::vector<Vertex> initial_clique() const;

    friend bool operator==(const ConstructionSequence& a, const ConstructionSequence& b) {
        return a.k_ == b.k_ && a.order_ == b.order_;
    }

private:
    int k_;
    std::vector<ConstructionEntry> order_;
    std::vector<std::size_t> position_;
};

// Edge {v_i, w} for every w in M_{v_i}.
Graph graph_from_construction(const ConstructionSequence& seq);

// True iff every full-size back-neighborhood induces a clique in g.
bool is_ktree(const ConstructionSequence& seq, const Graph& g);

struct KSystemPair {
    Vertex v;
    std::vector<Vertex> m;
    friend bool operator==(const KSystemPair&, const KSystemPair&) = default;
};

// A bag of (v, M_v) pairs over ground set 0..ground_size-1 with |M_v| = k,
// v not in M_v, and each v used at most once.
class KSystem {
public:
    KSystem(int k, Vertex ground_size, std::vector<KSystemPair> pairs);

    int k() const noexcept { return k_; }
    Vertex ground_size() const noexcept { return ground_size_; }
    std::span<const KSystemPair> pairs() const noexcept { return pairs_; }

    // Number of sets M_w that contain v.
    std::size_t degree(Vertex v) const;

    // Active pairs: v active and M_v entirely inactive.
    std::int64_t active_pairs(std::span<const char> active) const;

private:
    int k_;
    Vertex ground_size_;
    std::vector<KSystemPair> pairs_;
};

// The |M_v| = k entries of the sequence, over ground set of size n.
KSystem ksystem_from_construction(const ConstructionSequence& seq);

}  // namespace ccstop
