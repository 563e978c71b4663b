#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "ccstop/construction.hpp"
#include "ccstop/graph.hpp"
#include "ccstop/rational.hpp"

namespace ccstop {

// Union-find with union by size and path halving. No deletions.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n = 0) : parent_(n), size_(n, 1) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<Vertex>(i);
    }

    Vertex find(Vertex x) {
        auto xi = static_cast<std::size_t>(x);
        while (parent_[xi] != static_cast<Vertex>(xi)) {
            parent_[xi] = parent_[static_cast<std::size_t>(parent_[xi])];
            xi = static_cast<std::size_t>(parent_[xi]);
        }
        return static_cast<Vertex>(xi);
    }

    // Returns the surviving root.
    Vertex unite(Vertex a, Vertex b) {
        a = find(a);
        b = find(b);
        if (a == b) return a;
        if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
        return a;
    }

private:
    std::vector<Vertex> parent_;
    std::vector<std::int32_t> size_;
};

struct ActivationOptions {
    // Maintain per-component inactive neighborhoods (needed for nbr_sum / expected_gain).
    bool track_neighborhoods = true;
    // Maintain the witnessing-vertex count; requires a construction sequence.
    bool track_witnesses = true;
};

struct ActivationDelta {
    std::int64_t delta_cc;
    std::int64_t cc;
    std::int64_t nbr_sum;  // -1 when neighborhoods are not tracked
    std::optional<std::int64_t> wv;
};

// State of one play: the active set grows one vertex at a time while the
// component count, the sum of component neighborhood sizes (inactive neighbors
// only) and the witnessing-vertex count are kept current.
//
// N(C) for an active component C is the set of inactive vertices adjacent to C.
// Each component root owns that set; merging moves the smaller sets into the
// largest, so a run costs O(sum of degrees * log n) hash operations.
class ActivationState {
public:
    explicit ActivationState(const Graph& g, const ConstructionSequence* seq = nullptr, ActivationOptions options = {});

    ActivationDelta activate(Vertex v);

    const Graph& graph() const noexcept { return *graph_; }
    const ConstructionSequence* sequence() const noexcept { return seq_; }
    Vertex n() const noexcept { return graph_->n(); }
    std::int64_t t() const noexcept { return t_; }
    std::int64_t cc() const noexcept { return cc_; }
    bool tracks_neighborhoods() const noexcept { return options_.track_neighborhoods; }
    bool tracks_witnesses() const noexcept { return witnesses_; }

    // Sum over components of |N(C_i)|. UsageError if not tracked.
    std::int64_t nbr_sum() const;
    std::optional<std::int64_t> wv() const;

    bool is_active(Vertex v) const { return active_[static_cast<std::size_t>(v)] != 0; }
    std::span<const char> active() const noexcept { return active_; }

    // For inactive w: number of distinct active components adjacent to w.
    std::int32_t adjacent_components(Vertex w) const;

    // Bitmask of the active set; only for n <= 64.
    std::uint64_t active_mask() const;

    // (n - t - nbr_sum) / (n - t): exact expected change of cc from one more arrival.
    Rational expected_gain() const;
    // n - t >= nbr_sum, i.e. expected_gain() >= 0, without rational arithmetic.
    bool gain_nonnegative() const;

private:
    const Graph* graph_;
    const ConstructionSequence* seq_;
    ActivationOptions options_;
    bool witnesses_ = false;

    std::vector<char> active_;
    std::int64_t t_ = 0;
    std::int64_t cc_ = 0;
    std::uint64_t mask_ = 0;
    DisjointSets dsu_;
    std::vector<std::uint64_t> seen_;  // epoch stamps by root, for deduplicating adjacent components
    std::uint64_t epoch_ = 0;
    std::vector<Vertex> roots_;

    std::int64_t nbr_sum_ = 0;
    std::vector<std::int32_t> adj_comp_count_;
    std::vector<std::unordered_set<Vertex>> boundary_;  // by component root

    std::int64_t wv_ = 0;
    std::vector<std::int32_t> back_active_;  // |M_v ∩ active|
    std::vector<std::size_t> dependents_offset_;
    std::vector<Vertex> dependents_;  // v such that u ∈ M_v, grouped by u
};

// From-scratch recounts used as oracles for the incremental values.
std::int64_t recount_cc(const ActivationState& state);
std::int64_t recount_nbr_sum(const ActivationState& state);
std::int64_t recount_wv(const ActivationState& state);

struct TracePoint {
    std::int64_t t;
    std::int64_t cc;
    std::int64_t nbr_sum;
    std::optional<std::int64_t> wv;
};

// Plays sigma to the end; trace[t] describes the state after t arrivals (trace[0] is empty).
std::vector<TracePoint> run_permutation(const Graph& g, const ConstructionSequence* seq, std::span<const Vertex> sigma);

// ValidationError unless sigma is a permutation of 0..n-1.
void validate_permutation(std::span<const Vertex> sigma, Vertex n);

}  // namespace ccstop
