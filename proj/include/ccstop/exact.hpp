#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ccstop/chordal.hpp"
#include "ccstop/construction.hpp"
#include "ccstop/graph.hpp"
#include "ccstop/rational.hpp"
#include "ccstop/strategy.hpp"
#include "ccstop/value_table.hpp"

namespace ccstop {

// Expected CC of a uniformly random l-subset of any tree on n vertices: l(n-l+1)/n.
Rational blind_expectation_tree(std::int64_t n, std::int64_t l);

// Expected number of witnessing vertices in a random l-subset of n vertices, given
// how many vertices have back-neighborhoods of each size. A vertex with |M| = s is a
// witness with probability l (n-l)_s / (n)_{s+1} (falling factorials). On orderings
// whose back-neighborhoods are cliques this is exactly the expected CC.
//
// All terms share the denominator (n)_{K+1}, K the largest size, so a scan over l
// only needs big-integer numerators.
class WitnessCurve {
public:
    WitnessCurve(std::vector<std::int64_t> histogram, std::int64_t n);

    std::int64_t n() const noexcept { return n_; }
    const BigInt& denominator() const noexcept { return denominator_; }
    BigInt numerator(std::int64_t l) const;
    Rational value(std::int64_t l) const { return Rational(numerator(l), denominator_); }

    // Every l in [0, n] attaining the maximum, ascending.
    std::vector<std::int64_t> argmax() const;

private:
    std::vector<std::int64_t> histogram_;
    std::int64_t n_;
    std::vector<BigInt> tail_factor_;  // (n-s-1)_{K-s}
    BigInt denominator_;
};

// Back-size histogram of a k-tree on n vertices: sizes 0..k-1 once each, k for the rest.
std::vector<std::int64_t> ktree_histogram(int k, std::int64_t n);

// Exact blind expectation for every k-tree on n vertices, initial clique included exactly.
Rational blind_expectation_ktree(int k, std::int64_t n, std::int64_t l);

// Exact blind expectation on a chordal graph; ParameterError if g is not chordal.
Rational blind_expectation_chordal(const Graph& g, std::int64_t l);

// Mean CC over all l-subsets. ResourceError when C(n, l) > 1e8.
Rational brute_force_blind(const Graph& g, std::int64_t l);

struct DpOptions {
    // Solve in rationals as well (n <= 12); stop flags then come from exact comparisons.
    bool exact = false;
};

constexpr Vertex kDpVertexCap = 24;
constexpr Vertex kDpExactCap = 12;
constexpr Vertex kPermutationCap = 9;

// ResourceError above kDpVertexCap (or kDpExactCap in exact mode).
ValueTable solve_dp(const Graph& g, DpOptions options = {});

// CC of the induced subgraph on a bitmask; n <= 64.
std::int64_t mask_components(std::span<const std::uint64_t> adjacency_masks, std::uint64_t mask);
std::vector<std::uint64_t> adjacency_masks(const Graph& g);

// Mean of run_strategy's score over all n! permutations; ResourceError above kPermutationCap.
Rational brute_force_strategy_value(const Graph& g, const ConstructionSequence* seq, const StrategySpec& spec);

// Star with n+1 leaves, all active, whose center also starts a path of n-1 vertices.
// Continuation: if the next vertex is not the center stop, otherwise take (n-1)/2 more.
struct ContinuationExample {
    std::int64_t n;
    Rational displayed;          // closed form (n-1)/n + (1/n)(-(n+1) + (n-1)/4) = 1/4 - 9/(4n)
    Rational strategy_expected;  // expected CC under the continuation, evaluated on the instance
    Rational strategy_gain;      // strategy_expected - (n+1), the gain over stopping now
};

// n odd and >= 3.
ContinuationExample continuation_example(std::int64_t n);

}  // namespace ccstop
