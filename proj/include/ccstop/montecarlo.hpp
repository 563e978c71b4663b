#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ccstop/construction.hpp"
#include "ccstop/generators.hpp"
#include "ccstop/graph.hpp"
#include "ccstop/rational.hpp"
#include "ccstop/strategy.hpp"

namespace ccstop {

struct EstimatorConfig {
    std::int64_t replications = 1000;
    std::uint64_t seed = 1;
    double ci_level = 0.99;
    // Worker count; results do not depend on it.
    unsigned threads = 1;
};

struct Estimate {
    double mean = 0;
    double std_error = 0;
    double ci_low = 0;
    double ci_high = 0;
    std::int64_t replications = 0;
    std::uint64_t seed = 0;
    friend bool operator==(const Estimate&, const Estimate&) = default;
};

// Sample mean, standard error (n-1 denominator) and a normal-approximation interval.
// Samples are reduced in index order, so the result is a pure function of the data.
Estimate summarize(std::span<const std::int64_t> samples, const EstimatorConfig& cfg);

// Two-sided normal quantile for the configured level, e.g. 2.5758... at 0.99.
double normal_quantile(double ci_level);

// Replication i plays the permutation drawn from stream (cfg.seed, i).
// Blind strategies only draw the prefix they need (the prefix of that same shuffle).
Estimate estimate_strategy(const Graph& g, const ConstructionSequence* seq, const StrategySpec& spec,
                           const EstimatorConfig& cfg);

struct TailEstimate {
    Estimate frequency;
    std::int64_t hits = 0;
    std::int64_t subset_size = 0;
    double threshold = 0;
    // Clopper-Pearson interval at cfg.ci_level; meaningful when hits are 0 or rare.
    double exact_low = 0;
    double exact_high = 0;
};

// Frequency of CC(G[ceil(alpha n)]) > threshold.
TailEstimate estimate_tail(const Graph& g, const Rational& alpha, double threshold, const EstimatorConfig& cfg);

struct PairedDifference {
    std::size_t first;
    std::size_t second;
    Estimate difference;  // score[first] - score[second], per replication
};

struct Comparison {
    std::vector<Estimate> estimates;
    std::vector<PairedDifference> differences;  // every pair first < second
};

// Common random numbers: every spec plays the same permutation in each replication.
Comparison compare_strategies(const Graph& g, const ConstructionSequence* seq, std::span<const StrategySpec> specs,
                              const EstimatorConfig& cfg);

// Mean CC(sigma, t) for every t in [0, n], all thresholds read off the same permutations.
std::vector<Estimate> estimate_blind_curve(const Graph& g, const EstimatorConfig& cfg);

// A full-information strategy against the best blind threshold on a chordal instance.
// The blind curve is exact (witness counting); the strategy is compared by common
// random numbers against the blind threshold `anchor_l`, and the exact gap between
// the anchor and the best threshold is added to the estimated difference. The anchor
// should be the strategy's own first checkpoint, where the paired difference has low
// variance.
struct SeparationReport {
    std::int64_t best_l = 0;
    Rational best_blind_exact;
    std::int64_t anchor_l = 0;
    Rational anchor_blind_exact;
    Estimate strategy;
    Estimate anchor_difference;  // strategy - blind(anchor), paired
    Estimate difference;         // strategy - best blind
    // Monte Carlo cross-check of the blind curve at best_l (scan configuration).
    Estimate scan_at_best;
    std::int64_t scan_argmax = 0;
};

SeparationReport separation_against_best_blind(const Instance& inst, const StrategySpec& strategy, std::int64_t anchor_l,
                                               const EstimatorConfig& compare_cfg, const EstimatorConfig& scan_cfg);

}  // namespace ccstop
