#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ccstop/activation.hpp"
#include "ccstop/construction.hpp"
#include "ccstop/generators.hpp"
#include "ccstop/graph.hpp"
#include "ccstop/rational.hpp"
#include "ccstop/value_table.hpp"

namespace ccstop {

// Stop after exactly l arrivals.
struct BlindThreshold {
    std::int64_t l;
};

// Stop after ceil(alpha * n) arrivals.
struct BlindFraction {
    Rational alpha;
};

// Continue while the expected gain of one more arrival is nonnegative
// (positive when `strict`).
struct GreedyGain {
    bool strict = false;
};

// Take ceil(alpha*n) vertices; if a trigger vertex is active by then, go on to
// ceil(gamma*n) vertices in total. The trigger is named (resolved against an
// instance's marks by bind_strategy) or given as explicit vertex ids.
struct TwoPhase {
    Rational alpha;
    Rational gamma;
    std::string trigger_name;
    std::vector<Vertex> trigger;
};

// Follows the stop flags of a solved value table.
struct DpOptimal {
    std::shared_ptr<const ValueTable> table;
};

// Test-only: sees the whole permutation and stops at the first t maximizing CC.
// Not a stopping time; used to show what the consistency checks reject.
struct FixedPermutationOracle {};

using StrategySpec = std::variant<BlindThreshold, BlindFraction, GreedyGain, TwoPhase, DpOptimal, FixedPermutationOracle>;

enum class Regime { blind, full_information, clairvoyant };
enum class Decision { proceed, stop };

Regime regime(const StrategySpec& spec);
bool is_blind(const StrategySpec& spec);

// Text form used on the command line:
//   blind:l=42  blind:alpha=1/3  greedy  greedy:strict
//   twophase:alpha=1/3,gamma=1/2,trigger=initial_clique   (or trigger=0;1)
//   dp
StrategySpec parse_strategy(std::string_view text);
std::string describe(const StrategySpec& spec);

// Resolves named triggers against inst.marks and solves the value table for dp.
StrategySpec bind_strategy(StrategySpec spec, const Instance& inst);

// The only things a blind strategy may look at.
struct BlindView {
    std::int64_t n;
    std::int64_t t;
};

// UsageError if spec needs more than the blind view.
Decision decide(const StrategySpec& spec, BlindView view);
// Full view; blind strategies are still handed only (n, t).
Decision decide(const StrategySpec& spec, const ActivationState& state);

// For blind specs: the arrival count at which the strategy stops on n vertices.
std::int64_t blind_stop_time(const StrategySpec& spec, std::int64_t n);

struct StopResult {
    std::int64_t stop_time;
    std::int64_t score;
};

// Plays sigma, consulting decide at t = 0, 1, ... and returning at the first stop.
StopResult run_strategy(const Graph& g, const ConstructionSequence* seq, const StrategySpec& spec,
                        std::span<const Vertex> sigma);

struct BlindOptimum {
    std::int64_t l;                      // smallest maximizer
    std::vector<std::int64_t> maximizers;
    Rational expected;
};

// argmax over l of l(n-l+1)/n.
BlindOptimum blind_optimal_threshold_tree(std::int64_t n);
// argmax over every l of the exact k-tree blind expectation.
BlindOptimum blind_optimal_threshold_ktree(int k, std::int64_t n);

}  // namespace ccstop
