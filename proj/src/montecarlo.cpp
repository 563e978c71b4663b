#include "ccstop/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <thread>

#include <boost/math/distributions/normal.hpp>
#include <boost/math/special_functions/beta.hpp>

#include "ccstop/activation.hpp"
#include "ccstop/chordal.hpp"
#include "ccstop/errors.hpp"
#include "ccstop/exact.hpp"
#include "ccstop/rng.hpp"

namespace ccstop {

namespace {

void check_config(const EstimatorConfig& cfg) {
    if (cfg.replications < 1) throw ParameterError("replications must be >= 1");
    if (!(cfg.ci_level > 0 && cfg.ci_level < 1)) throw ParameterError("ci_level must lie in (0,1)");
}

// Each worker owns a contiguous block of replication indices and a scratch buffer.
// Outputs are written by index, so the worker count never changes a result.
void for_each_replication(const EstimatorConfig& cfg, const std::function<void(std::int64_t, std::vector<Vertex>&)>& body,
                          Vertex n) {
    const auto total = cfg.replications;
    const auto workers = static_cast<std::int64_t>(std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(total))));
    auto run_block = [&](std::int64_t w) {
        std::vector<Vertex> scratch(static_cast<std::size_t>(n));
        const std::int64_t begin = total * w / workers;
        const std::int64_t end = total * (w + 1) / workers;
        for (std::int64_t i = begin; i < end; ++i) body(i, scratch);
    };
    if (workers == 1) {
        run_block(0);
        return;
    }
    std::vector<std::jthread> pool;
    for (std::int64_t w = 1; w < workers; ++w) pool.emplace_back(run_block, w);
    run_block(0);
}

// Uniform random ordering from stream (seed, rep); only the first `prefix` entries are drawn.
void draw_permutation(std::vector<Vertex>& sigma, std::uint64_t seed, std::int64_t rep, std::size_t prefix) {
    std::iota(sigma.begin(), sigma.end(), 0);
    Rng rng(seed, static_cast<std::uint64_t>(rep));
    rng.partial_shuffle(std::span<Vertex>(sigma), prefix);
}

std::int64_t prefix_components(const Graph& g, std::span<const Vertex> prefix) {
    ActivationState state(g, nullptr, ActivationOptions{.track_neighborhoods = false, .track_witnesses = false});
    for (Vertex v : prefix) state.activate(v);
    return state.cc();
}

// Score of one spec on sigma; blind specs read only the prefix.
std::int64_t play(const Graph& g, const ConstructionSequence* seq, const StrategySpec& spec, std::span<const Vertex> sigma) {
    if (is_blind(spec)) {
        const auto l = blind_stop_time(spec, g.n());
        return prefix_components(g, sigma.first(static_cast<std::size_t>(l)));
    }
    return run_strategy(g, seq, spec, sigma).score;
}

std::size_t needed_prefix(const Graph& g, std::span<const StrategySpec> specs) {
    std::size_t prefix = 0;
    for (const auto& spec : specs) {
        const std::size_t need = is_blind(spec) ? static_cast<std::size_t>(blind_stop_time(spec, g.n()))
                                                : static_cast<std::size_t>(g.n());
        prefix = std::max(prefix, need);
    }
    return prefix;
}

Estimate from_moments(double mean, double variance, const EstimatorConfig& cfg) {
    Estimate e;
    e.mean = mean;
    e.replications = cfg.replications;
    e.seed = cfg.seed;
    e.std_error = cfg.replications > 1 ? std::sqrt(variance / static_cast<double>(cfg.replications)) : 0.0;
    const double z = normal_quantile(cfg.ci_level);
    e.ci_low = mean - z * e.std_error;
    e.ci_high = mean + z * e.std_error;
    return e;
}

}  // namespace

double normal_quantile(double ci_level) {
    boost::math::normal standard;
    return boost::math::quantile(standard, 1.0 - (1.0 - ci_level) / 2.0);
}

Estimate summarize(std::span<const std::int64_t> samples, const EstimatorConfig& cfg) {
    if (samples.empty()) throw ParameterError("no samples");
    EstimatorConfig local = cfg;
    local.replications = static_cast<std::int64_t>(samples.size());
    // Integer sum is exact; the centered second moment is accumulated in index order.
    const std::int64_t sum = std::accumulate(samples.begin(), samples.end(), std::int64_t{0});
    const double count = static_cast<double>(samples.size());
    const double mean = static_cast<double>(sum) / count;
    double squares = 0;
    for (auto x : samples) squares += (static_cast<double>(x) - mean) * (static_cast<double>(x) - mean);
    const double variance = samples.size() > 1 ? squares / (count - 1) : 0.0;
    return from_moments(mean, variance, local);
}

Estimate estimate_strategy(const Graph& g, const ConstructionSequence* seq, const StrategySpec& spec,
                           const EstimatorConfig& cfg) {
    check_config(cfg);
    std::vector<std::int64_t> scores(static_cast<std::size_t>(cfg.replications));
    const std::size_t prefix = needed_prefix(g, std::span(&spec, 1));
    for_each_replication(
        cfg,
        [&](std::int64_t rep, std::vector<Vertex>& sigma) {
            draw_permutation(sigma, cfg.seed, rep, prefix);
            scores[static_cast<std::size_t>(rep)] = play(g, seq, spec, sigma);
        },
        g.n());
    return summarize(scores, cfg);
}

TailEstimate estimate_tail(const Graph& g, const Rational& alpha, double threshold, const EstimatorConfig& cfg) {
    check_config(cfg);
    if (alpha < 0 || alpha > 1) throw ParameterError("alpha must lie in [0,1]");
    TailEstimate out;
    out.threshold = threshold;
    out.subset_size = ceil_mul(alpha, g.n());
    std::vector<std::int64_t> hits(static_cast<std::size_t>(cfg.replications));
    for_each_replication(
        cfg,
        [&](std::int64_t rep, std::vector<Vertex>& sigma) {
            draw_permutation(sigma, cfg.seed, rep, static_cast<std::size_t>(out.subset_size));
            const auto cc = prefix_components(g, std::span<const Vertex>(sigma).first(static_cast<std::size_t>(out.subset_size)));
            hits[static_cast<std::size_t>(rep)] = static_cast<double>(cc) > threshold ? 1 : 0;
        },
        g.n());
    out.frequency = summarize(hits, cfg);
    out.hits = std::accumulate(hits.begin(), hits.end(), std::int64_t{0});
    const double tail = (1.0 - cfg.ci_level) / 2.0;
    const double r = static_cast<double>(cfg.replications);
    const double x = static_cast<double>(out.hits);
    out.exact_low = out.hits == 0 ? 0.0 : boost::math::ibeta_inv(x, r - x + 1.0, tail);
    out.exact_high = out.hits == cfg.replications ? 1.0 : boost::math::ibeta_inv(x + 1.0, r - x, 1.0 - tail);
    return out;
}

Comparison compare_strategies(const Graph& g, const ConstructionSequence* seq, std::span<const StrategySpec> specs,
                              const EstimatorConfig& cfg) {
    check_config(cfg);
    if (specs.size() < 2) throw ParameterError("compare_strategies needs at least two strategies");
    const std::size_t k = specs.size();
    const auto reps = static_cast<std::size_t>(cfg.replications);
    std::vector<std::int64_t> scores(k * reps);  // strategy-major
    const std::size_t prefix = needed_prefix(g, specs);
    for_each_replication(
        cfg,
        [&](std::int64_t rep, std::vector<Vertex>& sigma) {
            draw_permutation(sigma, cfg.seed, rep, prefix);
            for (std::size_t s = 0; s < k; ++s) scores[s * reps + static_cast<std::size_t>(rep)] = play(g, seq, specs[s], sigma);
        },
        g.n());

    Comparison out;
    for (std::size_t s = 0; s < k; ++s) out.estimates.push_back(summarize(std::span(scores).subspan(s * reps, reps), cfg));
    std::vector<std::int64_t> diff(reps);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            for (std::size_t i = 0; i < reps; ++i) diff[i] = scores[a * reps + i] - scores[b * reps + i];
            out.differences.push_back({a, b, summarize(diff, cfg)});
        }
    }
    return out;
}

std::vector<Estimate> estimate_blind_curve(const Graph& g, const EstimatorConfig& cfg) {
    check_config(cfg);
    const auto n = static_cast<std::size_t>(g.n());
    const auto workers = std::max<std::int64_t>(1, std::min<std::int64_t>(cfg.threads, cfg.replications));
    // Per-worker integer sums; merging integers is order-free.
    std::vector<std::vector<std::int64_t>> sums(static_cast<std::size_t>(workers), std::vector<std::int64_t>(n + 1, 0));
    std::vector<std::vector<std::int64_t>> squares(static_cast<std::size_t>(workers), std::vector<std::int64_t>(n + 1, 0));
    EstimatorConfig blocks = cfg;
    blocks.replications = workers;
    blocks.threads = static_cast<unsigned>(workers);
    for_each_replication(
        blocks,
        [&](std::int64_t w, std::vector<Vertex>& sigma) {
            auto& sum = sums[static_cast<std::size_t>(w)];
            auto& sq = squares[static_cast<std::size_t>(w)];
            const std::int64_t begin = cfg.replications * w / workers;
            const std::int64_t end = cfg.replications * (w + 1) / workers;
            for (std::int64_t rep = begin; rep < end; ++rep) {
                draw_permutation(sigma, cfg.seed, rep, n);
                ActivationState state(g, nullptr, ActivationOptions{.track_neighborhoods = false, .track_witnesses = false});
                for (std::size_t t = 0; t < n; ++t) {
                    const auto cc = state.activate(sigma[t]).cc;
                    sum[t + 1] += cc;
                    sq[t + 1] += cc * cc;
                }
            }
        },
        g.n());

    std::vector<Estimate> curve(n + 1);
    const double r = static_cast<double>(cfg.replications);
    for (std::size_t t = 0; t <= n; ++t) {
        std::int64_t s = 0;
        std::int64_t q = 0;
        for (std::int64_t w = 0; w < workers; ++w) {
            s += sums[static_cast<std::size_t>(w)][t];
            q += squares[static_cast<std::size_t>(w)][t];
        }
        const double mean = static_cast<double>(s) / r;
        const double variance = cfg.replications > 1 ? std::max(0.0, (static_cast<double>(q) - r * mean * mean) / (r - 1)) : 0.0;
        curve[t] = from_moments(mean, variance, cfg);
    }
    return curve;
}

SeparationReport separation_against_best_blind(const Instance& inst, const StrategySpec& strategy, std::int64_t anchor_l,
                                               const EstimatorConfig& compare_cfg, const EstimatorConfig& scan_cfg) {
    const Graph& g = inst.graph;
    if (anchor_l < 0 || anchor_l > g.n()) throw ParameterError("anchor threshold outside [0, n]");
    const auto ordering = clique_ordering(g);
    if (!ordering) throw ParameterError("separation needs a chordal instance for the exact blind curve");
    const WitnessCurve curve(back_size_histogram(*ordering), g.n());

    SeparationReport out;
    out.best_l = curve.argmax().front();
    out.best_blind_exact = curve.value(out.best_l);
    out.anchor_l = anchor_l;
    out.anchor_blind_exact = curve.value(anchor_l);

    const StrategySpec pair[] = {strategy, BlindThreshold{anchor_l}};
    const Comparison cmp = compare_strategies(g, inst.sequence ? &*inst.sequence : nullptr, pair, compare_cfg);
    out.strategy = cmp.estimates[0];
    out.anchor_difference = cmp.differences[0].difference;
    const double shift = to_double(out.anchor_blind_exact - out.best_blind_exact);
    out.difference = out.anchor_difference;
    out.difference.mean += shift;
    out.difference.ci_low += shift;
    out.difference.ci_high += shift;

    const auto scan = estimate_blind_curve(g, scan_cfg);
    out.scan_at_best = scan[static_cast<std::size_t>(out.best_l)];
    out.scan_argmax = std::max_element(scan.begin(), scan.end(), [](const Estimate& a, const Estimate& b) { return a.mean < b.mean; }) -
                      scan.begin();
    return out;
}

}  // namespace ccstop
