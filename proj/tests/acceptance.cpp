// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdlib>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "ccstop/activation.hpp"
#include "ccstop/construction.hpp"
#include "ccstop/exact.hpp"
#include "ccstop/generators.hpp"
#include "ccstop/metagame.hpp"
#include "ccstop/montecarlo.hpp"
#include "ccstop/rng.hpp"
#include "ccstop/strategy.hpp"

using namespace ccstop;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::vector<Vertex> shuffled(Vertex n, Rng& rng) {
    std::vector<Vertex> sigma(static_cast<std::size_t>(n));
    for (Vertex i = 0; i < n; ++i) sigma[static_cast<std::size_t>(i)] = i;
    rng.partial_shuffle(std::span<Vertex>(sigma), sigma.size());
    return sigma;
}

Graph random_tree(Vertex n, std::uint64_t seed) {
    return gen_named_family(Family::random_tree, {.n = n, .seed = seed}).graph;
}

Outcome blind_tree_formula() {
    Outcome out;
    Rng rng(101, 0);
    int checks = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto n = static_cast<Vertex>(1 + rng.below(12));
        auto g = random_tree(n, rng.next());
        for (std::int64_t l = 0; l <= n; ++l, ++checks) {
            out.require(brute_force_blind(g, l) == Rational(l * (n - l + 1), n),
                        fmt::format("mismatch at n={} l={}", n, l));
        }
    }
    if (out.pass) out.detail = fmt::format("{} (tree, l) pairs equal l(n-l+1)/n", checks);
    return out;
}

Outcome tree_bracket() {
    Outcome out;
    std::string values;
    for (std::int64_t n : {5, 50, 500, 500000}) {
        auto opt = blind_optimal_threshold_tree(n);
        out.require(opt.expected > Rational(n, 4) && opt.expected < Rational(n, 4) + 1,
                    fmt::format("n={} max {} outside (n/4, n/4+1)", n, to_string(opt.expected)));
        values += fmt::format(" n={}:{}-n/4={}", n, opt.l, to_double(opt.expected - Rational(n, 4)));
    }
    if (out.pass) out.detail = "l* and excess over n/4:" + values;
    return out;
}

Outcome ktree_formula() {
    Outcome out;
    Rng rng(103, 0);
    int checks = 0;
    for (int k = 1; k <= 3; ++k) {
        for (int trial = 0; trial < 15; ++trial) {
            const auto n = static_cast<Vertex>(k + 1 + rng.below(static_cast<std::uint64_t>(10 - k)));
            auto g = graph_from_construction(gen_random_ktree(k, n, rng.next()));
            for (std::int64_t l = 0; l <= n; ++l, ++checks) {
                out.require(blind_expectation_ktree(k, n, l) == brute_force_blind(g, l),
                            fmt::format("mismatch at k={} n={} l={}", k, n, l));
            }
        }
    }
    if (out.pass) out.detail = fmt::format("{} (k-tree, l) pairs equal the subset enumeration", checks);
    return out;
}

Outcome ktree_bracket() {
    Outcome out;
    const std::int64_t n = 100000;
    std::string values;
    for (int k = 1; k <= 5; ++k) {
        const auto l = static_cast<std::int64_t>(std::llround(static_cast<double>(n) / (k + 1)));
        const Rational value = blind_expectation_ktree(k, n, l);
        const Rational c = Rational(BigInt(pow(BigInt(k), static_cast<unsigned>(k))),
                                    BigInt(pow(BigInt(k + 1), static_cast<unsigned>(k + 1))));
        const double centre = to_double(c * n);
        const double v = to_double(value);
        out.require(v >= centre - (k + 2) / std::exp(1.0) && value <= c * n + 1,
                    fmt::format("k={} value {} outside [{}, {}]", k, v, centre - (k + 2) / std::exp(1.0), centre + 1));
        values += fmt::format(" k={}:{:+.4f}", k, v - centre);
    }
    if (out.pass) out.detail = "value - c_k n at l=round(n/(k+1)):" + values;
    return out;
}

Outcome dp_optimality() {
    Outcome out;
    Rng rng(105, 0);
    int compared = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto n = static_cast<Vertex>(3 + trial % 6);
        auto inst = gen_named_family(Family::random_tree, {.n = n, .seed = rng.next()});
        const auto dp = bind_strategy(StrategySpec{DpOptimal{}}, inst);
        const Rational best = std::get<DpOptimal>(dp).table->exact[0];
        const Rational played = brute_force_strategy_value(inst.graph, nullptr, dp);
        out.require(played == best, fmt::format("dp strategy plays {} but V(empty) = {}", to_string(played), to_string(best)));

        std::vector<StrategySpec> catalog{GreedyGain{}, GreedyGain{true}, BlindFraction{make_rational(1, 3)},
                                          BlindFraction{make_rational(1, 2)}};
        for (std::int64_t l = 0; l <= n; ++l) catalog.push_back(BlindThreshold{l});
        for (Vertex trigger = 0; trigger < n; trigger += 2) {
            catalog.push_back(TwoPhase{make_rational(1, 3), make_rational(1, 2), "", {trigger}});
            catalog.push_back(TwoPhase{make_rational(1, 4), make_rational(2, 3), "", {trigger}});
        }
        for (const auto& spec : catalog) {
            const Rational value = brute_force_strategy_value(inst.graph, nullptr, spec);
            out.require(value <= best, fmt::format("{} scores {} above V(empty) = {}", describe(spec), to_string(value),
                                                   to_string(best)));
            ++compared;
        }
    }
    if (out.pass) out.detail = fmt::format("50 random trees n=3..8, {} catalog strategies <= V(empty), dp plays V(empty)", compared);
    return out;
}

Outcome path_trend() {
    Outcome out;
    std::vector<double> ratio(23, 0);
    std::string values;
    for (Vertex n = 8; n <= 22; ++n) {
        ratio[static_cast<std::size_t>(n)] = solve_dp(gen_named_family(Family::path, {.n = n}).graph).root_value() / n;
        values += fmt::format(" {}:{:.6f}", n, ratio[static_cast<std::size_t>(n)]);
        out.require(ratio[static_cast<std::size_t>(n)] > 0.25, fmt::format("V/n <= 1/4 at n={}", n));
    }
    for (Vertex n = 13; n <= 22; ++n) {
        out.require(ratio[static_cast<std::size_t>(n)] <= ratio[static_cast<std::size_t>(n - 1)],
                    fmt::format("V/n increases from n={} to n={}", n - 1, n));
    }
    out.require(ratio[22] - 0.25 < ratio[12] - 0.25, "gap at n=22 not below gap at n=12");
    out.detail = (out.pass ? "V(empty)/n:" : out.detail + "; V(empty)/n:") + values;
    return out;
}

Outcome witness_counts() {
    Outcome out;
    Rng rng(107, 0);
    std::int64_t steps = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int k = 1 + static_cast<int>(rng.below(4));
        const auto n = static_cast<Vertex>(k + 1 + rng.below(static_cast<std::uint64_t>(200 - k)));
        auto seq = gen_random_ktree(k, n, rng.next());
        auto g = graph_from_construction(seq);
        auto sigma = shuffled(n, rng);
        const auto prefix = rng.below(static_cast<std::uint64_t>(n) + 1);
        ActivationState s(g, &seq, {.track_neighborhoods = false});
        for (std::uint64_t t = 0; t < prefix; ++t, ++steps) {
            s.activate(sigma[t]);
            out.require(s.cc() == *s.wv(), fmt::format("cc != wv on a {}-tree, n={}", k, n));
        }
    }
    int degenerate = 0;
    while (degenerate < 100) {
        const int k = 2 + static_cast<int>(rng.below(3));
        const auto n = static_cast<Vertex>(k + 2 + rng.below(static_cast<std::uint64_t>(199 - k)));
        auto seq = gen_random_degenerate(k, n, rng.next());
        auto g = graph_from_construction(seq);
        if (is_ktree(seq, g)) continue;
        ++degenerate;
        ActivationState s(g, &seq, {.track_neighborhoods = false});
        for (Vertex v : shuffled(n, rng)) {
            s.activate(v);
            out.require(s.cc() <= *s.wv(), fmt::format("cc > wv on a {}-degenerate sequence, n={}", k, n));
        }
    }
    if (out.pass) out.detail = fmt::format("1000 k-tree prefixes ({} steps) cc == wv; 100 non-k-tree sequences cc <= wv", steps);
    return out;
}

Outcome gain_formula() {
    Outcome out;
    Rng rng(108, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = 1 + static_cast<int>(rng.below(3));
        const auto n = static_cast<Vertex>(k + 2 + rng.below(40));
        auto seq = trial % 2 ? gen_random_ktree(k, n, rng.next()) : gen_random_degenerate(k, n, rng.next());
        auto g = graph_from_construction(seq);
        auto sigma = shuffled(n, rng);
        ActivationState s(g);
        const auto t = rng.below(static_cast<std::uint64_t>(n));
        for (std::uint64_t i = 0; i < t; ++i) s.activate(sigma[i]);
        Rational total = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (s.is_active(v)) continue;
            auto next = s;
            total += next.activate(v).delta_cc;
        }
        const Rational mean = total / (n - s.t());
        out.require(s.expected_gain() == mean,
                    fmt::format("gain {} vs brute force {}", to_string(s.expected_gain()), to_string(mean)));
    }
    if (out.pass) out.detail = "100 random states, exact equality";
    return out;
}

Outcome continuation_positivity() {
    Outcome out;
    Rational smallest = -1;
    for (std::int64_t n = 11; n <= 501; n += 2) {
        auto r = continuation_example(n);
        out.require(r.strategy_gain > 0, fmt::format("gain {} at n={}", to_string(r.strategy_gain), n));
        if (smallest < 0 || r.strategy_gain < smallest) smallest = r.strategy_gain;
    }
    auto last = continuation_example(501);
    out.detail = fmt::format("min gain {:.6f}; at n=501 gain {:.6f}, displayed expression {:.6f} (tends to 1/4, not 3/4)",
                             to_double(smallest), to_double(last.strategy_gain), to_double(last.displayed));
    return out;
}

Outcome phi_maximum() {
    Outcome out;
    const auto m = maximize_phi();
    out.require(std::abs(m.value - 0.25) <= 1e-9, fmt::format("max {:.12f}", m.value));
    auto found = [&](auto pred) {
        for (const auto& p : m.maximizers)
            if (pred(p)) return true;
        return false;
    };
    constexpr double tol = 1e-6;
    const bool line_beta = found([](const PhiPoint& p) { return std::abs(p.alpha - 0.5) <= tol && std::abs(p.gamma - 0.5) <= tol; });
    const bool line_gamma = found([](const PhiPoint& p) { return std::abs(p.alpha - 0.5) <= tol && p.beta <= tol; });
    const bool corner = found([](const PhiPoint& p) {
        return std::abs(p.alpha - 1) <= tol && std::abs(p.beta - 1) <= tol && std::abs(p.gamma - 0.5) <= tol;
    });
    out.require(line_beta && line_gamma && corner, "a maximizer family is missing");
    if (out.pass) out.detail = fmt::format("max {:.12f}, {} maximizers reported", m.value, m.maximizers.size());
    return out;
}

Outcome mt_maximum() {
    Outcome out;
    constexpr double step = 1e-3;
    double worst = 0;
    for (int k = 1; k <= 10; ++k) {
        const auto m = maximize_mt(k, step);
        const double target = std::pow(k, k) / std::pow(k + 1, k + 1);
        out.require(std::abs(m.grid_alpha - 1.0 / (k + 1)) <= step, fmt::format("argmax {} at k={}", m.grid_alpha, k));
        out.require(std::abs(m.value - target) <= 1e-12, fmt::format("value off by {} at k={}", m.value - target, k));
        worst = std::max(worst, std::abs(m.value - target));
    }
    if (out.pass) out.detail = fmt::format("k=1..10, worst value error {:.2e}", worst);
    return out;
}

Outcome separation() {
    Outcome out;
    const std::int64_t n = 100000;
    const auto inst = gen_named_family(Family::two_star_plus_star, {.n = n});
    const auto strategy = bind_strategy(parse_strategy("twophase:alpha=1/3,gamma=1/2,trigger=initial_clique"), inst);
    const auto anchor = ceil_mul(make_rational(1, 3), n);
    const auto report = separation_against_best_blind(inst, strategy, anchor, {.replications = 4000, .seed = 2024, .threads = 1},
                                                      {.replications = 200, .seed = 2025, .threads = 1});
    const auto& d = report.difference;
    out.require(d.mean > 0 && d.ci_low > 0, fmt::format("difference {:.3f}, 99% CI [{:.3f}, {:.3f}]", d.mean, d.ci_low, d.ci_high));
    out.detail = fmt::format(
        "best blind l={} E={:.4f} (exact); two-phase {:.4f}; difference {:.3f} 99% CI [{:.3f}, {:.3f}]; "
        "200-rep scan at l*: {:.1f} +- {:.1f}, scan argmax l={}",
        report.best_l, to_double(report.best_blind_exact), report.strategy.mean, d.mean, d.ci_low, d.ci_high,
        report.scan_at_best.mean, report.scan_at_best.std_error, report.scan_argmax);
    return out;
}

Outcome concentration() {
    Outcome out;
    const Vertex n = 10000;
    auto g = random_tree(n, 113);
    const double alpha = 0.5;
    const double eps = 0.3;
    const double beta = static_cast<double>(g.edge_count()) / n;
    const double threshold = (alpha - alpha * alpha * beta) * n + 3 * eps / 10 * n;
    const auto tail = estimate_tail(g, make_rational(1, 2), threshold, {.replications = 10000, .seed = 7});
    const double bound = eps * eps * eps / 2000 + 3 * tail.frequency.std_error;
    out.require(tail.frequency.mean <= bound, fmt::format("tail {} above {}", tail.frequency.mean, bound));
    out.detail = fmt::format("threshold {:.2f}: {} hits in 10^4, frequency {} <= {:.3e}; Clopper-Pearson 99% upper {:.2e}",
                             threshold, tail.hits, tail.frequency.mean, bound, tail.exact_high);
    return out;
}

Outcome determinism() {
    Outcome out;
    auto tree = random_tree(2000, 9);
    auto seq = gen_random_ktree(2, 2000, 10);
    auto ktree = graph_from_construction(seq);
    const std::vector<StrategySpec> specs{GreedyGain{}, BlindFraction{make_rational(1, 2)}, BlindThreshold{700}};
    auto run = [&](unsigned threads) {
        EstimatorConfig cfg{.replications = 1000, .seed = 99, .threads = threads};
        std::vector<Estimate> all;
        for (const auto& spec : specs) {
            all.push_back(estimate_strategy(tree, nullptr, spec, cfg));
            all.push_back(estimate_strategy(ktree, &seq, spec, cfg));
        }
        all.push_back(estimate_tail(tree, make_rational(1, 2), 600, cfg).frequency);
        for (const auto& d : compare_strategies(tree, nullptr, specs, cfg).differences) all.push_back(d.difference);
        for (const auto& e : estimate_blind_curve(tree, cfg)) all.push_back(e);
        return all;
    };
    const auto one = run(1);
    out.require(run(4) == one, "4 threads differ from 1");
    out.require(run(16) == one, "16 threads differ from 1");
    if (out.pass) out.detail = fmt::format("{} estimates bit-identical at 1, 4 and 16 threads", one.size());
    return out;
}

}  // namespace

// Optional arguments select criteria by number, e.g. `acceptance 12 13`.
int main(int argc, char** argv) {
    std::vector<bool> selected(15, argc == 1);
    for (int i = 1; i < argc; ++i) {
        const int c = std::atoi(argv[i]);
        if (c >= 1 && c <= 14) selected[static_cast<std::size_t>(c)] = true;
    }
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"blind tree formula (exact)", blind_tree_formula},
        {"tree blind bracket (n/4, n/4+1)", tree_bracket},
        {"k-tree blind formula (exact)", ktree_formula},
        {"k-tree blind bracket", ktree_bracket},
        {"dp optimality, trees n<=8", dp_optimality},
        {"path dp trend n=8..22", path_trend},
        {"cc = wv on k-trees", witness_counts},
        {"expected gain formula", gain_formula},
        {"continuation gain positive, odd n in [11,501]", continuation_positivity},
        {"phi maximum 1/4", phi_maximum},
        {"mt score maximum", mt_maximum},
        {"two-phase beats best blind on two_star_plus_star", separation},
        {"concentration tail", concentration},
        {"monte carlo determinism across threads", determinism},
    };
    int failures = 0;
    std::size_t ran = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (!selected[i + 1]) continue;
        ++ran;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += outcome.pass ? 0 : 1;
        fmt::print("[{}] {:2} {} ({:.1f}s): {}\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, seconds,
                   outcome.detail);
        std::fflush(stdout);
    }
    fmt::print("{} of {} criteria passed\n", ran - static_cast<std::size_t>(failures), ran);
    return failures == 0 ? 0 : 1;
}
