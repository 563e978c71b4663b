#include "ccstop/strategy.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "ccstop/errors.hpp"
#include "ccstop/exact.hpp"

namespace ccstop {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    while (true) {
        auto pos = text.find(sep);
        parts.push_back(text.substr(0, pos));
        if (pos == std::string_view::npos) break;
        text.remove_prefix(pos + 1);
    }
    return parts;
}

std::map<std::string_view, std::string_view> parse_params(std::string_view body, std::string_view text) {
    std::map<std::string_view, std::string_view> params;
    if (body.empty()) return params;
    for (auto item : split(body, ',')) {
        auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0) {
            throw ParameterError("strategy '" + std::string(text) + "': expected key=value, got '" + std::string(item) + "'");
        }
        if (!params.emplace(item.substr(0, eq), item.substr(eq + 1)).second) {
            throw ParameterError("strategy '" + std::string(text) + "': repeated key '" + std::string(item.substr(0, eq)) + "'");
        }
    }
    return params;
}

Rational unit_fraction(std::string_view value, std::string_view what) {
    Rational r = parse_rational(value);
    if (r < 0 || r > 1) throw ParameterError(std::string(what) + " must lie in [0,1], got " + std::string(value));
    return r;
}

std::int64_t parse_count(std::string_view value) {
    std::int64_t out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size() || out < 0) {
        throw ParameterError("expected a nonnegative integer, got '" + std::string(value) + "'");
    }
    return out;
}

void reject_extra(const std::map<std::string_view, std::string_view>& params, std::initializer_list<std::string_view> allowed,
                  std::string_view text) {
    for (const auto& [key, value] : params) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw ParameterError("strategy '" + std::string(text) + "': unknown key '" + std::string(key) + "'");
        }
    }
}

// Per-run thresholds, so the play loop does no rational arithmetic.
struct Policy {
    const StrategySpec* spec;
    std::int64_t n;
    std::int64_t first = 0;   // blind stop time, or the two-phase checkpoint
    std::int64_t second = 0;  // two-phase extended stop time

    Policy(const StrategySpec& s, std::int64_t n_) : spec(&s), n(n_) {
        if (is_blind(s)) {
            first = blind_stop_time(s, n);
        } else if (const auto* tp = std::get_if<TwoPhase>(&s)) {
            first = std::min(n, ceil_mul(tp->alpha, n));
            second = std::min(n, ceil_mul(tp->gamma, n));
        }
    }

    Decision blind(std::int64_t t) const { return t >= first || t >= n ? Decision::stop : Decision::proceed; }

    Decision full(const ActivationState& state) const {
        const std::int64_t t = state.t();
        if (t >= n) return Decision::stop;
        return std::visit(
            overloaded{
                [&](const BlindThreshold&) { return blind(t); },
                [&](const BlindFraction&) { return blind(t); },
                [&](const GreedyGain& g) {
                    const std::int64_t remaining = n - t;
                    const std::int64_t boundary = state.nbr_sum();
                    const bool go = g.strict ? remaining > boundary : remaining >= boundary;
                    return go ? Decision::proceed : Decision::stop;
                },
                [&](const TwoPhase& tp) {
                    if (tp.trigger.empty()) {
                        throw UsageError("two-phase trigger '" + tp.trigger_name + "' is unresolved; bind the strategy first");
                    }
                    if (t < first) return Decision::proceed;
                    const bool triggered =
                        std::any_of(tp.trigger.begin(), tp.trigger.end(), [&](Vertex v) { return state.is_active(v); });
                    if (!triggered) return Decision::stop;
                    return t >= second ? Decision::stop : Decision::proceed;
                },
                [&](const DpOptimal& dp) {
                    if (!dp.table) throw UsageError("dp strategy has no value table; bind the strategy first");
                    if (dp.table->n != state.n()) throw UsageError("value table was solved for a different graph size");
                    return dp.table->stop(state.active_mask()) ? Decision::stop : Decision::proceed;
                },
                [&](const FixedPermutationOracle&) -> Decision {
                    throw UsageError("the permutation oracle cannot decide from a view");
                },
            },
            *spec);
    }
};

}  // namespace

Regime regime(const StrategySpec& spec) {
    return std::visit(overloaded{
                          [](const BlindThreshold&) { return Regime::blind; },
                          [](const BlindFraction&) { return Regime::blind; },
                          [](const FixedPermutationOracle&) { return Regime::clairvoyant; },
                          [](const auto&) { return Regime::full_information; },
                      },
                      spec);
}

bool is_blind(const StrategySpec& spec) { return regime(spec) == Regime::blind; }

StrategySpec parse_strategy(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view kind = text.substr(0, colon);
    const std::string_view body = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

    if (kind == "greedy") {
        if (body.empty()) return GreedyGain{};
        if (body == "strict") return GreedyGain{true};
        throw ParameterError("strategy '" + std::string(text) + "': greedy takes no option other than 'strict'");
    }
    if (kind == "dp") {
        if (!body.empty()) throw ParameterError("strategy 'dp' takes no parameters");
        return DpOptimal{};
    }
    if (kind == "oracle") return FixedPermutationOracle{};

    const auto params = parse_params(body, text);
    if (kind == "blind") {
        reject_extra(params, {"l", "alpha"}, text);
        if (params.size() != 1) throw ParameterError("strategy '" + std::string(text) + "': give exactly one of l= or alpha=");
        if (auto it = params.find("l"); it != params.end()) return BlindThreshold{parse_count(it->second)};
        return BlindFraction{unit_fraction(params.at("alpha"), "alpha")};
    }
    if (kind == "twophase") {
        reject_extra(params, {"alpha", "gamma", "trigger"}, text);
        for (auto key : {"alpha", "gamma", "trigger"}) {
            if (!params.contains(key)) throw ParameterError("strategy '" + std::string(text) + "': missing " + key + "=");
        }
        TwoPhase tp{unit_fraction(params.at("alpha"), "alpha"), unit_fraction(params.at("gamma"), "gamma"), {}, {}};
        const std::string_view trigger = params.at("trigger");
        if (!trigger.empty() && std::isdigit(static_cast<unsigned char>(trigger.front()))) {
            for (auto id : split(trigger, ';')) tp.trigger.push_back(static_cast<Vertex>(parse_count(id)));
        } else if (!trigger.empty()) {
            tp.trigger_name = std::string(trigger);
        } else {
            throw ParameterError("strategy '" + std::string(text) + "': empty trigger");
        }
        return tp;
    }
    throw ParameterError("unknown strategy '" + std::string(text) + "'");
}

std::string describe(const StrategySpec& spec) {
    return std::visit(overloaded{
                          [](const BlindThreshold& b) { return "blind:l=" + std::to_string(b.l); },
                          [](const BlindFraction& b) { return "blind:alpha=" + to_string(b.alpha); },
                          [](const GreedyGain& g) { return std::string(g.strict ? "greedy:strict" : "greedy"); },
                          [](const TwoPhase& tp) {
                              std::string trigger = tp.trigger_name;
                              if (trigger.empty()) {
                                  for (std::size_t i = 0; i < tp.trigger.size(); ++i) {
                                      trigger += (i ? ";" : "") + std::to_string(tp.trigger[i]);
                                  }
                              }
                              return "twophase:alpha=" + to_string(tp.alpha) + ",gamma=" + to_string(tp.gamma) +
                                     ",trigger=" + trigger;
                          },
                          [](const DpOptimal&) { return std::string("dp"); },
                          [](const FixedPermutationOracle&) { return std::string("oracle"); },
                      },
                      spec);
}

StrategySpec bind_strategy(StrategySpec spec, const Instance& inst) {
    if (auto* tp = std::get_if<TwoPhase>(&spec); tp && tp->trigger.empty()) {
        auto it = inst.marks.find(tp->trigger_name);
        if (it == inst.marks.end() || it->second.empty()) {
            throw ParameterError("instance " + inst.description + " has no vertex set named '" + tp->trigger_name + "'");
        }
        tp->trigger = it->second;
    }
    if (auto* tp = std::get_if<TwoPhase>(&spec)) {
        for (Vertex v : tp->trigger) {
            if (v < 0 || v >= inst.graph.n()) throw ParameterError("trigger vertex " + std::to_string(v) + " out of range");
        }
    }
    if (auto* dp = std::get_if<DpOptimal>(&spec); dp && !dp->table) {
        DpOptions options{.exact = inst.graph.n() <= kDpExactCap};
        dp->table = std::make_shared<const ValueTable>(solve_dp(inst.graph, options));
    }
    return spec;
}

std::int64_t blind_stop_time(const StrategySpec& spec, std::int64_t n) {
    if (const auto* b = std::get_if<BlindThreshold>(&spec)) return std::min(b->l, n);
    if (const auto* b = std::get_if<BlindFraction>(&spec)) return std::min(ceil_mul(b->alpha, n), n);
    throw UsageError("strategy " + describe(spec) + " is not blind");
}

Decision decide(const StrategySpec& spec, BlindView view) {
    if (!is_blind(spec)) throw UsageError("strategy " + describe(spec) + " needs full information, got a blind view");
    return Policy(spec, view.n).blind(view.t);
}

Decision decide(const StrategySpec& spec, const ActivationState& state) { return Policy(spec, state.n()).full(state); }

StopResult run_strategy(const Graph& g, const ConstructionSequence* seq, const StrategySpec& spec,
                        std::span<const Vertex> sigma) {
    validate_permutation(sigma, g.n());
    const std::int64_t n = g.n();
    const ActivationOptions lean{.track_neighborhoods = false, .track_witnesses = false};

    if (std::holds_alternative<FixedPermutationOracle>(spec)) {
        ActivationState state(g, seq, lean);
        StopResult best{0, 0};
        for (Vertex v : sigma) {
            state.activate(v);
            if (state.cc() > best.score) best = {state.t(), state.cc()};
        }
        return best;
    }

    const Policy policy(spec, n);
    if (is_blind(spec)) {
        ActivationState state(g, seq, lean);
        for (std::int64_t t = 0; t < policy.first; ++t) state.activate(sigma[static_cast<std::size_t>(t)]);
        return {state.t(), state.cc()};
    }

    ActivationOptions options = lean;
    options.track_neighborhoods = std::holds_alternative<GreedyGain>(spec);
    ActivationState state(g, seq, options);
    while (policy.full(state) == Decision::proceed) state.activate(sigma[static_cast<std::size_t>(state.t())]);
    return {state.t(), state.cc()};
}

BlindOptimum blind_optimal_threshold_tree(std::int64_t n) {
    if (n < 1) throw ParameterError("tree blind optimum needs n >= 1");
    BlindOptimum out{0, {}, 0};
    std::int64_t best = -1;
    for (std::int64_t l = 0; l <= n; ++l) {
        const std::int64_t numerator = l * (n - l + 1);  // over the common denominator n
        if (numerator > best) {
            best = numerator;
            out.maximizers.assign(1, l);
        } else if (numerator == best) {
            out.maximizers.push_back(l);
        }
    }
    out.l = out.maximizers.front();
    out.expected = blind_expectation_tree(n, out.l);
    return out;
}

BlindOptimum blind_optimal_threshold_ktree(int k, std::int64_t n) {
    if (k < 1 || n < k + 1) throw ParameterError("k-tree blind optimum needs n >= k + 1");
    WitnessCurve curve(ktree_histogram(k, n), n);
    BlindOptimum out{0, curve.argmax(), 0};
    out.l = out.maximizers.front();
    out.expected = curve.value(out.l);
    return out;
}

}  // namespace ccstop
