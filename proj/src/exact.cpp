#include "ccstop/exact.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <ostream>
#include <string>

#include "ccstop/activation.hpp"
#include "ccstop/errors.hpp"
#include "ccstop/generators.hpp"

namespace ccstop {

Rational blind_expectation_tree(std::int64_t n, std::int64_t l) {
    if (n < 1 || l < 0 || l > n) throw ParameterError("blind_expectation_tree needs n >= 1 and 0 <= l <= n");
    return Rational(BigInt(l) * (n - l + 1), BigInt(n));
}

WitnessCurve::WitnessCurve(std::vector<std::int64_t> histogram, std::int64_t n)
    : histogram_(std::move(histogram)), n_(n) {
    while (!histogram_.empty() && histogram_.back() == 0) histogram_.pop_back();
    if (histogram_.empty()) histogram_.push_back(0);
    const auto top = static_cast<std::int64_t>(histogram_.size()) - 1;
    if (n_ < 1 || top + 1 > n_) throw ParameterError("back-neighborhood sizes must be below n");
    denominator_ = falling_factorial(n_, top + 1);
    tail_factor_.reserve(histogram_.size());
    for (std::int64_t s = 0; s <= top; ++s) tail_factor_.push_back(falling_factorial(n_ - s - 1, top - s));
}

BigInt WitnessCurve::numerator(std::int64_t l) const {
    if (l < 0 || l > n_) throw ParameterError("l outside [0, n]");
    BigInt total = 0;
    BigInt inactive = 1;  // (n-l)_s, built up as s grows
    for (std::size_t s = 0; s < histogram_.size(); ++s) {
        if (s > 0) inactive *= (n_ - l - static_cast<std::int64_t>(s) + 1);
        if (inactive == 0) break;
        if (histogram_[s] != 0) total += histogram_[s] * inactive * tail_factor_[s];
    }
    return total * l;
}

std::vector<std::int64_t> WitnessCurve::argmax() const {
    std::vector<std::int64_t> best{0};
    BigInt best_value = numerator(0);
    for (std::int64_t l = 1; l <= n_; ++l) {
        BigInt v = numerator(l);
        if (v > best_value) {
            best_value = std::move(v);
            best.assign(1, l);
        } else if (v == best_value) {
            best.push_back(l);
        }
    }
    return best;
}

std::vector<std::int64_t> ktree_histogram(int k, std::int64_t n) {
    if (k < 1 || n < k) throw ParameterError("k-tree needs n >= k >= 1");
    std::vector<std::int64_t> histogram(static_cast<std::size_t>(k) + 1, 1);
    histogram[static_cast<std::size_t>(k)] = n - k;
    return histogram;
}

Rational blind_expectation_ktree(int k, std::int64_t n, std::int64_t l) {
    if (l < 0 || l > n) throw ParameterError("blind_expectation_ktree needs 0 <= l <= n");
    return WitnessCurve(ktree_histogram(k, n), n).value(l);
}

Rational blind_expectation_chordal(const Graph& g, std::int64_t l) {
    auto ordering = clique_ordering(g);
    if (!ordering) throw ParameterError("graph is not chordal; no exact blind expectation");
    return WitnessCurve(back_size_histogram(*ordering), g.n()).value(l);
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    if (g.n() > 64) throw ResourceError("bitmask representation needs n <= 64");
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v = 0; v < g.n(); ++v) {
        for (Vertex u : g.neighbors(v)) masks[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return masks;
}

std::int64_t mask_components(std::span<const std::uint64_t> adj, std::uint64_t mask) {
    std::int64_t components = 0;
    std::uint64_t remaining = mask;
    while (remaining) {
        std::uint64_t comp = remaining & (~remaining + 1);
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t reach = 0;
            for (std::uint64_t f = frontier; f; f &= f - 1) reach |= adj[static_cast<std::size_t>(std::countr_zero(f))];
            frontier = reach & remaining & ~comp;
            comp |= frontier;
        }
        remaining &= ~comp;
        ++components;
    }
    return components;
}

Rational brute_force_blind(const Graph& g, std::int64_t l) {
    const std::int64_t n = g.n();
    if (l < 0 || l > n) throw ParameterError("brute_force_blind needs 0 <= l <= n");
    const BigInt subsets = binomial(n, l);
    if (subsets > 100'000'000) throw ResourceError("brute_force_blind: C(" + std::to_string(n) + "," + std::to_string(l) + ") exceeds 1e8");
    if (l == 0) return Rational(0);

    std::vector<std::int64_t> pick(static_cast<std::size_t>(l));
    std::iota(pick.begin(), pick.end(), 0);
    std::uint64_t total = 0;
    const bool use_masks = n <= 64;
    const auto adj = use_masks ? adjacency_masks(g) : std::vector<std::uint64_t>{};
    std::vector<char> members(static_cast<std::size_t>(n), 0);
    while (true) {
        if (use_masks) {
            std::uint64_t mask = 0;
            for (auto v : pick) mask |= std::uint64_t{1} << v;
            total += static_cast<std::uint64_t>(mask_components(adj, mask));
        } else {
            std::fill(members.begin(), members.end(), 0);
            for (auto v : pick) members[static_cast<std::size_t>(v)] = 1;
            total += static_cast<std::uint64_t>(count_components(g, members));
        }
        // Next combination in lexicographic order.
        std::int64_t i = l - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - l + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (std::int64_t j = i + 1; j < l; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return Rational(BigInt(total), subsets);
}

ValueTable solve_dp(const Graph& g, DpOptions options) {
    const Vertex n = g.n();
    if (n > kDpVertexCap) throw ResourceError("solve_dp: n = " + std::to_string(n) + " exceeds the cap of " + std::to_string(kDpVertexCap));
    if (options.exact && n > kDpExactCap) {
        throw ResourceError("solve_dp: exact mode needs n <= " + std::to_string(kDpExactCap));
    }
    const auto adj = adjacency_masks(g);
    const std::uint64_t states = std::uint64_t{1} << n;
    const std::uint64_t full = states - 1;

    ValueTable table;
    table.n = n;
    table.value.assign(states, 0.0);
    table.stop_bits.assign((states + 63) / 64, 0);
    if (options.exact) table.exact.assign(states, Rational(0));

    // Ties (CC equal to the continuation mean) stop. In double mode "equal" means within 1e-9.
    constexpr double tie_tolerance = 1e-9;
    for (std::uint64_t s = states; s-- > 0;) {
        const auto cc = mask_components(adj, s);
        bool stop = true;
        if (s == full) {
            table.value[s] = static_cast<double>(cc);
            if (options.exact) table.exact[s] = cc;
        } else {
            const auto remaining = static_cast<std::uint64_t>(n - std::popcount(s));
            double sum = 0.0;
            Rational exact_sum = 0;
            for (std::uint64_t free = full & ~s; free; free &= free - 1) {
                const std::uint64_t next = s | (free & (~free + 1));
                sum += table.value[next];
                if (options.exact) exact_sum += table.exact[next];
            }
            const double mean = sum / static_cast<double>(remaining);
            if (options.exact) {
                Rational exact_mean = exact_sum / remaining;
                stop = Rational(cc) >= exact_mean;
                table.exact[s] = stop ? Rational(cc) : exact_mean;
                table.value[s] = to_double(table.exact[s]);
            } else {
                stop = static_cast<double>(cc) >= mean - tie_tolerance * std::max(1.0, mean);
                table.value[s] = std::max(static_cast<double>(cc), mean);
            }
        }
        if (stop) table.stop_bits[s >> 6] |= std::uint64_t{1} << (s & 63);
    }
    return table;
}

void write_value_table(std::ostream& out, const ValueTable& table) {
    const auto old_precision = out.precision(17);
    for (std::uint64_t s = 0; s < table.value.size(); ++s) {
        out << s << ' ';
        if (table.has_exact()) {
            out << to_string(table.exact[s]);
        } else {
            out << table.value[s];
        }
        out << ' ' << (table.stop(s) ? 1 : 0) << '\n';
    }
    out.precision(old_precision);
}

Rational brute_force_strategy_value(const Graph& g, const ConstructionSequence* seq, const StrategySpec& spec) {
    const Vertex n = g.n();
    if (n > kPermutationCap) {
        throw ResourceError("brute_force_strategy_value: n = " + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(kPermutationCap));
    }
    std::vector<Vertex> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::int64_t total = 0;
    std::int64_t count = 0;
    do {
        total += run_strategy(g, seq, spec, sigma).score;
        ++count;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return make_rational(total, count);
}

namespace {

// Expected number of new components opened when `take` of the path vertices are
// added uniformly at random after the center. Counts subsets position by position along the path
// (ordered outward from the center): a chosen vertex opens a new component unless
// its predecessor (the center, for the first one) is active.
Rational center_branch_expectation(const std::vector<Vertex>& path, std::int64_t take) {
    const auto len = static_cast<std::int64_t>(path.size());
    struct Cell {
        BigInt count;
        BigInt opened;  // total components opened, summed over the counted subsets
    };
    // cells[j][last]: j chosen so far, last = whether the previous position is active.
    std::vector<std::array<Cell, 2>> cells(static_cast<std::size_t>(take) + 1);
    cells[0][1].count = 1;
    for (std::int64_t i = 0; i < len; ++i) {
        std::vector<std::array<Cell, 2>> next(static_cast<std::size_t>(take) + 1);
        const std::int64_t hi = std::min(i, take);
        for (std::int64_t j = 0; j <= hi; ++j) {
            for (int last = 0; last < 2; ++last) {
                const Cell& c = cells[static_cast<std::size_t>(j)][static_cast<std::size_t>(last)];
                if (c.count == 0) continue;
                Cell& skip = next[static_cast<std::size_t>(j)][0];
                skip.count += c.count;
                skip.opened += c.opened;
                if (j < take) {
                    Cell& keep = next[static_cast<std::size_t>(j + 1)][1];
                    keep.count += c.count;
                    keep.opened += c.opened;
                    if (last == 0) keep.opened += c.count;
                }
            }
        }
        cells = std::move(next);
    }
    const Cell& a = cells[static_cast<std::size_t>(take)][0];
    const Cell& b = cells[static_cast<std::size_t>(take)][1];
    const BigInt subsets = a.count + b.count;
    return Rational(a.opened + b.opened, subsets);
}

}  // namespace

ContinuationExample continuation_example(std::int64_t n) {
    if (n < 3 || n % 2 == 0) throw ParameterError("continuation_example needs odd n >= 3");
    ContinuationExample out;
    out.n = n;
    out.displayed = Rational(n - 1, n) + Rational(1, n) * (Rational(-(n + 1)) + Rational(n - 1, 4));

    FamilyParams params;
    params.n = n;
    const Instance inst = gen_named_family(Family::star_plus_path, params);
    const Vertex center = inst.marks.at("center").front();
    ActivationState start(inst.graph, nullptr, ActivationOptions{.track_neighborhoods = false, .track_witnesses = false});
    for (Vertex leaf : inst.marks.at("leaves")) start.activate(leaf);

    // Path vertices ordered outward from the center.
    std::vector<Vertex> path;
    for (Vertex prev = center;;) {
        Vertex step = -1;
        for (Vertex w : inst.graph.neighbors(prev)) {
            if (!start.is_active(w) && w != center && std::find(path.begin(), path.end(), w) == path.end()) {
                step = w;
                break;
            }
        }
        if (step < 0) break;
        path.push_back(step);
        prev = step;
    }

    const std::int64_t take = (n - 1) / 2;
    Rational total = 0;
    std::int64_t candidates = 0;
    for (Vertex u = 0; u < inst.graph.n(); ++u) {
        if (start.is_active(u)) continue;
        ++candidates;
        ActivationState next = start;
        total += next.activate(u).cc;
        if (u == center) total += center_branch_expectation(path, take);
    }
    out.strategy_expected = total / candidates;
    out.strategy_gain = out.strategy_expected - Rational(start.cc());
    return out;
}

}  // namespace ccstop
