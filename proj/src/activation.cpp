#include "ccstop/activation.hpp"

#include <algorithm>
#include <string>

#include "ccstop/errors.hpp"

namespace ccstop {

ActivationState::ActivationState(const Graph& g, const ConstructionSequence* seq, ActivationOptions options)
    : graph_(&g), seq_(seq), options_(options), dsu_(static_cast<std::size_t>(g.n())) {
    const auto n = static_cast<std::size_t>(g.n());
    active_.assign(n, 0);
    seen_.assign(n, 0);
    if (options_.track_neighborhoods) {
        adj_comp_count_.assign(n, 0);
        boundary_.resize(n);
    }
    witnesses_ = options_.track_witnesses && seq_ != nullptr;
    if (witnesses_) {
        if (seq_->size() != g.n()) throw UsageError("construction sequence size does not match graph");
        back_active_.assign(n, 0);
        dependents_offset_.assign(n + 1, 0);
        for (const auto& e : seq_->entries()) {
            for (Vertex u : e.back) ++dependents_offset_[static_cast<std::size_t>(u) + 1];
        }
        for (std::size_t i = 0; i < n; ++i) dependents_offset_[i + 1] += dependents_offset_[i];
        dependents_.resize(dependents_offset_[n]);
        std::vector<std::size_t> fill(dependents_offset_.begin(), dependents_offset_.end() - 1);
        for (const auto& e : seq_->entries()) {
            for (Vertex u : e.back) dependents_[fill[static_cast<std::size_t>(u)]++] = e.v;
        }
    }
}

ActivationDelta ActivationState::activate(Vertex v) {
    if (v < 0 || v >= n()) throw UsageError("vertex " + std::to_string(v) + " out of range");
    const auto vi = static_cast<std::size_t>(v);
    if (active_[vi]) throw UsageError("vertex " + std::to_string(v) + " is already active");

    // Distinct adjacent components, by root. seen_[r] == epoch_ marks r as collected.
    auto& roots = roots_;
    roots.clear();
    ++epoch_;
    for (Vertex u : graph_->neighbors(v)) {
        if (!active_[static_cast<std::size_t>(u)]) continue;
        const Vertex r = dsu_.find(u);
        if (seen_[static_cast<std::size_t>(r)] != epoch_) {
            seen_[static_cast<std::size_t>(r)] = epoch_;
            roots.push_back(r);
        }
    }

    active_[vi] = 1;
    ++t_;
    if (n() <= 64) mask_ |= std::uint64_t{1} << vi;
    const std::int64_t delta = 1 - static_cast<std::int64_t>(roots.size());
    cc_ += delta;

    if (options_.track_neighborhoods) {
        // v leaves every boundary it was on (exactly the adjacent components).
        for (Vertex r : roots) {
            boundary_[static_cast<std::size_t>(r)].erase(v);
            nbr_sum_ -= 1;
        }
        adj_comp_count_[vi] = 0;

        // Largest boundary absorbs the rest.
        Vertex keep = v;
        std::size_t best = 0;
        for (Vertex r : roots) {
            if (boundary_[static_cast<std::size_t>(r)].size() >= best) {
                best = boundary_[static_cast<std::size_t>(r)].size();
                keep = r;
            }
        }
        std::unordered_set<Vertex> merged = std::move(boundary_[static_cast<std::size_t>(keep)]);
        boundary_[static_cast<std::size_t>(keep)] = {};
        for (Vertex r : roots) {
            if (r == keep) continue;
            auto& other = boundary_[static_cast<std::size_t>(r)];
            for (Vertex w : other) {
                if (!merged.insert(w).second) {
                    // w was adjacent to both components; they are now one.
                    --adj_comp_count_[static_cast<std::size_t>(w)];
                    --nbr_sum_;
                }
            }
            other = {};
        }
        for (Vertex w : graph_->neighbors(v)) {
            if (active_[static_cast<std::size_t>(w)]) continue;
            if (merged.insert(w).second) {
                ++adj_comp_count_[static_cast<std::size_t>(w)];
                ++nbr_sum_;
            }
        }
        Vertex root = v;
        for (Vertex r : roots) root = dsu_.unite(root, r);
        boundary_[static_cast<std::size_t>(root)] = std::move(merged);
    } else {
        for (Vertex r : roots) dsu_.unite(v, r);
    }

    if (witnesses_) {
        if (back_active_[vi] == 0) ++wv_;
        for (std::size_t i = dependents_offset_[vi]; i < dependents_offset_[vi + 1]; ++i) {
            const auto d = static_cast<std::size_t>(dependents_[i]);
            if (active_[d] && back_active_[d] == 0) --wv_;
            ++back_active_[d];
        }
    }

    return {delta, cc_, options_.track_neighborhoods ? nbr_sum_ : -1, wv()};
}

std::int64_t ActivationState::nbr_sum() const {
    if (!options_.track_neighborhoods) throw UsageError("neighborhood tracking is disabled for this state");
    return nbr_sum_;
}

std::optional<std::int64_t> ActivationState::wv() const {
    if (!witnesses_) return std::nullopt;
    return wv_;
}

std::int32_t ActivationState::adjacent_components(Vertex w) const {
    if (!options_.track_neighborhoods) throw UsageError("neighborhood tracking is disabled for this state");
    return adj_comp_count_[static_cast<std::size_t>(w)];
}

std::uint64_t ActivationState::active_mask() const {
    if (n() > 64) throw UsageError("active_mask needs n <= 64");
    return mask_;
}

Rational ActivationState::expected_gain() const {
    if (t_ == n()) throw UsageError("expected gain is undefined once every vertex is active");
    const std::int64_t remaining = n() - t_;
    return make_rational(remaining - nbr_sum(), remaining);
}

bool ActivationState::gain_nonnegative() const {
    if (t_ == n()) throw UsageError("expected gain is undefined once every vertex is active");
    return n() - t_ >= nbr_sum();
}

std::int64_t recount_cc(const ActivationState& state) { return count_components(state.graph(), state.active()); }

std::int64_t recount_nbr_sum(const ActivationState& state) {
    const Graph& g = state.graph();
    const auto n = static_cast<std::size_t>(g.n());
    // Label components by BFS.
    std::vector<std::int32_t> label(n, -1);
    std::int32_t next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (!state.is_active(s) || label[static_cast<std::size_t>(s)] >= 0) continue;
        label[static_cast<std::size_t>(s)] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u)) {
                if (state.is_active(w) && label[static_cast<std::size_t>(w)] < 0) {
                    label[static_cast<std::size_t>(w)] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    std::int64_t total = 0;
    std::vector<std::int32_t> seen;
    for (Vertex w = 0; w < g.n(); ++w) {
        if (state.is_active(w)) continue;
        seen.clear();
        for (Vertex u : g.neighbors(w)) {
            if (!state.is_active(u)) continue;
            auto l = label[static_cast<std::size_t>(u)];
            if (std::find(seen.begin(), seen.end(), l) == seen.end()) seen.push_back(l);
        }
        total += static_cast<std::int64_t>(seen.size());
    }
    return total;
}

std::int64_t recount_wv(const ActivationState& state) {
    const ConstructionSequence* seq = state.sequence();
    if (seq == nullptr) throw UsageError("witness recount needs a construction sequence");
    std::int64_t count = 0;
    for (const auto& e : seq->entries()) {
        if (!state.is_active(e.v)) continue;
        bool witness = std::none_of(e.back.begin(), e.back.end(), [&](Vertex w) { return state.is_active(w); });
        count += witness ? 1 : 0;
    }
    return count;
}

void validate_permutation(std::span<const Vertex> sigma, Vertex n) {
    if (sigma.size() != static_cast<std::size_t>(n)) {
        throw ValidationError("permutation has " + std::to_string(sigma.size()) + " entries, expected " + std::to_string(n));
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        const Vertex v = sigma[i];
        if (v < 0 || v >= n) throw ValidationError("permutation entry " + std::to_string(i) + " out of range");
        if (seen[static_cast<std::size_t>(v)]) {
            throw ValidationError("permutation repeats vertex " + std::to_string(v) + " at position " + std::to_string(i));
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

std::vector<TracePoint> run_permutation(const Graph& g, const ConstructionSequence* seq, std::span<const Vertex> sigma) {
    validate_permutation(sigma, g.n());
    ActivationState state(g, seq);
    std::vector<TracePoint> trace;
    trace.reserve(sigma.size() + 1);
    trace.push_back({0, 0, 0, state.wv()});
    for (Vertex v : sigma) {
        auto d = state.activate(v);
        trace.push_back({state.t(), d.cc, d.nbr_sum, d.wv});
    }
    return trace;
}

}  // namespace ccstop
