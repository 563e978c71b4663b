#include "ccstop/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "ccstop/errors.hpp"
#include "ccstop/rng.hpp"

namespace ccstop {

namespace {

std::vector<Vertex> iota_vertices(Vertex from, Vertex to) {
    std::vector<Vertex> out(static_cast<std::size_t>(std::max(0, to - from)));
    std::iota(out.begin(), out.end(), from);
    return out;
}

std::vector<ConstructionEntry> initial_clique_entries(int k, Vertex n) {
    std::vector<ConstructionEntry> order;
    for (Vertex i = 0; i < std::min<Vertex>(k, n); ++i) order.push_back({i, iota_vertices(0, i)});
    return order;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw ParameterError(message);
}

std::int64_t need(const std::optional<std::int64_t>& value, const char* name, std::string_view family) {
    if (!value) throw ParameterError(std::string(family) + " requires parameter '" + name + "'");
    return *value;
}

}  // namespace

ConstructionSequence gen_random_ktree(int k, Vertex n, std::uint64_t seed) {
    require(k >= 1, "k-tree width must be >= 1");
    require(n >= k, "k-tree needs n >= k (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
    Rng rng(seed, 0);
    auto order = initial_clique_entries(k, n);
    // Flat storage of all k-cliques, k vertices each.
    std::vector<Vertex> cliques = iota_vertices(0, k);
    cliques.reserve(static_cast<std::size_t>(k) * (1 + static_cast<std::size_t>(k) * static_cast<std::size_t>(n - k)));
    const auto width = static_cast<std::size_t>(k);
    for (Vertex v = k; v < n; ++v) {
        const std::size_t count = cliques.size() / width;
        const std::size_t pick = static_cast<std::size_t>(rng.below(count));
        std::vector<Vertex> back(cliques.begin() + static_cast<std::ptrdiff_t>(pick * width),
                                 cliques.begin() + static_cast<std::ptrdiff_t>((pick + 1) * width));
        for (std::size_t drop = 0; drop < width; ++drop) {
            for (std::size_t j = 0; j < width; ++j) cliques.push_back(j == drop ? v : back[j]);
        }
        order.push_back({v, std::move(back)});
    }
    return ConstructionSequence(k, std::move(order));
}

ConstructionSequence gen_random_degenerate(int k, Vertex n, std::uint64_t seed) {
    require(k >= 1, "degeneracy k must be >= 1");
    require(n >= k, "maximal k-degenerate graph needs n >= k");
    Rng rng(seed, 0);
    auto order = initial_clique_entries(k, n);
    for (Vertex v = k; v < n; ++v) {
        // k distinct earlier vertices by rejection; k is small next to v.
        std::vector<Vertex> back;
        while (back.size() < static_cast<std::size_t>(k)) {
            const auto w = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v)));
            if (std::find(back.begin(), back.end(), w) == back.end()) back.push_back(w);
        }
        order.push_back({v, std::move(back)});
    }
    return ConstructionSequence(k, std::move(order));
}

Family parse_family(std::string_view name) {
    static constexpr std::array<Family, 7> all{Family::path,           Family::star,        Family::k_star,
                                               Family::star_plus_path, Family::two_star_plus_star,
                                               Family::random_tree,    Family::grid};
    for (Family f : all) {
        if (family_name(f) == name) return f;
    }
    throw ParameterError("unknown graph family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::star: return "star";
        case Family::k_star: return "k_star";
        case Family::star_plus_path: return "star_plus_path";
        case Family::two_star_plus_star: return "two_star_plus_star";
        case Family::random_tree: return "random_tree";
        case Family::grid: return "grid";
    }
    return "?";
}

Instance instance_from_sequence(ConstructionSequence seq, std::string description) {
    Instance inst;
    inst.description = std::move(description);
    inst.graph = graph_from_construction(seq);
    inst.marks["initial_clique"] = seq.initial_clique();
    inst.sequence = std::move(seq);
    return inst;
}

Instance gen_named_family(Family family, const FamilyParams& p) {
    const std::string_view name = family_name(family);
    switch (family) {
        case Family::path: {
            const auto n = need(p.n, "n", name);
            require(n >= 1, "path needs n >= 1");
            std::vector<ConstructionEntry> order{{0, {}}};
            for (Vertex v = 1; v < n; ++v) order.push_back({v, {v - 1}});
            return instance_from_sequence(ConstructionSequence(1, std::move(order)), "path(n=" + std::to_string(n) + ")");
        }
        case Family::star: {
            const auto n = need(p.n, "n", name);
            require(n >= 1, "star needs n >= 1");
            std::vector<ConstructionEntry> order{{0, {}}};
            for (Vertex v = 1; v < n; ++v) order.push_back({v, {0}});
            auto inst = instance_from_sequence(ConstructionSequence(1, std::move(order)), "star(n=" + std::to_string(n) + ")");
            inst.marks["center"] = {0};
            return inst;
        }
        case Family::k_star: {
            const auto n = need(p.n, "n", name);
            const auto k = need(p.k, "k", name);
            require(k >= 1 && n >= k, "k_star needs n >= k >= 1");
            auto order = initial_clique_entries(static_cast<int>(k), static_cast<Vertex>(n));
            for (Vertex v = static_cast<Vertex>(k); v < n; ++v) order.push_back({v, iota_vertices(0, static_cast<Vertex>(k))});
            return instance_from_sequence(ConstructionSequence(static_cast<int>(k), std::move(order)),
                                          "k_star(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")");
        }
        case Family::star_plus_path: {
            const auto n = need(p.n, "n", name);
            require(n >= 1, "star_plus_path needs n >= 1");
            const auto size = static_cast<Vertex>(2 * n + 1);
            const auto first_path = static_cast<Vertex>(n + 2);
            std::vector<ConstructionEntry> order{{0, {}}};
            for (Vertex v = 1; v < first_path; ++v) order.push_back({v, {0}});
            for (Vertex v = first_path; v < size; ++v) order.push_back({v, {v == first_path ? 0 : v - 1}});
            auto inst = instance_from_sequence(ConstructionSequence(1, std::move(order)),
                                               "star_plus_path(n=" + std::to_string(n) + ")");
            inst.marks["center"] = {0};
            inst.marks["leaves"] = iota_vertices(1, first_path);
            inst.marks["path"] = iota_vertices(first_path, size);
            return inst;
        }
        case Family::two_star_plus_star: {
            const auto n = need(p.n, "n", name);
            const Rational ratio = p.ratio.value_or(Rational(999, 1000));
            require(ratio > 0 && ratio < 1, "two_star_plus_star ratio must lie in (0,1)");
            const auto n2 = static_cast<Vertex>(ceil_mul(ratio, n));
            require(n2 >= 3 && n2 < n, "two_star_plus_star needs a 2-star of >= 3 vertices and a nonempty star");
            const Vertex attach = p.attach.value_or(2);
            require(attach >= 2 && attach < n2, "attach must be a non-initial 2-star vertex in [2, n2)");
            const Vertex center = n2;
            std::vector<Edge> edges{{0, 1}};
            for (Vertex v = 2; v < n2; ++v) {
                edges.push_back({v, 0});
                edges.push_back({v, 1});
            }
            for (Vertex v = center + 1; v < n; ++v) edges.push_back({center, v});
            edges.push_back({attach, center});
            Instance inst;
            inst.description = "two_star_plus_star(n=" + std::to_string(n) + ",ratio=" + to_string(ratio) +
                               ",attach=" + std::to_string(attach) + ")";
            inst.graph = Graph::from_edges(static_cast<Vertex>(n), edges);
            inst.marks["initial_clique"] = {0, 1};
            inst.marks["star_center"] = {center};
            inst.marks["bridge"] = {attach, center};
            return inst;
        }
        case Family::random_tree: {
            const auto n = need(p.n, "n", name);
            require(n >= 1, "random_tree needs n >= 1");
            const std::uint64_t seed = p.seed.value_or(0);
            return instance_from_sequence(gen_random_ktree(1, static_cast<Vertex>(n), seed),
                                          "random_tree(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")");
        }
        case Family::grid: {
            const auto d = need(p.d, "d", name);
            const auto side = need(p.side, "side", name);
            require(d >= 1 && side >= 1, "grid needs d >= 1 and side >= 1");
            std::int64_t n = 1;
            for (std::int64_t i = 0; i < d; ++i) {
                n *= side;
                require(n <= (std::int64_t{1} << 30), "grid too large");
            }
            std::vector<Edge> edges;
            for (std::int64_t v = 0; v < n; ++v) {
                std::int64_t stride = 1;
                for (std::int64_t axis = 0; axis < d; ++axis) {
                    if ((v / stride) % side + 1 < side) edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(v + stride)});
                    stride *= side;
                }
            }
            Instance inst;
            inst.description = "grid(d=" + std::to_string(d) + ",side=" + std::to_string(side) + ")";
            inst.graph = Graph::from_edges(static_cast<Vertex>(n), edges);
            return inst;
        }
    }
    throw ParameterError("unhandled family");
}

}  // namespace ccstop
