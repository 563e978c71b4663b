#pragma once

#include <numeric>
#include <vector>

#include "ccstop/construction.hpp"
#include "ccstop/generators.hpp"
#include "ccstop/graph.hpp"
#include "ccstop/rng.hpp"

namespace ccstop::testing {

inline Graph path_graph(Vertex n) { return gen_named_family(Family::path, {.n = n}).graph; }

inline ConstructionSequence small_2tree() {
    return ConstructionSequence(2, {{0, {}}, {1, {0}}, {2, {0, 1}}, {3, {0, 2}}});
}

inline std::vector<Vertex> random_permutation(Vertex n, Rng& rng) {
    std::vector<Vertex> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    rng.partial_shuffle(std::span<Vertex>(sigma), sigma.size());
    return sigma;
}

inline Graph random_tree(Vertex n, std::uint64_t seed) {
    return gen_named_family(Family::random_tree, {.n = n, .seed = seed}).graph;
}

}  // namespace ccstop::testing
