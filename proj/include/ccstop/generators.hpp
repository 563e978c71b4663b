#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccstop/construction.hpp"
#include "ccstop/graph.hpp"
#include "ccstop/rational.hpp"

namespace ccstop {

// Random k-tree on vertices 0..n-1 (vertex i is the i-th entry). After the initial
// K_k, each new vertex attaches to a k-clique drawn uniformly from all k-cliques of
// the current k-tree: the initial K_k plus, for every placed vertex v, the k subsets
// of {v} u M_v that contain v. For k = 1 this is the uniform random recursive tree.
ConstructionSequence gen_random_ktree(int k, Vertex n, std::uint64_t seed);

// Random maximal k-degenerate sequence: each non-initial vertex attaches to a
// uniformly random k-subset of the earlier vertices (back-neighborhoods need not be cliques).
ConstructionSequence gen_random_degenerate(int k, Vertex n, std::uint64_t seed);

enum class Family { path, star, k_star, star_plus_path, two_star_plus_star, random_tree, grid };

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

// Parameters understood by gen_named_family; each family reads the subset it needs.
//   path(n), star(n)                     n = total vertex count (star: center 0)
//   k_star(k, n)                         n = total vertex count
//   star_plus_path(n)                    n+1 leaves, a center, and a path of n-1 vertices: 2n+1 vertices
//   two_star_plus_star(n, ratio, attach) 2-star on ceil(ratio*n) vertices joined by one edge from its
//                                        vertex `attach` (default 2, non-initial) to the center of a star
//                                        on the remaining vertices
//   random_tree(n, seed)
//   grid(d, side)                        side^d vertices
struct FamilyParams {
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> k;
    std::optional<std::int64_t> d;
    std::optional<std::int64_t> side;
    std::optional<std::uint64_t> seed;
    std::optional<Rational> ratio;
    std::optional<Vertex> attach;
};

// A playable instance: the graph, an optional certifying construction sequence,
// and named vertex sets (e.g. "initial_clique") that strategies may refer to.
struct Instance {
    std::string description;
    Graph graph;
    std::optional<ConstructionSequence> sequence;
    std::map<std::string, std::vector<Vertex>> marks;
};

Instance gen_named_family(Family family, const FamilyParams& params);

// Wraps a construction sequence as an instance; marks its initial clique.
Instance instance_from_sequence(ConstructionSequence seq, std::string description);

}  // namespace ccstop
