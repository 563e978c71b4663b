#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ccstop/graph.hpp"
#include "ccstop/rational.hpp"

namespace ccstop {

// Backward-induction solution of the full-information game on a graph with
// n <= 24 vertices. States are active sets encoded as bitmasks.
//   V(full) = CC(full)
//   V(S)    = max(CC(S), mean over v not in S of V(S + v))
// Values are doubles; `exact` is filled with rationals when the table was solved
// exactly (n <= 12) and then drives the stop flags.
struct ValueTable {
    Vertex n = 0;
    std::vector<double> value;
    std::vector<Rational> exact;
    std::vector<std::uint64_t> stop_bits;

    bool has_exact() const noexcept { return !exact.empty(); }
    bool stop(std::uint64_t mask) const { return (stop_bits[mask >> 6] >> (mask & 63)) & 1; }
    double root_value() const { return value.front(); }
};

// Text dump: one line "subset_mask value stop_flag" per state, value printed with
// 17 significant digits (or as p/q when exact).
void write_value_table(std::ostream& out, const ValueTable& table);

}  // namespace ccstop
