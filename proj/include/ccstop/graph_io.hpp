#pragma once

#include <filesystem>
#include <iosfwd>
#include <variant>

#include "ccstop/construction.hpp"
#include "ccstop/graph.hpp"

namespace ccstop {

// Graph text format:
//   n <count>
//   e <u> <v>        one line per edge, 0-based ids
// Construction sequence text format:
//   k <k>
//   v <id> m <id>*   one line per vertex, in construction order
// Tokens are whitespace separated, lines end in LF, and anything beyond the
// expected fields is rejected with a ParseError carrying line and field.

void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);

void write_sequence(std::ostream& out, const ConstructionSequence& seq);
ConstructionSequence read_sequence(std::istream& in);

// Dispatches on the first keyword ("n" or "k").
std::variant<Graph, ConstructionSequence> read_any(std::istream& in);

void write_graph_file(const std::filesystem::path& path, const Graph& g);
void write_sequence_file(const std::filesystem::path& path, const ConstructionSequence& seq);
std::variant<Graph, ConstructionSequence> read_any_file(const std::filesystem::path& path);

}  // namespace ccstop
