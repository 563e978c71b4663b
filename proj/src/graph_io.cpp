#include "ccstop/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ccstop/errors.hpp"

namespace ccstop {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next line split into tokens; false at end of input.
    bool next(Line& line) {
        if (!std::getline(in_, buffer_)) return false;
        ++number_;
        if (buffer_.find('\r') != std::string::npos) throw ParseError(number_, 0, "CR character; LF line endings required");
        line.number = number_;
        line.tokens.clear();
        std::string_view rest(buffer_);
        while (true) {
            auto start = rest.find_first_not_of(" \t");
            if (start == std::string_view::npos) break;
            rest.remove_prefix(start);
            auto end = rest.find_first_of(" \t");
            line.tokens.push_back(rest.substr(0, end));
            if (end == std::string_view::npos) break;
            rest.remove_prefix(end);
        }
        if (line.tokens.empty()) throw ParseError(number_, 0, "blank line");
        return true;
    }

private:
    std::istream& in_;
    std::string buffer_;
    std::size_t number_ = 0;
};

std::int64_t parse_int(const Line& line, std::size_t field) {
    if (field >= line.tokens.size()) throw ParseError(line.number, field, "missing integer");
    std::string_view tok = line.tokens[field];
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(line.number, field, "expected integer, got '" + std::string(tok) + "'");
    }
    return value;
}

void expect_keyword(const Line& line, std::size_t field, std::string_view keyword) {
    if (field >= line.tokens.size() || line.tokens[field] != keyword) {
        throw ParseError(line.number, field, "expected '" + std::string(keyword) + "'");
    }
}

void expect_width(const Line& line, std::size_t width) {
    if (line.tokens.size() != width) throw ParseError(line.number, width, "trailing garbage");
}

Graph parse_graph_body(LineReader& reader, const Line& header) {
    expect_keyword(header, 0, "n");
    expect_width(header, 2);
    const std::int64_t n = parse_int(header, 1);
    if (n < 0 || n > std::int64_t{1} << 30) throw ParseError(header.number, 1, "vertex count out of range");
    std::vector<Edge> edges;
    Line line;
    while (reader.next(line)) {
        expect_keyword(line, 0, "e");
        expect_width(line, 3);
        edges.push_back({static_cast<Vertex>(parse_int(line, 1)), static_cast<Vertex>(parse_int(line, 2))});
        for (std::size_t f : {1u, 2u}) {
            auto id = parse_int(line, f);
            if (id < 0 || id >= n) throw ParseError(line.number, f, "vertex id out of range");
        }
    }
    return Graph::from_edges(static_cast<Vertex>(n), edges);
}

ConstructionSequence parse_sequence_body(LineReader& reader, const Line& header) {
    expect_keyword(header, 0, "k");
    expect_width(header, 2);
    const std::int64_t k = parse_int(header, 1);
    if (k < 1 || k > 1 << 20) throw ParseError(header.number, 1, "width k out of range");
    std::vector<ConstructionEntry> order;
    Line line;
    while (reader.next(line)) {
        expect_keyword(line, 0, "v");
        expect_keyword(line, 2, "m");
        ConstructionEntry entry{static_cast<Vertex>(parse_int(line, 1)), {}};
        for (std::size_t f = 3; f < line.tokens.size(); ++f) entry.back.push_back(static_cast<Vertex>(parse_int(line, f)));
        order.push_back(std::move(entry));
    }
    return ConstructionSequence(static_cast<int>(k), std::move(order));
}

}  // namespace

void write_graph(std::ostream& out, const Graph& g) {
    out << "n " << g.n() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

void write_sequence(std::ostream& out, const ConstructionSequence& seq) {
    out << "k " << seq.k() << '\n';
    for (const auto& e : seq.entries()) {
        out << "v " << e.v << " m";
        for (Vertex w : e.back) out << ' ' << w;
        out << '\n';
    }
}

Graph read_graph(std::istream& in) {
    LineReader reader(in);
    Line header;
    if (!reader.next(header)) throw ParseError(1, 0, "empty input");
    return parse_graph_body(reader, header);
}

ConstructionSequence read_sequence(std::istream& in) {
    LineReader reader(in);
    Line header;
    if (!reader.next(header)) throw ParseError(1, 0, "empty input");
    return parse_sequence_body(reader, header);
}

std::variant<Graph, ConstructionSequence> read_any(std::istream& in) {
    LineReader reader(in);
    Line header;
    if (!reader.next(header)) throw ParseError(1, 0, "empty input");
    if (header.tokens[0] == "k") return parse_sequence_body(reader, header);
    return parse_graph_body(reader, header);
}

void write_graph_file(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    write_graph(out, g);
    if (!out) throw IoError("write failed: " + path.string());
}

void write_sequence_file(const std::filesystem::path& path, const ConstructionSequence& seq) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    write_sequence(out, seq);
    if (!out) throw IoError("write failed: " + path.string());
}

std::variant<Graph, ConstructionSequence> read_any_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return read_any(in);
}

}  // namespace ccstop
