#include "kended/graph6.hpp"

#include <fstream>

#include "kended/errors.hpp"

namespace kended {
namespace {

constexpr int kBias = 63;

std::size_t triangle_bits(int n) {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1 < 0 ? 0 : n - 1) / 2;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw ParseError("empty graph6 string", 0);
    const auto header = static_cast<unsigned char>(text[0]);
    if (header < kBias || header > 126) throw ParseError("byte out of range [63,126]", 0);
    if (header == 126) throw ParseError("long-form graph6 (n > 62) is not supported", 0);
    const int n = header - kBias;

    const std::size_t bits = triangle_bits(n);
    const std::size_t body_bytes = (bits + 5) / 6;
    if (text.size() < 1 + body_bytes) throw ParseError("truncated adjacency data", text.size());
    if (text.size() > 1 + body_bytes) throw ParseError("trailing bytes after graph", 1 + body_bytes);

    for (std::size_t offset = 1; offset < text.size(); ++offset) {
        const auto byte = static_cast<unsigned char>(text[offset]);
        if (byte < kBias || byte > 126) throw ParseError("byte out of range [63,126]", offset);
    }

    Graph g(n);
    std::size_t bit_index = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit_index) {
            const int value = static_cast<unsigned char>(text[1 + bit_index / 6]) - kBias;
            if ((value >> (5 - bit_index % 6)) & 1) g.add_edge(u, v);
        }
    }
    // Padding bits of the last byte must be zero.
    if (bits % 6 != 0) {
        const int value = static_cast<unsigned char>(text.back()) - kBias;
        const int pad = static_cast<int>(6 - bits % 6);
        if (value & ((1 << pad) - 1)) throw ParseError("nonzero padding bits", text.size() - 1);
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder) {
        throw SizeError("graph6 short form supports n <= 62, got " + std::to_string(n));
    }
    std::string out;
    out.push_back(static_cast<char>(n + kBias));
    int value = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            value = (value << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(value + kBias));
                value = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + kBias));
    return out;
}

std::vector<Graph> read_graph6_lines(std::istream& in, const std::string& source_name) {
    std::vector<Graph> graphs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            graphs.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError(source_name + ":" + std::to_string(line_no) + ": " + e.detail(),
                             e.offset());
        }
    }
    if (in.bad()) throw Error("read error on " + source_name);
    return graphs;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open corpus file " + path);
    return read_graph6_lines(in, path);
}

} // namespace kended
