#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "kended/graph.hpp"

namespace kended {

inline constexpr int kGraph6MaxOrder = 62;

/// Decodes one short-form graph6 string (no header, no newline).
/// Throws ParseError carrying the offending byte offset.
Graph parse_graph6(std::string_view text);

/// Canonical short-form encoding. Throws SizeError when order() > 62.
std::string write_graph6(const Graph& g);

/// One graph per line; blank lines are skipped and a trailing '\r' is
/// tolerated. Errors are rethrown as ParseError with "source:line" context.
std::vector<Graph> read_graph6_lines(std::istream& in, const std::string& source_name);

std::vector<Graph> read_graph6_file(const std::string& path);

} // namespace kended
