#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "spanlf/graph.hpp"

namespace spanlf {

/// Decodes a header-less graph6 string. Throws ParseError with a kind that
/// distinguishes header, byte range, truncation, trailing data and order > 64.
Graph from_graph6(std::string_view text);

std::string to_graph6(const Graph& g);

/// Reads a newline-separated graph6 catalog. Blank lines are skipped; a
/// trailing carriage return is tolerated.
std::vector<Graph> read_graph6_catalog(std::istream& in);

}  // namespace spanlf
