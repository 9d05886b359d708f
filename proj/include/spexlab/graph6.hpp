#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spexlab/graph.hpp"

namespace spexlab {

std::string encode_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" header and trailing whitespace.
Graph decode_graph6(std::string_view text);
/// One graph per nonempty line; '#' starts a comment line.
std::vector<Graph> decode_graph6_lines(std::string_view text);

}  // namespace spexlab
