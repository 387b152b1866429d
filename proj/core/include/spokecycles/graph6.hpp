#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "spokecycles/graph.hpp"

namespace spokecycles {

/// Standard graph6 encoding (no ">>graph6<<" header). Handles the 1-byte
/// and 4-byte vertex-count forms, i.e. up to 258047 vertices.
std::string graph6_encode(const SimpleGraph& g);

/// Throws GraphError on an empty string, characters outside [63, 126],
/// a truncated or overlong body, or nonzero padding bits. An optional
/// ">>graph6<<" header is accepted.
SimpleGraph graph6_decode(std::string_view text);

/// One graph per non-empty line; trailing '\r' is ignored.
std::vector<SimpleGraph> read_graph6_stream(std::istream& in);

}  // namespace spokecycles
