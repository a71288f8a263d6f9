#pragma once

// graph6 encoding as defined in McKay's formats.txt: N(n) followed by the
// upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ... packed six bits per byte,
// each byte offset by 63. Graphs here have at most 64 vertices, so only the
// one-byte and four-byte forms of N(n) occur.

#include <string>
#include <string_view>

#include "pentaflag/graph.hpp"

namespace pentaflag::graph6 {

std::string encode(const graph::Graph& g);
std::string encode(const graph::CanonGraph& g);

/// Accepts an optional ">>graph6<<" header and surrounding whitespace.
/// Throws std::invalid_argument on malformed input or more than 64
/// vertices.
graph::Graph decode(std::string_view text);

}  // namespace pentaflag::graph6
