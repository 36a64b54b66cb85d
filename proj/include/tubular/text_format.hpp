#pragma once

#include <string>

#include "tubular/graph.hpp"

namespace tubular {

/// Line-oriented graph description:
///
///   # comment
///   vertex v
///   edge t: v(1,0) -> v(0,1)
///
/// Throws ParseError with the offending line number. Names may contain
/// letters, digits, '_', '.', and '-'.
TubularGraph parse_graph(const std::string& text);

/// Inverse of parse_graph.
std::string serialize_graph(const TubularGraph& g);

}  // namespace tubular
