#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "tubular/graph.hpp"

namespace tubular {

struct RandomGraphOptions {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 6;
  std::size_t max_loops = 3;
  /// Inclusion entries are drawn from [-entry_bound, entry_bound].
  std::int64_t entry_bound = 3;
  /// Allow non-primitive inclusion vectors.
  bool allow_non_primitive = true;
  /// Build the graph around a random character so that it is free-by-Z.
  bool force_fbyc = false;
  /// Force every loop to be a self loop at a random vertex.
  bool self_loops_only = false;
  /// Exact number of loop edges instead of a random count up to max_loops.
  std::optional<std::size_t> loops;
};

/// A random tree (vertices v0, v1, ...) plus loop edges. Every tree edge
/// joins a new vertex to an earlier one.
TubularGraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& opt);

}  // namespace tubular
