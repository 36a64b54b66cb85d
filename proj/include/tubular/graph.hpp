#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tubular/lattice.hpp"
#include "tubular/word.hpp"

namespace tubular {

struct Edge {
  std::string name;
  std::size_t src = 0;
  std::size_t dst = 0;
  LatticeVec inc_src;
  LatticeVec inc_dst;

  bool is_self_loop() const { return src == dst; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A finite graph of groups with every vertex group Z^2 (fixed basis) and every
/// edge group Z, given by its two inclusion vectors. Declaration order of
/// vertices and edges fixes every deterministic choice downstream.
struct TubularGraph {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t edge_count() const { return edges.size(); }
  std::optional<std::size_t> find_vertex(const std::string& name) const;
  std::optional<std::size_t> find_edge(const std::string& name) const;

  friend bool operator==(const TubularGraph&, const TubularGraph&) = default;
};

/// One end of an edge as seen from the vertex it is attached to.
struct EdgeEnd {
  std::size_t edge;
  bool at_src;
  const LatticeVec& inclusion(const TubularGraph& g) const {
    return at_src ? g.edges[edge].inc_src : g.edges[edge].inc_dst;
  }
};

/// Edge ends attached to vertex v, in edge declaration order (src end first
/// for self loops).
std::vector<EdgeEnd> incident_ends(const TubularGraph& g, std::size_t v);

enum class ViolationKind { Disconnected, ZeroInclusion, DanglingEndpoint, EmptyGraph };

struct Violation {
  ViolationKind kind;
  std::string detail;
};

std::string to_string(ViolationKind kind);

std::vector<Violation> validate(const TubularGraph& g);
/// Throws InvalidGraph listing the violations.
void require_valid(const TubularGraph& g);

bool is_connected(const TubularGraph& g);

/// Edge ids of a spanning tree grown from vertex 0 by repeatedly sweeping the
/// edges in declaration order and taking every edge with exactly one endpoint
/// already reached. Sorted ascending.
std::vector<std::size_t> spanning_tree(const TubularGraph& g);

/// Edges not in spanning_tree(g), ascending.
std::vector<std::size_t> non_tree_edges(const TubularGraph& g);

/// First Betti number of the underlying graph. Throws Disconnected.
std::size_t betti(const TubularGraph& g);

enum class GeneratorKind { VertexX, VertexY, Stable };

struct Generator {
  std::string name;
  GeneratorKind kind;
  std::size_t owner;  // vertex id, or edge id for stable letters
};

/// Deficiency-one presentation read off the graph of groups.
struct Presentation {
  std::vector<Generator> generators;
  std::vector<Word> relators;
  /// stable_letter[e] is the generator index of t_e, or nullopt for tree edges.
  std::vector<std::optional<std::size_t>> stable_letter;

  std::size_t x_of(std::size_t v) const { return 2 * v; }
  std::size_t y_of(std::size_t v) const { return 2 * v + 1; }
  long deficiency() const {
    return static_cast<long>(generators.size()) - static_cast<long>(relators.size());
  }
};

/// x_v^p y_v^q.
Word vertex_word(std::size_t v, const LatticeVec& w);

/// Generators: x_v, y_v per vertex, then t_e per non-tree edge. Relators:
/// commutators [x_v,y_v]; per tree edge w(src) w(dst)^-1; per non-tree edge
/// t_e w(src) t_e^-1 w(dst)^-1.
Presentation presentation(const TubularGraph& g);

}  // namespace tubular
