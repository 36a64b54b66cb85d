#include "tubular/graph.hpp"

#include <algorithm>
#include <sstream>

#include "tubular/error.hpp"

namespace tubular {

std::optional<std::size_t> TubularGraph::find_vertex(const std::string& name) const {
  auto it = std::find(vertices.begin(), vertices.end(), name);
  if (it == vertices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::optional<std::size_t> TubularGraph::find_edge(const std::string& name) const {
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (edges[e].name == name) return e;
  return std::nullopt;
}

std::vector<EdgeEnd> incident_ends(const TubularGraph& g, std::size_t v) {
  std::vector<EdgeEnd> ends;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (g.edges[e].src == v) ends.push_back({e, true});
    if (g.edges[e].dst == v) ends.push_back({e, false});
  }
  return ends;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Disconnected: return "Disconnected";
    case ViolationKind::ZeroInclusion: return "ZeroInclusion";
    case ViolationKind::DanglingEndpoint: return "DanglingEndpoint";
    case ViolationKind::EmptyGraph: return "EmptyGraph";
  }
  return "Unknown";
}

bool is_connected(const TubularGraph& g) {
  if (g.vertices.empty()) return false;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (const Edge& e : g.edges) {
      if (e.src >= g.vertex_count() || e.dst >= g.vertex_count()) continue;
      for (auto [a, b] : {std::pair{e.src, e.dst}, std::pair{e.dst, e.src}}) {
        if (a == v && !seen[b]) {
          seen[b] = true;
          stack.push_back(b);
        }
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

std::vector<Violation> validate(const TubularGraph& g) {
  std::vector<Violation> out;
  if (g.vertices.empty()) {
    out.push_back({ViolationKind::EmptyGraph, "graph has no vertices"});
    return out;
  }
  for (const Edge& e : g.edges) {
    if (e.src >= g.vertex_count() || e.dst >= g.vertex_count())
      out.push_back({ViolationKind::DanglingEndpoint, "edge " + e.name + " has an endpoint outside the vertex list"});
    if (e.inc_src.is_zero())
      out.push_back({ViolationKind::ZeroInclusion, "edge " + e.name + " has zero source inclusion"});
    if (e.inc_dst.is_zero())
      out.push_back({ViolationKind::ZeroInclusion, "edge " + e.name + " has zero target inclusion"});
  }
  if (!is_connected(g)) out.push_back({ViolationKind::Disconnected, "underlying graph is not connected"});
  return out;
}

void require_valid(const TubularGraph& g) {
  auto violations = validate(g);
  if (violations.empty()) return;
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].detail;
  }
  throw Error(ErrorCode::InvalidGraph, os.str());
}

std::vector<std::size_t> spanning_tree(const TubularGraph& g) {
  std::vector<std::size_t> tree;
  if (g.vertices.empty()) return tree;
  std::vector<bool> reached(g.vertex_count(), false);
  reached[0] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      const Edge& edge = g.edges[e];
      if (reached[edge.src] != reached[edge.dst]) {
        reached[edge.src] = reached[edge.dst] = true;
        tree.push_back(e);
        grew = true;
      }
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

std::vector<std::size_t> non_tree_edges(const TubularGraph& g) {
  auto tree = spanning_tree(g);
  std::vector<std::size_t> rest;
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (!std::binary_search(tree.begin(), tree.end(), e)) rest.push_back(e);
  return rest;
}

std::size_t betti(const TubularGraph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "Betti number needs a connected graph");
  return g.edge_count() - g.vertex_count() + 1;
}

Word vertex_word(std::size_t v, const LatticeVec& w) {
  return reduce_word({{2 * v, w.p}, {2 * v + 1, w.q}});
}

Presentation presentation(const TubularGraph& g) {
  require_valid(g);
  Presentation pres;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    pres.generators.push_back({"x_" + g.vertices[v], GeneratorKind::VertexX, v});
    pres.generators.push_back({"y_" + g.vertices[v], GeneratorKind::VertexY, v});
  }
  pres.stable_letter.assign(g.edge_count(), std::nullopt);
  for (std::size_t e : non_tree_edges(g)) {
    pres.stable_letter[e] = pres.generators.size();
    pres.generators.push_back({"t_" + g.edges[e].name, GeneratorKind::Stable, e});
  }

  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    pres.relators.push_back({{pres.x_of(v), 1}, {pres.y_of(v), 1}, {pres.x_of(v), -1}, {pres.y_of(v), -1}});
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (pres.stable_letter[e]) continue;
    const Edge& edge = g.edges[e];
    pres.relators.push_back(multiply(vertex_word(edge.src, edge.inc_src), inverse(vertex_word(edge.dst, edge.inc_dst))));
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!pres.stable_letter[e]) continue;
    const Edge& edge = g.edges[e];
    const std::size_t t = *pres.stable_letter[e];
    Word r{{t, 1}};
    for (const Letter& l : vertex_word(edge.src, edge.inc_src)) r.push_back(l);
    r.push_back({t, -1});
    for (const Letter& l : inverse(vertex_word(edge.dst, edge.inc_dst))) r.push_back(l);
    pres.relators.push_back(reduce_word(r));
  }
  return pres;
}

}  // namespace tubular
