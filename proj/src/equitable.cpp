#include "tubular/equitable.hpp"

#include <algorithm>

#include "tubular/error.hpp"

namespace tubular {

Integer intersection_number(const LatticeVec& x, const LatticeVec& s) { return abs(det2(x, s)); }

EquitableReport verify_equitable(const TubularGraph& g, const EquitableSet& set) {
  if (set.families.size() != g.vertex_count())
    throw Error(ErrorCode::MissingVertexFamily, "equitable set has " + std::to_string(set.families.size()) +
                                                    " families for " + std::to_string(g.vertex_count()) + " vertices");
  EquitableReport report;
  report.ok = true;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& fam = set.families[v];
    if (fam.empty()) throw Error(ErrorCode::MissingVertexFamily, "vertex " + g.vertices[v] + " has an empty family");
    Integer index = 0;
    for (std::size_t i = 0; i < fam.size() && index == 0; ++i)
      for (std::size_t j = i + 1; j < fam.size() && index == 0; ++j) index = intersection_number(fam[i], fam[j]);
    report.span_index.push_back(index);
    if (index == 0) report.ok = false;
  }
  for (const Edge& e : g.edges) {
    EdgeBalance b{0, 0};
    for (const LatticeVec& s : set.families[e.src]) b.src_sum += intersection_number(e.inc_src, s);
    for (const LatticeVec& t : set.families[e.dst]) b.dst_sum += intersection_number(e.inc_dst, t);
    if (!b.balanced()) report.ok = false;
    report.edge_sums.push_back(b);
  }
  return report;
}

namespace {

RationalVec kernel_direction(const std::array<Integer, 2>& mn) { return {Rational(mn[1]), Rational(-mn[0])}; }

}  // namespace

EquitableConstruction construct_equitable_detailed(const TubularGraph& g, const CharacterZ& chi) {
  require_valid(g);
  if (chi.vertex.size() != g.vertex_count()) throw Error(ErrorCode::ShapeMismatch, "character has wrong vertex count");
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edges[e];
    Integer a = chi.value_at(edge.src, edge.inc_src);
    if (a != chi.value_at(edge.dst, edge.inc_dst))
      throw Error(ErrorCode::InternalError, "character violates the equation of edge " + edge.name);
    if (a == 0) throw Error(ErrorCode::CharacterZeroOnEdge, "character vanishes on edge " + edge.name);
  }

  EquitableConstruction out;
  out.root = 0;
  out.to_root.assign(g.vertex_count(), Mat2Q::identity());

  // Contract the spanning tree onto the root. The map for a child c hanging off
  // parent p along edge e sends (g_c, k_c) to (g_p, lambda k_p), composed with
  // the parent's own map to the root.
  const auto tree = spanning_tree(g);
  std::vector<bool> placed(g.vertex_count(), false);
  placed[out.root] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t e : tree) {
      const Edge& edge = g.edges[e];
      if (placed[edge.src] == placed[edge.dst]) continue;
      const bool child_is_dst = placed[edge.src];
      const std::size_t p = child_is_dst ? edge.src : edge.dst;
      const std::size_t c = child_is_dst ? edge.dst : edge.src;
      const RationalVec g_p(child_is_dst ? edge.inc_src : edge.inc_dst);
      const RationalVec g_c(child_is_dst ? edge.inc_dst : edge.inc_src);
      const RationalVec k_p = kernel_direction(chi.vertex[p]);
      const RationalVec k_c = kernel_direction(chi.vertex[c]);
      const Rational lambda = det2(g_c, k_c) / det2(g_p, k_p);
      const Mat2Q step = Mat2Q(g_p, lambda * k_p) * Mat2Q(g_c, k_c).inverse();
      if (abs(step.det()) != 1) throw Error(ErrorCode::InternalError, "contraction map is not unimodular");
      out.to_root[c] = out.to_root[p] * step;
      placed[c] = true;
      grew = true;
    }
  }

  // Character values on the root basis; swap coordinates if m = 0.
  Integer m = chi.vertex[out.root][0];
  Integer n = chi.vertex[out.root][1];
  if (m == 0) {
    out.swapped_root_basis = true;
    const Mat2Q swap(RationalVec{0, 1}, RationalVec{1, 0});
    for (auto& t : out.to_root) t = swap * t;
    std::swap(m, n);
  }
  if (m == 0) throw Error(ErrorCode::CharacterZeroOnEdge, "character vanishes on the root vertex group");

  // Every non-tree edge is now a loop at the root with ends a_j, c_j.
  std::vector<Rational> candidates;
  std::optional<Rational> l;
  for (std::size_t e : non_tree_edges(g)) {
    const Edge& edge = g.edges[e];
    const RationalVec a = out.to_root[edge.src] * edge.inc_src;
    const RationalVec c = out.to_root[edge.dst] * edge.inc_dst;
    const Rational l_j = m * a.p + n * a.q;
    if (l_j != m * c.p + n * c.q) throw Error(ErrorCode::InternalError, "contraction does not respect the character");
    if (!l) l = l_j;
    candidates.push_back(*l * a.q / l_j);
    candidates.push_back(*l * c.q / l_j);
  }
  if (!l) {
    // Tree: no loop constraints at the root, any two distinct points work.
    l = g.edge_count() > 0 ? Rational(edge_value(g, chi, 0)) : Rational(1);
    candidates.push_back(0);
  }
  const Rational y1 = *std::min_element(candidates.begin(), candidates.end()) - 1;
  const Rational y2 = *std::max_element(candidates.begin(), candidates.end()) + 1;
  out.root_points = {RationalVec{(*l - n * y1) / m, y1}, RationalVec{(*l - n * y2) / m, y2}};

  std::vector<std::vector<RationalVec>> rational(g.vertex_count());
  Integer den = 1;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const Mat2Q back = out.to_root[v].inverse();
    for (const RationalVec& x : out.root_points) {
      RationalVec y = back * x;
      den = lcm(lcm(den, y.p.get_den()), y.q.get_den());
      rational[v].push_back(y);
    }
  }
  out.multiplier = den;
  out.set.families.resize(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (const RationalVec& y : rational[v]) out.set.families[v].push_back(to_lattice(Rational(den) * y));
  return out;
}

EquitableSet construct_equitable(const TubularGraph& g, const CharacterZ& chi) {
  return construct_equitable_detailed(g, chi).set;
}

}  // namespace tubular
