#include "tubular/covers.hpp"

#include <algorithm>
#include <map>

#include "tubular/error.hpp"

namespace tubular {

namespace {

std::string label(const Integer& c) { return c.get_str(); }

std::string bits_label(std::size_t mask, std::size_t b) {
  std::string s;
  for (std::size_t i = 0; i < b; ++i) s += ((mask >> i) & 1) ? '1' : '0';
  return s;
}

}  // namespace

bool all_inclusions_primitive(const TubularGraph& g) {
  return std::all_of(g.edges.begin(), g.edges.end(),
                     [](const Edge& e) { return is_primitive(e.inc_src) && is_primitive(e.inc_dst); });
}

bool has_self_loop(const TubularGraph& g) {
  return std::any_of(g.edges.begin(), g.edges.end(), [](const Edge& e) { return e.is_self_loop(); });
}

CoverResult maximality_cover(const TubularGraph& g, const CharacterZ& chi) {
  require_valid(g);
  if (chi.vertex.size() != g.vertex_count()) throw Error(ErrorCode::ShapeMismatch, "character has wrong vertex count");
  if (!is_homomorphism(g, chi)) throw Error(ErrorCode::InternalError, "character violates an edge equation");
  if (content(chi) != 1) throw Error(ErrorCode::NonSurjectiveCharacter, "character is not surjective");

  std::vector<Integer> values;
  Integer M = 1;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    Integer l = edge_value(g, chi, e);
    if (l == 0) throw Error(ErrorCode::ZeroEdgeValue, "character vanishes on edge " + g.edges[e].name);
    values.push_back(abs(l));
    M = lcm(M, abs(l));
  }

  CoverResult out;
  out.index = M;
  out.modulus = M;

  // Vertex lifts: cosets of <gcd(m_v, n_v, M)> in Z/M.
  std::vector<std::size_t> first_lift(g.vertex_count());
  std::vector<Integer> vertex_modulus(g.vertex_count());
  std::vector<SublatticeBasis> bases;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const Integer gv = gcd(gcd(chi.vertex[v][0], chi.vertex[v][1]), M);
    vertex_modulus[v] = gv;
    bases.push_back(congruence_sublattice_basis(chi.vertex[v][0], chi.vertex[v][1], M));
    first_lift[v] = out.cover.vertex_count();
    for (Integer c = 0; c < gv; ++c) {
      out.cover.vertices.push_back(g.vertices[v] + "." + label(c));
      out.vertex_fiber.push_back({v, c, bases[v].basis});
    }
  }
  auto lift_of = [&](std::size_t v, const Integer& c) {
    return first_lift[v] + static_cast<std::size_t>(to_int64(mod(c, vertex_modulus[v])));
  };

  auto tree = spanning_tree(g);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edges[e];
    const bool in_tree = std::binary_search(tree.begin(), tree.end(), e);
    const Integer tau = in_tree ? Integer(0) : (chi.stable.count(e) ? chi.stable.at(e) : Integer(0));
    const Integer d = M / values[e];
    const LatticeVec src_inc = to_lattice(bases[edge.src].basis.inverse() * (d * edge.inc_src));
    const LatticeVec dst_inc = to_lattice(bases[edge.dst].basis.inverse() * (d * edge.inc_dst));
    if (!is_primitive(src_inc) || !is_primitive(dst_inc))
      throw Error(ErrorCode::InternalError, "lifted inclusion of edge " + edge.name + " is not primitive");
    for (Integer c = 0; c < values[e]; ++c) {
      Edge lifted;
      lifted.name = edge.name + "." + label(c);
      lifted.src = lift_of(edge.src, c);
      // t w t^-1 = w' moves the dst-side coset back by tau.
      lifted.dst = lift_of(edge.dst, c - tau);
      lifted.inc_src = src_inc;
      lifted.inc_dst = dst_inc;
      out.cover.edges.push_back(lifted);
      out.edge_fiber.push_back({e, c, d});
    }
  }
  if (!is_connected(out.cover)) throw Error(ErrorCode::InternalError, "maximality cover is disconnected");
  return out;
}

CoverResult homology2_cover(const TubularGraph& g) {
  require_valid(g);
  const std::size_t b = betti(g);
  if (b >= 8 * sizeof(std::size_t) - 1) throw Error(ErrorCode::InternalError, "too many independent cycles");
  const std::size_t classes = std::size_t{1} << b;
  const auto extra = non_tree_edges(g);
  std::map<std::size_t, std::size_t> position;
  for (std::size_t i = 0; i < extra.size(); ++i) position[extra[i]] = i;

  CoverResult out;
  out.index = Integer(static_cast<unsigned long>(classes));
  const std::size_t V = g.vertex_count();
  auto lift = [&](std::size_t v, std::size_t mask) { return mask * V + v; };
  for (std::size_t mask = 0; mask < classes; ++mask)
    for (std::size_t v = 0; v < V; ++v) {
      out.cover.vertices.push_back(g.vertices[v] + "." + bits_label(mask, b));
      out.vertex_fiber.push_back({v, Integer(static_cast<unsigned long>(mask)), Mat2Q::identity()});
    }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edges[e];
    auto pos = position.find(e);
    for (std::size_t mask = 0; mask < classes; ++mask) {
      Edge lifted = edge;
      lifted.name = edge.name + "." + bits_label(mask, b);
      lifted.src = lift(edge.src, mask);
      lifted.dst = lift(edge.dst, pos == position.end() ? mask : mask ^ (std::size_t{1} << pos->second));
      out.cover.edges.push_back(lifted);
      out.edge_fiber.push_back({e, Integer(static_cast<unsigned long>(mask)), 1});
    }
  }
  if (b > 0 && has_self_loop(out.cover)) throw Error(ErrorCode::InternalError, "homology cover has a self loop");
  return out;
}

bool fiber_sums_consistent(const TubularGraph& base, const CoverResult& cover) {
  if (cover.vertex_fiber.size() != cover.cover.vertex_count()) return false;
  if (cover.edge_fiber.size() != cover.cover.edge_count()) return false;
  std::vector<Integer> vsum(base.vertex_count(), 0), esum(base.edge_count(), 0);
  for (const auto& f : cover.vertex_fiber) {
    if (f.base_vertex >= base.vertex_count() || !f.basis_change.is_integral()) return false;
    const Rational d = f.basis_change.det();
    if (d.get_den() != 1) return false;
    vsum[f.base_vertex] += abs(Integer(d.get_num()));
  }
  for (const auto& f : cover.edge_fiber) {
    if (f.base_edge >= base.edge_count() || f.power < 1) return false;
    esum[f.base_edge] += f.power;
  }
  for (const auto& s : vsum)
    if (s != cover.index) return false;
  for (const auto& s : esum)
    if (s != cover.index) return false;
  // Lifted inclusions must be the base inclusions raised to the fiber power.
  for (std::size_t i = 0; i < cover.cover.edge_count(); ++i) {
    const Edge& lifted = cover.cover.edges[i];
    const Edge& orig = base.edges[cover.edge_fiber[i].base_edge];
    const Integer& d = cover.edge_fiber[i].power;
    if (cover.vertex_fiber[lifted.src].base_vertex != orig.src) return false;
    if (cover.vertex_fiber[lifted.dst].base_vertex != orig.dst) return false;
    if (cover.vertex_fiber[lifted.src].basis_change * lifted.inc_src != RationalVec(d * orig.inc_src)) return false;
    if (cover.vertex_fiber[lifted.dst].basis_change * lifted.inc_dst != RationalVec(d * orig.inc_dst)) return false;
  }
  return is_connected(cover.cover);
}

bool even_multiplicity_check(const TubularGraph& base, const CoverResult& cover, const CoverPath& path) {
  const TubularGraph& h = cover.cover;
  if (path.start >= h.vertex_count()) throw Error(ErrorCode::PathNotClosed, "path starts outside the cover");
  std::size_t at = path.start;
  std::vector<std::size_t> uses(base.edge_count(), 0);
  for (const PathStep& s : path.steps) {
    if (s.edge >= h.edge_count()) throw Error(ErrorCode::PathNotClosed, "path uses an unknown edge");
    const Edge& e = h.edges[s.edge];
    const std::size_t from = s.forward ? e.src : e.dst;
    if (from != at) throw Error(ErrorCode::PathNotClosed, "path is not continuous at edge " + e.name);
    at = s.forward ? e.dst : e.src;
    ++uses[cover.edge_fiber[s.edge].base_edge];
  }
  if (at != path.start) throw Error(ErrorCode::PathNotClosed, "path does not return to its start");
  return std::all_of(uses.begin(), uses.end(), [](std::size_t u) { return u % 2 == 0; });
}

StaOutcome sta_pipeline(const TubularGraph& g) {
  require_valid(g);
  StaOutcome outcome;
  STAWitness w;
  if (all_inclusions_primitive(g)) {
    w.stage2 = homology2_cover(g);
    w.total_index = w.stage2.index;
  } else {
    FbycResult fbyc = find_fbyc_character(g);
    if (!fbyc.found()) {
      outcome.inapplicable_reason = "inclusions are not all maximal and no character is nonzero on every edge group";
      return outcome;
    }
    w.character = fbyc.character;
    w.stage1 = maximality_cover(g, *fbyc.character);
    w.stage2 = homology2_cover(w.stage1->cover);
    w.total_index = w.stage1->index * w.stage2.index;
  }
  w.all_inclusions_maximal = all_inclusions_primitive(w.stage2.cover);
  w.no_self_loops = !has_self_loop(w.stage2.cover);
  outcome.witness = std::move(w);
  return outcome;
}

void compare_reference_index(STAWitness& witness, const Integer& reference) {
  witness.reference_index = reference;
  if (reference != witness.total_index)
    witness.notes.push_back("computed index " + witness.total_index.get_str() + " differs from reference index " +
                            reference.get_str() + "; no minimality is claimed");
}

}  // namespace tubular
