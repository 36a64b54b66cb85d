#include "tubular/classify.hpp"

#include <algorithm>
#include <numeric>

#include "tubular/error.hpp"

namespace tubular {

MaximalityReport maximal_inclusions(const TubularGraph& g) {
  require_valid(g);
  MaximalityReport r;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!is_primitive(g.edges[e].inc_src)) r.offenders.push_back({e, true});
    if (!is_primitive(g.edges[e].inc_dst)) r.offenders.push_back({e, false});
  }
  r.maximal = r.offenders.empty();
  return r;
}

TubularGraph saturate(const TubularGraph& g) {
  TubularGraph out = g;
  for (Edge& e : out.edges) {
    e.inc_src = primitive_part(e.inc_src);
    e.inc_dst = primitive_part(e.inc_dst);
  }
  return out;
}

bool acylindrically_hyperbolic(const TubularGraph& g) {
  require_valid(g);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto ends = incident_ends(g, v);
    for (std::size_t i = 0; i < ends.size(); ++i)
      for (std::size_t j = i + 1; j < ends.size(); ++j)
        if (det2(ends[i].inclusion(g), ends[j].inclusion(g)) != 0) return true;
  }
  return false;
}

std::size_t first_homology_rank(const Presentation& pres) {
  IntMatrix a(pres.relators.size(), pres.generators.size());
  for (std::size_t r = 0; r < pres.relators.size(); ++r)
    for (const Letter& l : pres.relators[r]) a(r, l.gen) += l.exp;
  return pres.generators.size() - rank(a);
}

ResidualFreeness residually_free(const TubularGraph& g) {
  require_valid(g);
  ResidualFreeness out;
  // Orientation of each vertex's common primitive vector is the first incident
  // inclusion; sign[e][end] records whether that end agrees with it.
  std::vector<std::optional<LatticeVec>> axis(g.vertex_count());
  std::vector<std::array<bool, 2>> flipped(g.edge_count(), {false, false});
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (const EdgeEnd& end : incident_ends(g, v)) {
      const LatticeVec& inc = end.inclusion(g);
      if (!is_primitive(inc)) {
        out.reason = "inclusion of edge " + g.edges[end.edge].name + " at " + g.vertices[v] + " is not maximal";
        return out;
      }
      if (!axis[v]) axis[v] = inc;
      if (inc == *axis[v]) {
        flipped[end.edge][end.at_src ? 0 : 1] = false;
      } else if (inc == -*axis[v]) {
        flipped[end.edge][end.at_src ? 0 : 1] = true;
      } else {
        out.reason = "inclusions at " + g.vertices[v] + " do not lie in a single cyclic subgroup";
        return out;
      }
    }
  }
  // Parity union-find: orientation(src) xor orientation(dst) must equal the
  // xor of the two end flips along every edge.
  std::vector<std::size_t> parent(g.vertex_count());
  std::vector<bool> parity(g.vertex_count(), false);  // relative to parent
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    bool p = false;
    while (parent[x] != x) {
      p = p != parity[x];
      x = parent[x];
    }
    return std::pair{x, p};
  };
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edges[e];
    const bool want = flipped[e][0] != flipped[e][1];
    auto [ra, pa] = find(edge.src);
    auto [rb, pb] = find(edge.dst);
    if (ra == rb) {
      if ((pa != pb) != want) {
        out.reason = "orientations cannot be chosen consistently around the cycle through edge " + edge.name;
        return out;
      }
      continue;
    }
    parent[ra] = rb;
    parity[ra] = (pa != pb) != want;
  }
  out.free = true;
  const std::size_t h1 = first_homology_rank(presentation(g));
  out.n = h1 - 1;
  return out;
}

bool verify_f2_map(const Presentation& pres, const F2Map& f) {
  if (f.images.size() < pres.generators.size())
    throw Error(ErrorCode::MissingGenerator, "map has " + std::to_string(f.images.size()) + " images for " +
                                                 std::to_string(pres.generators.size()) + " generators");
  for (const Word& r : pres.relators)
    if (!substitute(r, f.images).empty()) return false;
  for (std::size_t i = 0; i < pres.generators.size(); ++i)
    for (std::size_t j = i + 1; j < pres.generators.size(); ++j)
      if (!commutator(f.images[i], f.images[j]).empty()) return true;
  return false;
}

namespace {

enum class Target { Trivial, UPower, VPower, ConjugatedUPower };

// Vertex images collected as rational homomorphisms Z^2 -> Q, then scaled by
// one common denominator.
class MapBuilder {
 public:
  MapBuilder(const TubularGraph& g, std::string construction)
      : g_(g), pres_(presentation(g)), target_(g.vertex_count(), Target::Trivial), phi_(g.vertex_count()) {
    map_.construction = std::move(construction);
    map_.images.assign(pres_.generators.size(), Word{});
  }

  void set_vertex(std::size_t v, Target t, const std::array<Rational, 2>& phi) {
    target_[v] = t;
    phi_[v] = phi;
  }

  /// Extends phi from root across the given forest edges.
  void extend(std::size_t root, Target t, const std::array<Rational, 2>& phi, const std::vector<std::size_t>& forest) {
    TreeExtensionRequest req;
    req.tree_edges = forest;
    req.root = root;
    req.root_values = phi;
    req.require_primitive = false;
    for (const auto& [v, values] : extend_over_tree(g_, req)) set_vertex(v, t, values);
  }

  void set_stable(std::size_t edge, Word w) { map_.images[*pres_.stable_letter[edge]] = std::move(w); }

  F2Map finish() {
    Integer den = 1;
    for (std::size_t v = 0; v < g_.vertex_count(); ++v)
      if (target_[v] != Target::Trivial)
        for (const Rational& c : phi_[v]) den = lcm(den, c.get_den());
    for (std::size_t v = 0; v < g_.vertex_count(); ++v) {
      if (target_[v] == Target::Trivial) continue;
      for (int k = 0; k < 2; ++k) {
        const Rational scaled = Rational(den) * phi_[v][k];
        const Integer e = scaled.get_num();
        Word w;
        switch (target_[v]) {
          case Target::UPower: w = {{kU, e}}; break;
          case Target::VPower: w = {{kV, e}}; break;
          case Target::ConjugatedUPower: w = {{kV, 1}, {kU, e}, {kV, -1}}; break;
          case Target::Trivial: break;
        }
        map_.images[k == 0 ? pres_.x_of(v) : pres_.y_of(v)] = reduce_word(w);
      }
    }
    if (!verify_f2_map(pres_, map_))
      throw Error(ErrorCode::InternalError, "constructed map (" + map_.construction + ") failed verification");
    return map_;
  }

 private:
  const TubularGraph& g_;
  Presentation pres_;
  std::vector<Target> target_;
  std::vector<std::array<Rational, 2>> phi_;
  F2Map map_;
};

// The functional g -> det(r, g), which vanishes exactly on the line through r.
std::array<Rational, 2> annihilator(const LatticeVec& r) {
  const LatticeVec p = primitive_part(r);
  return {Rational(-p.q), Rational(p.p)};
}

std::array<Rational, 2> scaled(const std::array<Rational, 2>& phi, const Integer& c) {
  return {phi[0] * c, phi[1] * c};
}

std::vector<std::size_t> edges_except(const TubularGraph& g, const std::vector<std::size_t>& removed) {
  std::vector<std::size_t> keep;
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (std::find(removed.begin(), removed.end(), e) == removed.end()) keep.push_back(e);
  return keep;
}

// Vertices reachable from start using only the given edges.
std::vector<bool> component(const TubularGraph& g, std::size_t start, const std::vector<std::size_t>& edges) {
  std::vector<bool> seen(g.vertex_count(), false);
  seen[start] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t e : edges) {
      const Edge& edge = g.edges[e];
      if (seen[edge.src] != seen[edge.dst]) {
        seen[edge.src] = seen[edge.dst] = true;
        grew = true;
      }
    }
  }
  return seen;
}

// Edge path from a to b inside the spanning tree, as (edge, vertex reached).
std::vector<std::pair<std::size_t, std::size_t>> tree_path(const TubularGraph& g, const std::vector<std::size_t>& tree,
                                                           std::size_t a, std::size_t b) {
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> via(g.vertex_count());
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<std::size_t> queue{a};
  seen[a] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t u = queue[head];
    for (std::size_t e : tree) {
      const Edge& edge = g.edges[e];
      for (auto [from, to] : {std::pair{edge.src, edge.dst}, std::pair{edge.dst, edge.src}}) {
        if (from != u || seen[to]) continue;
        seen[to] = true;
        via[to] = std::pair{e, u};
        queue.push_back(to);
      }
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> path;
  for (std::size_t v = b; v != a; v = via[v]->second) path.push_back({via[v]->first, v});
  std::reverse(path.begin(), path.end());
  return path;
}

const LatticeVec& inclusion_at(const Edge& e, std::size_t v) { return e.src == v ? e.inc_src : e.inc_dst; }

std::optional<F2Map> surject_tree(const TubularGraph& g) {
  MapBuilder b(g, "tree-cut");
  const Edge& cut = g.edges[0];
  const auto forest = edges_except(g, {0});
  b.extend(cut.src, Target::UPower, annihilator(cut.inc_src), forest);
  b.extend(cut.dst, Target::VPower, annihilator(cut.inc_dst), forest);
  return b.finish();
}

std::optional<F2Map> surject_self_loop(const TubularGraph& g, std::size_t loop) {
  const Edge& e = g.edges[loop];
  if (g.vertex_count() == 1) {
    if (det2(e.inc_src, e.inc_dst) != 0) return std::nullopt;
    MapBuilder b(g, "parallel-self-loop");
    b.set_vertex(e.src, Target::UPower, annihilator(e.inc_src));
    b.set_stable(loop, {{kV, 1}});
    return b.finish();
  }
  // Cut the first tree edge: the side holding the loop goes onto <u> through
  // the stable letter, the other side onto <v> killing the cut inclusion.
  const auto tree = spanning_tree(g);
  const std::size_t cut = tree.front();
  const auto forest = edges_except(g, {cut, loop});
  const auto loop_side = component(g, e.src, forest);
  const Edge& c = g.edges[cut];
  const std::size_t far = loop_side[c.src] ? c.dst : c.src;
  MapBuilder b(g, "self-loop-bridge-cut");
  b.set_stable(loop, {{kU, 1}});
  b.extend(far, Target::VPower, annihilator(inclusion_at(c, far)), forest);
  return b.finish();
}

std::optional<F2Map> surject_single_cycle(const TubularGraph& g, std::size_t extra) {
  const Edge& star = g.edges[extra];
  const auto tree = spanning_tree(g);
  const auto path = tree_path(g, tree, star.src, star.dst);

  std::vector<std::size_t> cycle_edges{extra};
  for (const auto& step : path) cycle_edges.push_back(step.first);
  const auto forest = edges_except(g, cycle_edges);

  // The two cycle inclusions at each cycle vertex.
  std::map<std::size_t, std::pair<LatticeVec, LatticeVec>> ends;
  ends[star.src] = {star.inc_src, inclusion_at(g.edges[path.front().first], star.src)};
  ends[star.dst] = {star.inc_dst, inclusion_at(g.edges[path.back().first], star.dst)};
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const std::size_t v = path[i].second;
    ends[v] = {inclusion_at(g.edges[path[i].first], v), inclusion_at(g.edges[path[i + 1].first], v)};
  }

  for (const auto& [v, pair] : ends) {
    if (det2(pair.first, pair.second) != 0) continue;
    MapBuilder b(g, "single-cycle-parallel-vertex");
    b.extend(v, Target::UPower, annihilator(pair.first), forest);
    b.set_stable(extra, {{kV, 1}});
    return b.finish();
  }

  const LatticeVec& X = star.inc_src;
  const LatticeVec& A = star.inc_dst;
  const LatticeVec& P = ends[star.src].second;
  const LatticeVec& Q = ends[star.dst].second;
  // phi1 kills P, phi2 kills Q, and phi1(X) = phi2(A).
  const auto phi1 = scaled(std::array<Rational, 2>{Rational(-P.q), Rational(P.p)}, det2(Q, A));
  const auto phi2 = scaled(std::array<Rational, 2>{Rational(-Q.q), Rational(Q.p)}, det2(P, X));
  MapBuilder b(g, "single-cycle-general");
  b.extend(star.src, Target::UPower, phi1, forest);
  b.extend(star.dst, Target::ConjugatedUPower, phi2, forest);
  b.set_stable(extra, {{kV, 1}});
  return b.finish();
}

}  // namespace

std::optional<F2Map> surject_f2(const TubularGraph& g) {
  require_valid(g);
  if (g.edge_count() == 0) return std::nullopt;
  const auto extra = non_tree_edges(g);
  if (extra.size() >= 2) {
    MapBuilder b(g, "two-stable-letters");
    b.set_stable(extra[0], {{kU, 1}});
    b.set_stable(extra[1], {{kV, 1}});
    return b.finish();
  }
  if (extra.empty()) return surject_tree(g);
  if (g.edges[extra[0]].is_self_loop()) return surject_self_loop(g, extra[0]);
  return surject_single_cycle(g, extra[0]);
}

std::string to_string(LargenessKind kind) {
  switch (kind) {
    case LargenessKind::SurjectsF2: return "SurjectsF2";
    case LargenessKind::IndexTwoSurjects: return "IndexTwoSurjects";
    case LargenessKind::IsZ2: return "IsZ2";
  }
  return "Unknown";
}

Largeness largeness(const TubularGraph& g) {
  require_valid(g);
  Largeness out;
  if (g.edge_count() == 0) {
    out.kind = LargenessKind::IsZ2;
    return out;
  }
  if (auto m = surject_f2(g)) {
    out.kind = LargenessKind::SurjectsF2;
    out.map = std::move(m);
    return out;
  }
  CoverResult cover = homology2_cover(g);
  auto m = surject_f2(cover.cover);
  if (!m) throw Error(ErrorCode::InternalError, "double cover does not surject onto F2");
  out.kind = LargenessKind::IndexTwoSurjects;
  out.map = std::move(m);
  out.cover = std::move(cover);
  return out;
}

bool ClassificationReport::consistent() const {
  if (fbyc.found() && (!equitable || !alexander)) return false;
  if (maximal.maximal && !sta.applicable()) return false;
  if (is_z2 != (largeness.kind == LargenessKind::IsZ2)) return false;
  if (residually_free.free && acylindrically_hyperbolic) return false;
  return true;
}

ClassificationReport classify_all(const TubularGraph& g) {
  require_valid(g);
  ClassificationReport r;
  const Presentation pres = presentation(g);
  r.generator_count = pres.generators.size();
  r.relator_count = pres.relators.size();
  r.betti = betti(g);
  r.is_z2 = g.edge_count() == 0;
  r.fbyc = find_fbyc_character(g);
  r.maximal = maximal_inclusions(g);
  r.acylindrically_hyperbolic = acylindrically_hyperbolic(g);
  r.residually_free = residually_free(g);
  r.largeness = largeness(g);
  r.sta = sta_pipeline(g);
  if (r.fbyc.found()) {
    r.equitable = construct_equitable_detailed(g, *r.fbyc.character);
    r.equitable_check = verify_equitable(g, r.equitable->set);
    r.alexander = alexander_report(g, *r.fbyc.character);
  }
  return r;
}

}  // namespace tubular
