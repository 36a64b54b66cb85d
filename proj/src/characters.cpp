#include "tubular/characters.hpp"

#include <algorithm>
#include <numeric>

#include "tubular/error.hpp"

namespace tubular {

Integer edge_value(const TubularGraph& g, const CharacterZ& chi, std::size_t e) {
  const Edge& edge = g.edges.at(e);
  return chi.value_at(edge.src, edge.inc_src);
}

Rational edge_value(const TubularGraph& g, const CharacterQ& chi, std::size_t e) {
  const Edge& edge = g.edges.at(e);
  return chi.value_at(edge.src, edge.inc_src);
}

bool is_homomorphism(const TubularGraph& g, const CharacterZ& chi) {
  if (chi.vertex.size() != g.vertex_count()) return false;
  auto rest = non_tree_edges(g);
  if (chi.stable.size() != rest.size()) return false;
  for (std::size_t e : rest)
    if (!chi.stable.contains(e)) return false;
  for (const Edge& edge : g.edges)
    if (chi.value_at(edge.src, edge.inc_src) != chi.value_at(edge.dst, edge.inc_dst)) return false;
  return true;
}

std::vector<Integer> generator_values(const Presentation& pres, const CharacterZ& chi) {
  std::vector<Integer> values(pres.generators.size());
  for (std::size_t i = 0; i < pres.generators.size(); ++i) {
    const Generator& gen = pres.generators[i];
    switch (gen.kind) {
      case GeneratorKind::VertexX: values[i] = chi.vertex.at(gen.owner)[0]; break;
      case GeneratorKind::VertexY: values[i] = chi.vertex.at(gen.owner)[1]; break;
      case GeneratorKind::Stable: {
        auto it = chi.stable.find(gen.owner);
        values[i] = it == chi.stable.end() ? Integer(0) : it->second;
        break;
      }
    }
  }
  return values;
}

CharacterZ character_from_generator_values(const Presentation& pres, std::size_t vertex_count,
                                           const std::vector<Integer>& values) {
  if (values.size() != pres.generators.size())
    throw Error(ErrorCode::ShapeMismatch, "generator value count mismatch");
  CharacterZ chi;
  chi.vertex.assign(vertex_count, {Integer(0), Integer(0)});
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Generator& gen = pres.generators[i];
    switch (gen.kind) {
      case GeneratorKind::VertexX: chi.vertex[gen.owner][0] = values[i]; break;
      case GeneratorKind::VertexY: chi.vertex[gen.owner][1] = values[i]; break;
      case GeneratorKind::Stable: chi.stable[gen.owner] = values[i]; break;
    }
  }
  return chi;
}

Integer content(const CharacterZ& chi) {
  Integer g = 0;
  for (const auto& mn : chi.vertex) g = gcd(gcd(g, mn[0]), mn[1]);
  for (const auto& [e, tau] : chi.stable) g = gcd(g, tau);
  return g;
}

std::vector<CharacterZ> hom_basis(const TubularGraph& g) {
  Presentation pres = presentation(g);
  IntMatrix a(g.edge_count(), pres.generators.size());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edges[e];
    a(e, pres.x_of(edge.src)) += edge.inc_src.p;
    a(e, pres.y_of(edge.src)) += edge.inc_src.q;
    a(e, pres.x_of(edge.dst)) -= edge.inc_dst.p;
    a(e, pres.y_of(edge.dst)) -= edge.inc_dst.q;
  }
  std::vector<CharacterZ> basis;
  for (const auto& v : integer_kernel(a)) basis.push_back(character_from_generator_values(pres, g.vertex_count(), v));
  return basis;
}

FbycResult find_fbyc_character(const TubularGraph& g) {
  require_valid(g);
  FbycResult result;
  const auto basis = hom_basis(g);
  result.hom_rank = basis.size();

  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    bool all_zero = std::all_of(basis.begin(), basis.end(),
                                [&](const CharacterZ& b) { return edge_value(g, b, e) == 0; });
    if (all_zero) {
      result.witness_edge = e;
      return result;
    }
  }

  // Each edge functional is a nonzero polynomial of degree < d in k, so some
  // k <= E(d-1)+1 avoids all their roots.
  const std::size_t d = basis.size();
  const Integer bound = Integer(static_cast<unsigned long>(g.edge_count())) *
                            Integer(static_cast<unsigned long>(d == 0 ? 0 : d - 1)) + 1;
  for (Integer k = 1; k <= bound; ++k) {
    CharacterZ chi = basis.front();
    for (auto& mn : chi.vertex) mn = {Integer(0), Integer(0)};
    for (auto& [e, tau] : chi.stable) tau = 0;
    Integer coeff = 1;
    for (const CharacterZ& b : basis) {
      for (std::size_t v = 0; v < chi.vertex.size(); ++v) {
        chi.vertex[v][0] += coeff * b.vertex[v][0];
        chi.vertex[v][1] += coeff * b.vertex[v][1];
      }
      for (auto& [e, tau] : chi.stable) tau += coeff * b.stable.at(e);
      coeff *= k;
    }
    bool ok = true;
    for (std::size_t e = 0; e < g.edge_count() && ok; ++e) ok = edge_value(g, chi, e) != 0;
    if (!ok) continue;
    result.raw = chi;
    result.character = normalize_character(chi);
    result.search_parameter = k;
    return result;
  }
  throw Error(ErrorCode::InternalError, "generic point search exceeded its bound");
}

CharacterZ normalize_character(const CharacterZ& chi) {
  CharacterZ out = chi;
  for (auto& [e, tau] : out.stable) tau = 0;
  Integer g = content(out);
  if (g == 0) throw Error(ErrorCode::AllZero, "character vanishes on every vertex group");
  for (auto& mn : out.vertex) {
    mn[0] /= g;
    mn[1] /= g;
  }
  return out;
}

CharacterZ scale_to_integer(const CharacterQ& chi) {
  Integer den = 1;
  for (const auto& mn : chi.vertex) den = lcm(lcm(den, mn[0].get_den()), mn[1].get_den());
  for (const auto& [e, tau] : chi.stable) den = lcm(den, tau.get_den());
  CharacterZ out;
  for (const auto& mn : chi.vertex) {
    Rational a = mn[0] * den, b = mn[1] * den;
    out.vertex.push_back({a.get_num(), b.get_num()});
  }
  for (const auto& [e, tau] : chi.stable) {
    Rational t = tau * den;
    out.stable[e] = t.get_num();
  }
  Integer g = content(out);
  if (g == 0) throw Error(ErrorCode::AllZero, "character is identically zero");
  for (auto& mn : out.vertex) {
    mn[0] /= g;
    mn[1] /= g;
  }
  for (auto& [e, tau] : out.stable) tau /= g;
  return out;
}

namespace {

Rational value_at(const std::array<Rational, 2>& mn, const LatticeVec& w) { return mn[0] * w.p + mn[1] * w.q; }

// Collects constraints on the free parameter lambda of a vertex whose values
// are base + lambda*dir.
struct ParameterConstraints {
  std::optional<Rational> forced;
  std::vector<Rational> excluded;

  void force(const Rational& lambda) {
    if (forced && *forced != lambda)
      throw Error(ErrorCode::InconsistentPrescription, "prescribed values conflict at a vertex");
    forced = lambda;
  }
};

}  // namespace

std::map<std::size_t, std::array<Rational, 2>> extend_over_tree(const TubularGraph& g,
                                                                const TreeExtensionRequest& request) {
  if (request.root >= g.vertex_count()) throw Error(ErrorCode::InvalidGraph, "root outside the graph");
  // Acyclicity check by union-find.
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> in_tree(g.edge_count(), false);
  for (std::size_t e : request.tree_edges) {
    const Edge& edge = g.edges.at(e);
    std::size_t a = find(edge.src), b = find(edge.dst);
    if (a == b) throw Error(ErrorCode::InvalidGraph, "tree edges contain a cycle at edge " + edge.name);
    parent[a] = b;
    in_tree[e] = true;
  }

  std::map<std::size_t, std::array<Rational, 2>> values;
  values[request.root] = request.root_values;

  // Checks the constraints at a vertex whose values are already fixed.
  auto check_fixed = [&](std::size_t v, std::optional<std::size_t> incoming) {
    for (const EdgeEnd& end : incident_ends(g, v)) {
      if (incoming && end.edge == *incoming) continue;
      Rational val = value_at(values[v], end.inclusion(g));
      auto it = request.prescribed.find(end.edge);
      if (it != request.prescribed.end() && in_tree[end.edge] && it->second != val)
        throw Error(ErrorCode::InconsistentPrescription, "prescribed value on edge " + g.edges[end.edge].name +
                                                             " disagrees with the root values");
      if (request.nonzero.contains(end.edge) && val == 0)
        throw Error(ErrorCode::InconsistentPrescription, "edge " + g.edges[end.edge].name + " is forced to vanish");
    }
  };
  check_fixed(request.root, std::nullopt);

  std::vector<std::size_t> queue{request.root};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t u = queue[head];
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (!in_tree[e]) continue;
      const Edge& edge = g.edges[e];
      std::size_t w;
      LatticeVec inc_u, inc_w;
      if (edge.src == u && !values.contains(edge.dst)) {
        w = edge.dst;
        inc_u = edge.inc_src;
        inc_w = edge.inc_dst;
      } else if (edge.dst == u && !values.contains(edge.src)) {
        w = edge.src;
        inc_u = edge.inc_dst;
        inc_w = edge.inc_src;
      } else {
        continue;
      }
      const Rational s = value_at(values[u], inc_u);
      const Integer k = content(inc_w);
      if (k == 0) throw Error(ErrorCode::InvalidGraph, "zero inclusion on edge " + edge.name);
      if (request.require_primitive && k != 1)
        throw Error(ErrorCode::NonPrimitiveInclusion, "inclusion of edge " + edge.name + " is not primitive");
      const LatticeVec prim = primitive_part(inc_w);
      const ExtGcd eg = ext_gcd(prim.p, prim.q);
      const Rational target = s / Rational(k);
      const std::array<Rational, 2> base{target * eg.alpha, target * eg.beta};
      const std::array<Rational, 2> dir{Rational(prim.q), Rational(-prim.p)};

      ParameterConstraints pc;
      if (target == 0) pc.excluded.push_back(0);  // lambda = 0 kills the vertex group
      for (const EdgeEnd& end : incident_ends(g, w)) {
        if (end.edge == e) continue;
        const LatticeVec& inc = end.inclusion(g);
        const Rational a = value_at(base, inc);
        const Rational b = value_at(dir, inc);
        auto it = request.prescribed.find(end.edge);
        if (it != request.prescribed.end() && in_tree[end.edge]) {
          if (b != 0) {
            pc.force((it->second - a) / b);
          } else if (a != it->second) {
            throw Error(ErrorCode::InconsistentPrescription, "edge " + g.edges[end.edge].name +
                                                                 " cannot take its prescribed value");
          }
        }
        if (request.nonzero.contains(end.edge)) {
          if (b != 0) {
            pc.excluded.push_back(-a / b);
          } else if (a == 0) {
            throw Error(ErrorCode::InconsistentPrescription, "edge " + g.edges[end.edge].name + " is forced to vanish");
          }
        }
      }

      Rational lambda;
      if (pc.forced) {
        lambda = *pc.forced;
        if (std::find(pc.excluded.begin(), pc.excluded.end(), lambda) != pc.excluded.end())
          throw Error(ErrorCode::InconsistentPrescription, "prescribed value forces a vanishing edge");
      } else {
        lambda = 0;
        while (std::find(pc.excluded.begin(), pc.excluded.end(), lambda) != pc.excluded.end()) lambda += 1;
      }
      values[w] = {base[0] + lambda * dir[0], base[1] + lambda * dir[1]};
      queue.push_back(w);
    }
  }
  return values;
}

}  // namespace tubular
