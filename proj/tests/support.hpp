#pragma once

// Graph builders and independent reference computations shared by the tests.

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tubular/alexander.hpp"
#include "tubular/characters.hpp"
#include "tubular/covers.hpp"
#include "tubular/graph.hpp"
#include "tubular/laurent.hpp"

namespace testing_support {

using namespace tubular;

inline TubularGraph bouquet(const std::vector<std::pair<LatticeVec, LatticeVec>>& loops) {
  TubularGraph g;
  g.vertices = {"v"};
  for (std::size_t i = 0; i < loops.size(); ++i)
    g.edges.push_back({"e" + std::to_string(i), 0, 0, loops[i].first, loops[i].second});
  return g;
}

inline TubularGraph z2() {
  TubularGraph g;
  g.vertices = {"v"};
  return g;
}

/// Vertex values of integer characters with entries in [-bound, bound],
/// enumerated by backtracking in vertex order. Stable letters never appear in
/// an edge equation, so they are left out. When an edge joins a vertex to an
/// earlier one, its equation is solved for one coordinate instead of scanning
/// both. With nonzero_edges set, edges evaluating to zero are pruned too.
/// Stops early when visit returns true.
inline bool enumerate_characters(const TubularGraph& g, std::int64_t bound, bool nonzero_edges,
                                 const std::function<bool(const std::vector<std::array<std::int64_t, 2>>&)>& visit) {
  const std::size_t V = g.vertex_count();
  std::vector<std::array<std::int64_t, 2>> values(V);
  auto value = [&](std::size_t v, const LatticeVec& w) {
    return values[v][0] * w.p.get_si() + values[v][1] * w.q.get_si();
  };
  auto consistent = [&](std::size_t v) {
    for (const Edge& e : g.edges) {
      if (std::max(e.src, e.dst) != v) continue;
      const std::int64_t a = value(e.src, e.inc_src);
      if (a != value(e.dst, e.inc_dst)) return false;
      if (nonzero_edges && a == 0) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> rec = [&](std::size_t v) -> bool {
    if (v == V) return visit(values);
    // An edge to an already assigned vertex fixes a linear equation here.
    const Edge* link = nullptr;
    for (const Edge& e : g.edges)
      if (e.src != e.dst && std::max(e.src, e.dst) == v) {
        link = &e;
        break;
      }
    auto attempt = [&](std::int64_t m, std::int64_t n) {
      if (m < -bound || m > bound || n < -bound || n > bound) return false;
      values[v] = {m, n};
      return consistent(v) && rec(v + 1);
    };
    if (!link) {
      for (std::int64_t m = -bound; m <= bound; ++m)
        for (std::int64_t n = -bound; n <= bound; ++n)
          if (attempt(m, n)) return true;
      return false;
    }
    const bool here_is_src = link->src == v;
    const LatticeVec& w = here_is_src ? link->inc_src : link->inc_dst;
    const std::int64_t target = value(here_is_src ? link->dst : link->src, here_is_src ? link->inc_dst : link->inc_src);
    const std::int64_t p = w.p.get_si(), q = w.q.get_si();
    for (std::int64_t free = -bound; free <= bound; ++free) {
      if (q != 0) {
        const std::int64_t rest = target - free * p;
        if (rest % q == 0 && attempt(free, rest / q)) return true;
      } else {
        const std::int64_t rest = target;
        if (rest % p == 0 && attempt(rest / p, free)) return true;
      }
    }
    return false;
  };
  return rec(0);
}

/// True iff some character with vertex values in [-bound, bound] is nonzero
/// on every edge. Stable letters are free and do not affect edge values.
inline bool brute_force_fbyc_by_values(const TubularGraph& g, std::int64_t bound) {
  return enumerate_characters(g, bound, true, [&](const std::vector<std::array<std::int64_t, 2>>& values) {
    if (g.edge_count() > 0) return true;
    for (const auto& v : values)
      if (v[0] != 0 || v[1] != 0) return true;
    return false;
  });
}

/// Basis over Q of the vertex values (m_0, n_0, m_1, n_1, ...) satisfying
/// every edge equation, by plain Gauss-Jordan elimination.
inline std::vector<std::vector<Rational>> vertex_value_solutions(const TubularGraph& g) {
  const std::size_t n = 2 * g.vertex_count();
  std::vector<std::vector<Rational>> rows;
  for (const Edge& e : g.edges) {
    std::vector<Rational> r(n);
    r[2 * e.src] += e.inc_src.p;
    r[2 * e.src + 1] += e.inc_src.q;
    r[2 * e.dst] -= e.inc_dst.p;
    r[2 * e.dst + 1] -= e.inc_dst.q;
    rows.push_back(r);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    const Rational lead = rows[rank][c];
    for (auto& x : rows[rank]) x /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = 0; k < n; ++k) rows[i][k] -= f * rows[rank][k];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t c = 0; c < n; ++c) {
    if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end()) continue;
    std::vector<Rational> v(n);
    v[c] = 1;
    for (std::size_t i = 0; i < rank; ++i) v[pivot_col[i]] = -rows[i][c];
    basis.push_back(v);
  }
  return basis;
}

/// True iff some combination of the solution basis with integer coefficients
/// in [-bound, bound] is nonzero on every edge (or nonzero at all when there
/// are no edges). Clearing denominators turns such a combination into an
/// integer character.
inline bool brute_force_fbyc(const TubularGraph& g, std::int64_t bound) {
  const auto basis = vertex_value_solutions(g);
  const std::size_t n = 2 * g.vertex_count();
  std::vector<Rational> point(n);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == basis.size()) {
      bool any = false;
      for (const auto& x : point) any = any || x != 0;
      if (!any) return false;
      for (const Edge& e : g.edges)
        if (point[2 * e.src] * e.inc_src.p + point[2 * e.src + 1] * e.inc_src.q == 0) return false;
      return true;
    }
    for (std::int64_t c = -bound; c <= bound; ++c) {
      for (std::size_t k = 0; k < n; ++k) point[k] += c * basis[i][k];
      const bool found = rec(i + 1);
      for (std::size_t k = 0; k < n; ++k) point[k] -= c * basis[i][k];
      if (found) return true;
    }
    return false;
  };
  return rec(0);
}

/// Determinant by cofactor expansion along the first row.
inline LaurentPoly cofactor_determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  if (n == 1) return m[0][0];
  LaurentPoly total;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<LaurentPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    const LaurentPoly term = m[0][j] * cofactor_determinant(minor);
    if (j % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

/// Fox derivative computed from the axioms: d(uv) = du + phi(u) dv,
/// d(g^-1) = -phi(g)^-1 dg, letter by letter over the expanded word.
inline LaurentPoly fox_by_axioms(const Word& w, std::size_t gen, const std::vector<Integer>& values) {
  LaurentPoly result;
  LaurentPoly prefix(1);
  for (const Letter& l : w) {
    const std::int64_t c = values[l.gen].get_si();
    const std::int64_t n = l.exp.get_si();
    const bool positive = n > 0;
    for (std::int64_t k = 0; k < (positive ? n : -n); ++k) {
      if (positive) {
        if (l.gen == gen) result += prefix;
        prefix = prefix * LaurentPoly::monomial(1, c);
      } else {
        prefix = prefix * LaurentPoly::monomial(1, -c);
        if (l.gen == gen) result -= prefix;
      }
    }
  }
  return result;
}

inline Word random_word(std::mt19937_64& rng, std::size_t gens, std::size_t length) {
  Word w;
  std::uniform_int_distribution<std::size_t> pick(0, gens - 1);
  std::uniform_int_distribution<int> ex(-3, 3);
  for (std::size_t i = 0; i < length; ++i) {
    int e = ex(rng);
    if (e == 0) e = 1;
    w.push_back({pick(rng), e});
  }
  return w;
}

inline LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> len(0, 5);
  std::uniform_int_distribution<int> low(-3, 3);
  std::vector<Integer> c;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) c.push_back(coef(rng));
  return LaurentPoly(low(rng), c);
}

/// A closed path in a cover: a random walk of the given length, then the
/// shortest way back to the start.
inline CoverPath random_closed_path(std::mt19937_64& rng, const TubularGraph& h, std::size_t start, std::size_t steps) {
  CoverPath path;
  path.start = start;
  std::size_t at = start;
  for (std::size_t i = 0; i < steps; ++i) {
    std::vector<PathStep> options;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
      if (h.edges[e].src == at) options.push_back({e, true});
      if (h.edges[e].dst == at) options.push_back({e, false});
    }
    if (options.empty()) break;
    const PathStep s = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    path.steps.push_back(s);
    at = s.forward ? h.edges[s.edge].dst : h.edges[s.edge].src;
  }
  // Breadth-first search back to start.
  std::vector<std::optional<std::pair<std::size_t, PathStep>>> via(h.vertex_count());
  std::vector<bool> seen(h.vertex_count(), false);
  std::vector<std::size_t> queue{at};
  seen[at] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t u = queue[head];
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
      for (bool fwd : {true, false}) {
        const std::size_t from = fwd ? h.edges[e].src : h.edges[e].dst;
        const std::size_t to = fwd ? h.edges[e].dst : h.edges[e].src;
        if (from != u || seen[to]) continue;
        seen[to] = true;
        via[to] = std::pair{u, PathStep{e, fwd}};
        queue.push_back(to);
      }
    }
  }
  std::vector<PathStep> back;
  for (std::size_t v = start; v != at; v = via[v]->first) back.push_back(via[v]->second);
  path.steps.insert(path.steps.end(), back.rbegin(), back.rend());
  return path;
}

}  // namespace testing_support
