#include "tubular/random_graph.hpp"

#include <array>

#include "tubular/error.hpp"

namespace tubular {

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

LatticeVec random_vector(std::mt19937_64& rng, const RandomGraphOptions& opt) {
  for (;;) {
    LatticeVec v{uniform(rng, -opt.entry_bound, opt.entry_bound), uniform(rng, -opt.entry_bound, opt.entry_bound)};
    if (v.is_zero()) continue;
    if (!opt.allow_non_primitive && !is_primitive(v)) continue;
    return v;
  }
}

Integer apply(const std::array<Integer, 2>& chi, const LatticeVec& v) { return chi[0] * v.p + chi[1] * v.q; }

// An edge whose two inclusions take the same nonzero value under the two
// vertex characters.
std::pair<LatticeVec, LatticeVec> compatible_pair(std::mt19937_64& rng, const RandomGraphOptions& opt,
                                                  const std::array<Integer, 2>& chi_src,
                                                  const std::array<Integer, 2>& chi_dst) {
  const ExtGcd eg = ext_gcd(chi_dst[0], chi_dst[1]);
  for (;;) {
    const LatticeVec a = random_vector(rng, opt);
    const Integer s = apply(chi_src, a);
    if (s == 0) continue;
    for (int attempt = 0; attempt < 8; ++attempt) {
      const Integer k = uniform(rng, -2, 2);
      const LatticeVec b{s * eg.alpha + k * chi_dst[1], s * eg.beta - k * chi_dst[0]};
      if (!opt.allow_non_primitive && !is_primitive(b)) continue;
      return {a, b};
    }
  }
}

}  // namespace

TubularGraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& opt) {
  if (opt.min_vertices == 0 || opt.min_vertices > opt.max_vertices)
    throw Error(ErrorCode::InternalError, "bad vertex range for random graph");
  TubularGraph g;
  const auto n = static_cast<std::size_t>(
      uniform(rng, static_cast<std::int64_t>(opt.min_vertices), static_cast<std::int64_t>(opt.max_vertices)));
  for (std::size_t v = 0; v < n; ++v) g.vertices.push_back("v" + std::to_string(v));

  std::vector<std::array<Integer, 2>> chi(n);
  if (opt.force_fbyc) {
    for (auto& c : chi) {
      LatticeVec v;
      do {
        v = {uniform(rng, -opt.entry_bound, opt.entry_bound), uniform(rng, -opt.entry_bound, opt.entry_bound)};
      } while (!is_primitive(v));
      c = {v.p, v.q};
    }
  }

  auto add_edge = [&](std::size_t src, std::size_t dst) {
    Edge e;
    e.name = "e" + std::to_string(g.edges.size());
    e.src = src;
    e.dst = dst;
    if (opt.force_fbyc) {
      std::tie(e.inc_src, e.inc_dst) = compatible_pair(rng, opt, chi[src], chi[dst]);
    } else {
      e.inc_src = random_vector(rng, opt);
      e.inc_dst = random_vector(rng, opt);
    }
    g.edges.push_back(e);
  };

  for (std::size_t v = 1; v < n; ++v) {
    const auto parent = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(v) - 1));
    if (uniform(rng, 0, 1))
      add_edge(parent, v);
    else
      add_edge(v, parent);
  }
  const std::size_t loops =
      opt.loops ? *opt.loops : static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(opt.max_loops)));
  for (std::size_t i = 0; i < loops; ++i) {
    const auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
    const auto b = opt.self_loops_only ? a : static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
    add_edge(a, b);
  }
  return g;
}

}  // namespace tubular
