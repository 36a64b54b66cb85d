#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "tubular/graph.hpp"

namespace tubular {

/// A homomorphism from the tubular group to Z (or Q): values (m_v, n_v) on the
/// basis of each vertex group and a value on each stable letter.
template <class Scalar>
struct Character {
  std::vector<std::array<Scalar, 2>> vertex;
  std::map<std::size_t, Scalar> stable;  // keyed by non-tree edge id

  Scalar value_at(std::size_t v, const LatticeVec& w) const {
    return vertex[v][0] * w.p + vertex[v][1] * w.q;
  }

  friend bool operator==(const Character&, const Character&) = default;
};

using CharacterZ = Character<Integer>;
using CharacterQ = Character<Rational>;

/// Value on the edge group generator, read at the source end.
Integer edge_value(const TubularGraph& g, const CharacterZ& chi, std::size_t e);
Rational edge_value(const TubularGraph& g, const CharacterQ& chi, std::size_t e);

/// True iff every edge equation holds and the stable letters match the
/// non-tree edges of g.
bool is_homomorphism(const TubularGraph& g, const CharacterZ& chi);

/// Values on the generators of presentation(g), in generator order.
std::vector<Integer> generator_values(const Presentation& pres, const CharacterZ& chi);
CharacterZ character_from_generator_values(const Presentation& pres, std::size_t vertex_count,
                                           const std::vector<Integer>& values);

/// gcd of all stored values.
Integer content(const CharacterZ& chi);

/// Z-basis of Hom(G, Z), in Hermite normal form order over the generators.
std::vector<CharacterZ> hom_basis(const TubularGraph& g);

struct FbycResult {
  /// Surjective character nonzero on every edge, stable letters sent to zero.
  std::optional<CharacterZ> character;
  /// The character found by the search before normalization.
  std::optional<CharacterZ> raw;
  /// The successful search parameter k (coefficients 1, k, k^2, ...).
  std::optional<Integer> search_parameter;
  /// When no character exists: an edge on which every homomorphism vanishes.
  std::optional<std::size_t> witness_edge;
  std::size_t hom_rank = 0;

  bool found() const { return character.has_value(); }
};

/// Decides whether some homomorphism G -> Z is nonzero on every edge group.
FbycResult find_fbyc_character(const TubularGraph& g);

/// Sends every stable letter to zero and divides by the gcd. Throws AllZero.
CharacterZ normalize_character(const CharacterZ& chi);

/// Clears denominators with the lcm, then divides by the gcd of the result.
CharacterZ scale_to_integer(const CharacterQ& chi);

struct TreeExtensionRequest {
  /// Edges spanning the tree to extend over (must be acyclic).
  std::vector<std::size_t> tree_edges;
  std::size_t root = 0;
  std::array<Rational, 2> root_values;
  /// Required values on particular edges of the tree.
  std::map<std::size_t, Rational> prescribed;
  /// Edges (tree or not) whose value must be nonzero when both ends are reached.
  std::set<std::size_t> nonzero;
  /// Reject non-primitive inclusions into newly reached vertices, as for
  /// direct-summand edge groups. When false the extension is taken over Q.
  bool require_primitive = true;
};

/// Extends a homomorphism on the root vertex group across a tree of the graph.
/// Each newly reached vertex gets the forced value on its incoming inclusion
/// plus a free parameter times (q,-p), chosen as the smallest nonnegative
/// integer avoiding every excluded value (including the one killing the whole
/// vertex group). Returns values for the vertices reached; others are absent.
std::map<std::size_t, std::array<Rational, 2>> extend_over_tree(const TubularGraph& g,
                                                                const TreeExtensionRequest& request);

}  // namespace tubular
