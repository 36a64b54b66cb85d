#pragma once

#include <cstddef>
#include <vector>

#include "tubular/characters.hpp"
#include "tubular/graph.hpp"

namespace tubular {

/// A finite family of lattice vectors at every vertex.
struct EquitableSet {
  std::vector<std::vector<LatticeVec>> families;

  friend bool operator==(const EquitableSet&, const EquitableSet&) = default;
};

/// #[x,s] = |det(x,s)|.
Integer intersection_number(const LatticeVec& x, const LatticeVec& s);

struct EdgeBalance {
  Integer src_sum;
  Integer dst_sum;
  bool balanced() const { return src_sum == dst_sum; }
};

struct EquitableReport {
  bool ok = false;
  std::vector<EdgeBalance> edge_sums;
  /// |det| of the first pair (in family order) with nonzero determinant; 0 if
  /// the family does not span a finite-index subgroup.
  std::vector<Integer> span_index;
};

/// Checks that every family spans a finite-index subgroup and that each edge
/// has equal intersection sums at its two ends. Throws MissingVertexFamily.
EquitableReport verify_equitable(const TubularGraph& g, const EquitableSet& set);

struct EquitableConstruction {
  EquitableSet set;
  /// Vertex all others were contracted onto.
  std::size_t root = 0;
  /// Per vertex, the |det| = 1 rational map from its group onto the root group.
  std::vector<Mat2Q> to_root;
  /// The two rational points on the line m x + n y = l at the root, in the
  /// root coordinates after any basis swap.
  std::array<RationalVec, 2> root_points;
  bool swapped_root_basis = false;
  /// Global factor clearing all denominators.
  Integer multiplier;
};

/// Builds two vectors per vertex from a character nonzero on every edge:
/// contract a spanning tree with determinant-one maps that respect the
/// character, solve the bouquet on the line m x + n y = l, pull back, and clear
/// denominators. Throws CharacterZeroOnEdge.
EquitableConstruction construct_equitable_detailed(const TubularGraph& g, const CharacterZ& chi);
EquitableSet construct_equitable(const TubularGraph& g, const CharacterZ& chi);

}  // namespace tubular
