#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tubular/characters.hpp"
#include "tubular/graph.hpp"

namespace tubular {

struct VertexFiber {
  std::size_t base_vertex = 0;
  Integer coset;
  /// Columns are the cover vertex basis written in the base vertex basis.
  Mat2Q basis_change;
};

struct EdgeFiber {
  std::size_t base_edge = 0;
  Integer coset;
  /// The lifted edge group is generated by the d-th power of the base one.
  Integer power;
};

struct CoverResult {
  TubularGraph cover;
  Integer index;
  std::vector<VertexFiber> vertex_fiber;  // indexed by cover vertex
  std::vector<EdgeFiber> edge_fiber;      // indexed by cover edge
  /// lcm of the edge values for the maximality cover; absent otherwise.
  std::optional<Integer> modulus;
};

/// Cover of index M = lcm |edge values| in which every lifted inclusion is
/// primitive. Throws NonSurjectiveCharacter, ZeroEdgeValue.
CoverResult maximality_cover(const TubularGraph& g, const CharacterZ& chi);

/// Cover of index 2^b from G -> (Z/2)^b killing vertex groups and sending the
/// i-th stable letter to e_i. Vertices are ordered base-vertex-major within
/// each homology class, classes in increasing bitmask order.
CoverResult homology2_cover(const TubularGraph& g);

/// Checks that the fiber tables are consistent: each base vertex and edge has
/// fiber indices summing to the cover index, and the cover is connected.
bool fiber_sums_consistent(const TubularGraph& base, const CoverResult& cover);

struct PathStep {
  std::size_t edge;
  bool forward;  // traverse src -> dst
};

struct CoverPath {
  std::size_t start = 0;
  std::vector<PathStep> steps;
};

/// True iff the projection of the closed path uses every base edge an even
/// number of times. Throws PathNotClosed.
bool even_multiplicity_check(const TubularGraph& base, const CoverResult& cover, const CoverPath& path);

struct STAWitness {
  std::optional<CoverResult> stage1;
  CoverResult stage2;
  Integer total_index;
  bool all_inclusions_maximal = false;
  bool no_self_loops = false;
  /// Character used for stage1, when present.
  std::optional<CharacterZ> character;
  /// Optional externally supplied index for comparison.
  std::optional<Integer> reference_index;
  std::vector<std::string> notes;

  bool certified() const { return all_inclusions_maximal && no_self_loops; }
};

struct StaOutcome {
  std::optional<STAWitness> witness;
  /// Why no witness was produced.
  std::string inapplicable_reason;

  bool applicable() const { return witness.has_value(); }
};

bool all_inclusions_primitive(const TubularGraph& g);
bool has_self_loop(const TubularGraph& g);

/// Homology cover when every inclusion is already maximal; otherwise the
/// maximality cover from the free-by-Z character followed by its homology
/// cover. Inapplicable when neither hypothesis holds.
StaOutcome sta_pipeline(const TubularGraph& g);

/// Records a reference index and adds a note when it differs from the
/// computed one.
void compare_reference_index(STAWitness& witness, const Integer& reference);

}  // namespace tubular
