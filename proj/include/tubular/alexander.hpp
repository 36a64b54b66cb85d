#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tubular/characters.hpp"
#include "tubular/graph.hpp"
#include "tubular/laurent.hpp"

namespace tubular {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

/// Free derivative of w with respect to generator gen, followed by
/// g -> t^{values[g]}. Throws UnknownGenerator.
LaurentPoly fox_derivative(const Word& w, std::size_t gen, const std::vector<Integer>& values);

/// t^{chi(w)}.
LaurentPoly abelianize(const Word& w, const std::vector<Integer>& values);

/// Rows are relators, columns generators.
PolyMatrix alexander_matrix(const Presentation& pres, const CharacterZ& chi);

/// Determinant by fraction-free elimination.
LaurentPoly determinant(PolyMatrix m);

/// minor_j is the determinant with column j deleted. Throws ShapeMismatch
/// unless there is exactly one more column than rows.
std::vector<LaurentPoly> maximal_minors(const PolyMatrix& m);

struct CharCandidate {
  LaurentPoly poly;  // canonical
  std::size_t column = 0;
};

/// minor_j (t-1) / (t^{|chi(g_j)|} - 1) for the first column with chi(g_j) != 0.
/// Throws NoNonzeroGenerator, NonDivisible.
CharCandidate char_candidate(const std::vector<LaurentPoly>& minors, const std::vector<Integer>& values);

/// lcm of the orders when the remainder is 1, otherwise nullopt.
std::optional<Integer> biorder_index(const CyclotomicSplit& split);

struct AlexanderReport {
  CharacterZ character;
  std::vector<Integer> generator_values;
  std::size_t rows = 0;
  std::size_t cols = 0;
  PolyMatrix matrix;
  std::vector<LaurentPoly> minors;
  LaurentPoly alexander_poly;
  CharCandidate candidate;
  CyclotomicSplit split;
  std::optional<Integer> biorder;
  /// Set when char_candidate has a non-cyclotomic factor.
  bool theorem_violation = false;
  std::string diagnostic;
  bool fundamental_identity = false;
  bool minor_ratio_identity = false;
};

/// Sum over columns of entry * (t^{chi(g)} - 1) vanishes on every row.
bool fundamental_identity_holds(const PolyMatrix& m, const std::vector<Integer>& values);

/// minor_j (t^{|c_k|} - 1) = +-t^s minor_k (t^{|c_j|} - 1) for all pairs of
/// columns with nonzero character values.
bool minor_ratio_identity_holds(const std::vector<LaurentPoly>& minors, const std::vector<Integer>& values);

/// Full computation for a free-by-Z graph with the given (normalized)
/// character.
AlexanderReport alexander_report(const TubularGraph& g, const CharacterZ& chi);

}  // namespace tubular
