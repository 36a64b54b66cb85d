#include "tubular/alexander.hpp"

#include <optional>

#include "tubular/error.hpp"

namespace tubular {

namespace {

std::int64_t exponent_of(const std::vector<Integer>& values, std::size_t gen) {
  if (gen >= values.size()) throw Error(ErrorCode::UnknownGenerator, "generator " + std::to_string(gen) + " has no value");
  return to_int64(values[gen]);
}

}  // namespace

LaurentPoly abelianize(const Word& w, const std::vector<Integer>& values) {
  Integer e = 0;
  for (const Letter& l : w) e += Integer(exponent_of(values, l.gen)) * l.exp;
  return LaurentPoly::monomial(1, to_int64(e));
}

LaurentPoly fox_derivative(const Word& w, std::size_t gen, const std::vector<Integer>& values) {
  if (gen >= values.size()) throw Error(ErrorCode::UnknownGenerator, "generator " + std::to_string(gen) + " has no value");
  LaurentPoly result;
  std::int64_t prefix = 0;  // chi of the part of w already read
  for (const Letter& l : w) {
    const std::int64_t c = exponent_of(values, l.gen);
    const std::int64_t n = to_int64(l.exp);
    if (l.gen == gen) {
      // d(x^n)/dx = 1 + t^c + ... + t^{(n-1)c}; for n < 0 it is -t^{-c} - ... - t^{nc}.
      if (n > 0)
        result += LaurentPoly::geometric_sum(c, n).shifted(prefix);
      else if (n < 0)
        result -= LaurentPoly::geometric_sum(c, -n).shifted(prefix + n * c);
    }
    prefix += n * c;
  }
  return result;
}

PolyMatrix alexander_matrix(const Presentation& pres, const CharacterZ& chi) {
  const auto values = generator_values(pres, chi);
  PolyMatrix m;
  for (const Word& r : pres.relators) {
    std::vector<LaurentPoly> row;
    for (std::size_t j = 0; j < pres.generators.size(); ++j) row.push_back(fox_derivative(r, j, values));
    m.push_back(std::move(row));
  }
  return m;
}

LaurentPoly determinant(PolyMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return LaurentPoly(1);
  for (const auto& row : a)
    if (row.size() != n) throw Error(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
  bool negate = false;
  LaurentPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t i = k + 1;
      while (i < n && a[i][k].is_zero()) ++i;
      if (i == n) return {};
      std::swap(a[i], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto q = exact_divide(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
        if (!q) throw Error(ErrorCode::InternalError, "fraction-free elimination lost exactness");
        a[i][j] = *q;
      }
      a[i][k] = LaurentPoly{};
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

namespace {

bool odd_permutation(std::vector<std::size_t> perm) {
  bool odd = false;
  for (std::size_t i = 0; i < perm.size(); ++i)
    while (perm[i] != i) {
      std::swap(perm[i], perm[perm[i]]);
      odd = !odd;
    }
  return odd;
}

}  // namespace

std::vector<LaurentPoly> maximal_minors(const PolyMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows + 1;
  for (const auto& row : m)
    if (row.size() != cols) throw Error(ErrorCode::ShapeMismatch, "matrix needs exactly one more column than rows");
  if (rows == 0) throw Error(ErrorCode::ShapeMismatch, "matrix has no rows");

  // Fraction-free Gauss-Jordan with row and column pivoting. Afterwards every
  // pivot row reads d e_{pivot} + x e_{free}, so (x_j) with x_free = -d spans
  // the kernel, and the kernel of a full-rank n x (n+1) matrix is spanned by
  // the signed maximal minors.
  PolyMatrix a = m;
  std::vector<std::size_t> row_of(rows);
  for (std::size_t i = 0; i < rows; ++i) row_of[i] = i;
  std::vector<std::size_t> pivot_col;
  std::vector<bool> used(cols, false);
  LaurentPoly prev(1);
  for (std::size_t k = 0; k < rows; ++k) {
    // Smallest-degree nonzero pivot keeps the intermediate entries short.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        if (used[j] || a[i][j].is_zero()) continue;
        if (!best || a[i][j].degree() < a[best->first][best->second].degree()) best = {i, j};
      }
    if (!best) return std::vector<LaurentPoly>(cols);
    const auto [r, c] = *best;
    std::swap(a[r], a[k]);
    std::swap(row_of[r], row_of[k]);
    used[c] = true;
    pivot_col.push_back(c);
    const LaurentPoly piv = a[k][c];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == k) continue;
      const LaurentPoly f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == c) continue;
        auto q = exact_divide(a[i][j] * piv - f * a[k][j], prev);
        if (!q) throw Error(ErrorCode::InternalError, "fraction-free elimination lost exactness");
        a[i][j] = std::move(*q);
      }
      a[i][c] = LaurentPoly{};
    }
    prev = piv;
  }
  std::size_t free_col = 0;
  while (used[free_col]) ++free_col;
  const LaurentPoly& d = prev;

  // d is the determinant of the original matrix with free_col deleted, up to
  // the sign of the row permutation and of the pivot column order.
  std::vector<std::size_t> rank_of(cols);
  for (std::size_t j = 0, r = 0; j < cols; ++j)
    if (j != free_col) rank_of[j] = r++;
  std::vector<std::size_t> column_perm;
  for (std::size_t c : pivot_col) column_perm.push_back(rank_of[c]);
  const bool negate = odd_permutation(row_of) != odd_permutation(column_perm);
  const LaurentPoly minor_free = negate ? -d : d;

  // Kernel vector x with x_free = d, x_{pivot_col[k]} = -a[k][free]; the minors
  // are (-1)^j x_j scaled so that entry free_col matches minor_free.
  std::vector<LaurentPoly> x(cols);
  x[free_col] = d;
  for (std::size_t k = 0; k < rows; ++k) x[pivot_col[k]] = -a[k][free_col];
  const bool flip = ((free_col % 2 == 1) != negate);
  std::vector<LaurentPoly> minors(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    const bool odd = j % 2 == 1;
    minors[j] = (odd != flip) ? -x[j] : x[j];
  }
  return minors;
}

CharCandidate char_candidate(const std::vector<LaurentPoly>& minors, const std::vector<Integer>& values) {
  for (std::size_t j = 0; j < minors.size() && j < values.size(); ++j) {
    if (values[j] == 0) continue;
    const LaurentPoly num = minors[j] * LaurentPoly::t_power_minus_one(1);
    auto q = exact_divide(num, LaurentPoly::t_power_minus_one(to_int64(abs(values[j]))));
    if (!q) throw Error(ErrorCode::NonDivisible, "minor " + std::to_string(j) + " is not divisible as expected");
    return {q->canonical(), j};
  }
  throw Error(ErrorCode::NoNonzeroGenerator, "character vanishes on every generator");
}

std::optional<Integer> biorder_index(const CyclotomicSplit& split) {
  if (split.remainder != LaurentPoly(1)) return std::nullopt;
  Integer i = 1;
  for (const auto& [d, mult] : split.orders) i = lcm(i, Integer(static_cast<long>(d)));
  return i;
}

bool fundamental_identity_holds(const PolyMatrix& m, const std::vector<Integer>& values) {
  for (const auto& row : m) {
    LaurentPoly sum;
    for (std::size_t j = 0; j < row.size(); ++j) sum += row[j] * LaurentPoly::t_power_minus_one(to_int64(values[j]));
    if (!sum.is_zero()) return false;
  }
  return true;
}

bool minor_ratio_identity_holds(const std::vector<LaurentPoly>& minors, const std::vector<Integer>& values) {
  for (std::size_t j = 0; j < minors.size(); ++j) {
    if (values[j] == 0) continue;
    for (std::size_t k = j + 1; k < minors.size(); ++k) {
      if (values[k] == 0) continue;
      const LaurentPoly lhs = minors[j] * LaurentPoly::t_power_minus_one(to_int64(abs(values[k])));
      const LaurentPoly rhs = minors[k] * LaurentPoly::t_power_minus_one(to_int64(abs(values[j])));
      if (!equal_up_to_units(lhs, rhs)) return false;
    }
  }
  return true;
}

AlexanderReport alexander_report(const TubularGraph& g, const CharacterZ& chi) {
  const Presentation pres = presentation(g);
  AlexanderReport r;
  r.character = chi;
  r.generator_values = generator_values(pres, chi);
  r.matrix = alexander_matrix(pres, chi);
  r.rows = r.matrix.size();
  r.cols = pres.generators.size();
  r.minors = maximal_minors(r.matrix);
  r.alexander_poly = laurent_gcd(r.minors);
  r.candidate = char_candidate(r.minors, r.generator_values);
  r.split = cyclotomic_split(r.candidate.poly);
  r.biorder = biorder_index(r.split);
  if (!r.biorder) {
    r.theorem_violation = true;
    r.diagnostic = "characteristic polynomial has the non-cyclotomic factor " + r.split.remainder.to_string();
  }
  r.fundamental_identity = fundamental_identity_holds(r.matrix, r.generator_values);
  r.minor_ratio_identity = minor_ratio_identity_holds(r.minors, r.generator_values);
  return r;
}

}  // namespace tubular
