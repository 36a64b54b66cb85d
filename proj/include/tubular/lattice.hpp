#pragma once

#include <array>
#include <cstddef>
#include <ostream>
#include <vector>

#include "tubular/integer.hpp"

namespace tubular {

/// An element of a vertex group Z^2 written in that vertex's fixed basis.
struct LatticeVec {
  Integer p;
  Integer q;

  bool is_zero() const { return p == 0 && q == 0; }
  friend bool operator==(const LatticeVec&, const LatticeVec&) = default;
};

struct RationalVec {
  Rational p;
  Rational q;

  RationalVec() = default;
  RationalVec(Rational p_, Rational q_) : p(std::move(p_)), q(std::move(q_)) {}
  explicit RationalVec(const LatticeVec& v) : p(v.p), q(v.q) {}

  friend bool operator==(const RationalVec&, const RationalVec&) = default;
};

LatticeVec operator+(const LatticeVec& a, const LatticeVec& b);
LatticeVec operator-(const LatticeVec& a);
LatticeVec operator*(const Integer& c, const LatticeVec& v);
RationalVec operator*(const Rational& c, const RationalVec& v);
std::ostream& operator<<(std::ostream& os, const LatticeVec& v);
std::ostream& operator<<(std::ostream& os, const RationalVec& v);

bool is_primitive(const LatticeVec& v);
/// Divides by gcd(|p|,|q|); the zero vector is returned unchanged.
LatticeVec primitive_part(const LatticeVec& v);
/// gcd(|p|,|q|).
Integer content(const LatticeVec& v);

struct ExtGcd {
  Integer g;
  Integer alpha;
  Integer beta;
};

/// g = gcd(|a|,|b|) with alpha*a + beta*b = g.
ExtGcd ext_gcd(const Integer& a, const Integer& b);

/// Signed determinant u.p*v.q - u.q*v.p.
Integer det2(const LatticeVec& u, const LatticeVec& v);
Rational det2(const RationalVec& u, const RationalVec& v);

/// 2x2 rational matrix stored as two columns; column j is the image of the
/// j-th standard basis vector.
class Mat2Q {
 public:
  Mat2Q() : Mat2Q(RationalVec{1, 0}, RationalVec{0, 1}) {}
  Mat2Q(RationalVec col0, RationalVec col1) : cols_{std::move(col0), std::move(col1)} {}

  static Mat2Q identity() { return Mat2Q(); }
  static Mat2Q from_columns(const LatticeVec& c0, const LatticeVec& c1) {
    return Mat2Q(RationalVec(c0), RationalVec(c1));
  }

  const RationalVec& column(std::size_t j) const { return cols_[j]; }
  /// Entry at row i, column j.
  const Rational& at(std::size_t i, std::size_t j) const {
    return i == 0 ? cols_[j].p : cols_[j].q;
  }

  Rational det() const { return det2(cols_[0], cols_[1]); }
  /// Throws InternalError when singular.
  Mat2Q inverse() const;
  bool is_integral() const;

  RationalVec operator*(const RationalVec& v) const;
  RationalVec operator*(const LatticeVec& v) const { return *this * RationalVec(v); }
  Mat2Q operator*(const Mat2Q& other) const;

  friend bool operator==(const Mat2Q&, const Mat2Q&) = default;

 private:
  std::array<RationalVec, 2> cols_;
};

/// Throws InternalError unless both coordinates are integers.
LatticeVec to_lattice(const RationalVec& v);

struct SublatticeBasis {
  Mat2Q basis;
  Integer index;
};

/// Basis of {(p,q) : p*m + q*n = 0 mod M} with columns (d1,0) and (c,d2),
/// d1,d2 > 0 and 0 <= c < d1.
SublatticeBasis congruence_sublattice_basis(const Integer& m, const Integer& n, const Integer& M);

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> data);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Integer> row(std::size_t i) const;
  std::vector<Integer> apply(const std::vector<Integer>& x) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Row Hermite normal form: echelon, positive pivots, entries above each pivot
/// reduced into [0, pivot). Zero rows are dropped.
IntMatrix row_hnf(const IntMatrix& a);

/// Rank over Q.
std::size_t rank(const IntMatrix& a);

/// Z-basis of the saturated kernel {x : A x = 0}, returned as the rows of its
/// row Hermite normal form.
std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& a);

}  // namespace tubular
