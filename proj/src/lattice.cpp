#include "tubular/lattice.hpp"

#include <utility>

#include "tubular/error.hpp"

namespace tubular {

std::int64_t to_int64(const Integer& a) {
  if (!a.fits_slong_p()) throw Error(ErrorCode::InternalError, "integer " + a.get_str() + " exceeds 64 bits");
  return a.get_si();
}

LatticeVec operator+(const LatticeVec& a, const LatticeVec& b) { return {a.p + b.p, a.q + b.q}; }
LatticeVec operator-(const LatticeVec& a) { return {-a.p, -a.q}; }
LatticeVec operator*(const Integer& c, const LatticeVec& v) { return {c * v.p, c * v.q}; }
RationalVec operator*(const Rational& c, const RationalVec& v) { return {c * v.p, c * v.q}; }

std::ostream& operator<<(std::ostream& os, const LatticeVec& v) {
  return os << '(' << v.p << ',' << v.q << ')';
}

std::ostream& operator<<(std::ostream& os, const RationalVec& v) {
  return os << '(' << v.p << ',' << v.q << ')';
}

Integer content(const LatticeVec& v) { return gcd(v.p, v.q); }

bool is_primitive(const LatticeVec& v) { return content(v) == 1; }

LatticeVec primitive_part(const LatticeVec& v) {
  Integer g = content(v);
  if (g == 0) return v;
  return {v.p / g, v.q / g};
}

ExtGcd ext_gcd(const Integer& a, const Integer& b) {
  // Iterative Euclid on (|a|,|b|), signs restored at the end.
  Integer old_r = abs(a), r = abs(b);
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer quot = old_r / r;
    Integer tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
    tmp = old_t - quot * t;
    old_t = t;
    t = tmp;
  }
  if (old_r == 0) return {0, 0, 0};
  if (a < 0) old_s = -old_s;
  if (b < 0) old_t = -old_t;
  return {old_r, old_s, old_t};
}

Integer det2(const LatticeVec& u, const LatticeVec& v) { return u.p * v.q - u.q * v.p; }

Rational det2(const RationalVec& u, const RationalVec& v) {
  Rational d = u.p * v.q - u.q * v.p;
  return d;
}

Mat2Q Mat2Q::inverse() const {
  Rational d = det();
  if (d == 0) throw Error(ErrorCode::InternalError, "singular 2x2 matrix");
  // inverse of [[a,b],[c,d]] is [[d,-b],[-c,a]] / det
  const Rational& a = at(0, 0);
  const Rational& b = at(0, 1);
  const Rational& c = at(1, 0);
  const Rational& e = at(1, 1);
  Rational c00 = e / d, c10 = -c / d, c01 = -b / d, c11 = a / d;
  return Mat2Q(RationalVec{c00, c10}, RationalVec{c01, c11});
}

bool Mat2Q::is_integral() const {
  for (const auto& c : cols_)
    if (!tubular::is_integral(c.p) || !tubular::is_integral(c.q)) return false;
  return true;
}

RationalVec Mat2Q::operator*(const RationalVec& v) const {
  Rational p = cols_[0].p * v.p + cols_[1].p * v.q;
  Rational q = cols_[0].q * v.p + cols_[1].q * v.q;
  return {p, q};
}

Mat2Q Mat2Q::operator*(const Mat2Q& other) const {
  return Mat2Q(*this * other.column(0), *this * other.column(1));
}

LatticeVec to_lattice(const RationalVec& v) {
  if (!is_integral(v.p) || !is_integral(v.q)) {
    throw Error(ErrorCode::InternalError, "expected an integral vector");
  }
  return {v.p.get_num(), v.q.get_num()};
}

SublatticeBasis congruence_sublattice_basis(const Integer& m, const Integer& n, const Integer& M) {
  if (M < 1) throw Error(ErrorCode::InternalError, "modulus must be positive");
  // (p,0) lies in the lattice iff M | p*m.
  Integer g1 = gcd(m, M);
  Integer d1 = M / g1;
  // Some (p,q) exists iff q*n lies in the subgroup generated by m and M.
  Integer d2 = g1 / gcd(n, g1);
  // Solve c*m = -d2*n (mod M), i.e. c*(m/g1) = -(d2*n/g1) (mod d1).
  Integer c = 0;
  if (d1 > 1) {
    Integer rhs = mod(-(d2 * n) / g1, d1);
    ExtGcd eg = ext_gcd(mod(m / g1, d1), d1);
    c = mod(rhs * eg.alpha, d1);
  }
  LatticeVec col0{d1, 0};
  LatticeVec col1{c, d2};
  if (mod(col1.p * m + col1.q * n, M) != 0)
    throw Error(ErrorCode::InternalError, "congruence basis construction failed");
  return {Mat2Q::from_columns(col0, col1), d1 * d2};
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw Error(ErrorCode::ShapeMismatch, "matrix data size mismatch");
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Integer> IntMatrix::apply(const std::vector<Integer>& x) const {
  if (x.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "vector length mismatch");
  std::vector<Integer> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

namespace {

// Unimodular row reduction restricted to the first `width` columns. Returns the
// number of pivot rows; rows below it vanish on those columns. When `reduce`
// is set, entries above pivots are brought into [0, pivot).
std::size_t echelon(IntMatrix& a, std::size_t width, bool reduce) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < width && pivot_row < a.rows(); ++col) {
    for (std::size_t i = pivot_row + 1; i < a.rows(); ++i) {
      if (a(i, col) == 0) continue;
      if (a(pivot_row, col) == 0) {
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot_row, j), a(i, j));
        continue;
      }
      // [alpha beta; -b/g a/g] has determinant 1.
      Integer x = a(pivot_row, col);
      Integer y = a(i, col);
      ExtGcd eg = ext_gcd(x, y);
      Integer xg = x / eg.g, yg = y / eg.g;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        Integer top = eg.alpha * a(pivot_row, j) + eg.beta * a(i, j);
        Integer bottom = xg * a(i, j) - yg * a(pivot_row, j);
        a(pivot_row, j) = top;
        a(i, j) = bottom;
      }
    }
    if (a(pivot_row, col) == 0) continue;
    if (a(pivot_row, col) < 0)
      for (std::size_t j = 0; j < a.cols(); ++j) a(pivot_row, j) = -a(pivot_row, j);
    if (reduce) {
      const Integer pivot = a(pivot_row, col);
      for (std::size_t i = 0; i < pivot_row; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, col).get_mpz_t(), pivot.get_mpz_t());
        if (q == 0) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= q * a(pivot_row, j);
      }
    }
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace

IntMatrix row_hnf(const IntMatrix& a) {
  IntMatrix work = a;
  std::size_t r = echelon(work, work.cols(), true);
  IntMatrix out(r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = work(i, j);
  return out;
}

std::size_t rank(const IntMatrix& a) {
  IntMatrix work = a;
  return echelon(work, work.cols(), false);
}

std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  const std::size_t m = a.rows();
  // Rows of [A^T | I]; reducing the A^T block leaves kernel vectors in the
  // identity block of the vanishing rows.
  IntMatrix aug(n, m + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug(i, j) = a(j, i);
    aug(i, m + i) = 1;
  }
  std::size_t r = echelon(aug, m, false);
  IntMatrix kernel(n - r, n);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) kernel(i - r, j) = aug(i, m + j);
  IntMatrix canonical = row_hnf(kernel);
  std::vector<std::vector<Integer>> basis;
  for (std::size_t i = 0; i < canonical.rows(); ++i) basis.push_back(canonical.row(i));
  return basis;
}

}  // namespace tubular
