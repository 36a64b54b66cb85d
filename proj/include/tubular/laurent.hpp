#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tubular/integer.hpp"

namespace tubular {

/// Element of Z[t, t^-1], stored densely from its lowest exponent.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Integer& c) : LaurentPoly(monomial(c, 0)) {}  // NOLINT: implicit constant
  LaurentPoly(std::int64_t low, std::vector<Integer> coeffs);

  static LaurentPoly monomial(const Integer& c, std::int64_t exponent);
  /// t^k - 1 (k may be negative).
  static LaurentPoly t_power_minus_one(std::int64_t k);
  /// 1 + t^c + ... + t^((n-1)c) for n > 0; the Fox derivative of x^n.
  static LaurentPoly geometric_sum(std::int64_t c, std::int64_t n);
  static LaurentPoly from_map(const std::map<std::int64_t, Integer>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t low_exponent() const { return low_; }
  std::int64_t high_exponent() const { return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
  /// high - low; 0 for the zero polynomial.
  std::int64_t degree() const { return is_zero() ? 0 : high_exponent() - low_; }
  Integer coefficient(std::int64_t e) const;
  const Integer& leading_coefficient() const { return coeffs_.back(); }
  /// Coefficients from the lowest exponent upward.
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  std::map<std::int64_t, Integer> terms() const;

  /// Multiplies by t^k.
  LaurentPoly shifted(std::int64_t k) const;
  /// Unit normalization: lowest exponent 0, positive leading coefficient.
  LaurentPoly canonical() const;
  /// gcd of the coefficients (0 for the zero polynomial).
  Integer content() const;
  LaurentPoly primitive_part() const;
  /// Substitutes t -> t^-1.
  LaurentPoly inverted() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const;

 private:
  void trim();

  std::int64_t low_ = 0;
  std::vector<Integer> coeffs_;
};

/// Exact quotient a / b in Z[t^+-1], or nullopt if b does not divide a.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// True iff a = +-t^s b for some s.
bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b);

/// gcd over Q[t] of the nonzero entries as a primitive integer polynomial in
/// canonical form; 0 if every entry is zero.
LaurentPoly laurent_gcd(const std::vector<LaurentPoly>& ps);

/// The d-th cyclotomic polynomial.
LaurentPoly cyclotomic(std::int64_t d);

/// Euler's totient.
std::int64_t totient(std::int64_t d);

struct CyclotomicSplit {
  std::map<std::int64_t, unsigned> orders;  // d -> multiplicity
  LaurentPoly remainder;                    // canonical, 1 if fully split
};

/// Trial division by cyclotomic polynomials. Throws ZeroPolynomial.
CyclotomicSplit cyclotomic_split(const LaurentPoly& p);

}  // namespace tubular
