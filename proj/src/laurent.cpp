#include "tubular/laurent.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>

#include "tubular/error.hpp"

namespace tubular {

LaurentPoly::LaurentPoly(std::int64_t low, std::vector<Integer> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
  trim();
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<std::int64_t>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

LaurentPoly LaurentPoly::monomial(const Integer& c, std::int64_t exponent) { return LaurentPoly(exponent, {c}); }

LaurentPoly LaurentPoly::t_power_minus_one(std::int64_t k) { return monomial(1, k) - monomial(1, 0); }

LaurentPoly LaurentPoly::geometric_sum(std::int64_t c, std::int64_t n) {
  std::map<std::int64_t, Integer> terms;
  for (std::int64_t i = 0; i < n; ++i) terms[i * c] += 1;
  return from_map(terms);
}

LaurentPoly LaurentPoly::from_map(const std::map<std::int64_t, Integer>& terms) {
  if (terms.empty()) return {};
  const std::int64_t low = terms.begin()->first;
  std::vector<Integer> c(static_cast<std::size_t>(terms.rbegin()->first - low + 1), 0);
  for (const auto& [e, v] : terms) c[static_cast<std::size_t>(e - low)] += v;
  return LaurentPoly(low, std::move(c));
}

Integer LaurentPoly::coefficient(std::int64_t e) const {
  if (is_zero() || e < low_ || e > high_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

std::map<std::int64_t, Integer> LaurentPoly::terms() const {
  std::map<std::int64_t, Integer> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out[low_ + static_cast<std::int64_t>(i)] = coeffs_[i];
  return out;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::canonical() const {
  if (is_zero()) return {};
  LaurentPoly r = shifted(-low_);
  if (r.leading_coefficient() < 0) r = -r;
  return r;
}

Integer LaurentPoly::content() const {
  Integer g = 0;
  for (const Integer& c : coeffs_) g = gcd(g, c);
  return g;
}

LaurentPoly LaurentPoly::primitive_part() const {
  if (is_zero()) return {};
  const Integer g = content();
  std::vector<Integer> c = coeffs_;
  for (Integer& x : c) x /= g;
  return LaurentPoly(low_, std::move(c));
}

LaurentPoly LaurentPoly::inverted() const {
  if (is_zero()) return {};
  std::vector<Integer> c(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPoly(-high_exponent(), std::move(c));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const std::int64_t low = std::min(low_, o.low_);
  const std::int64_t high = std::max(high_exponent(), o.high_exponent());
  std::vector<Integer> c(static_cast<std::size_t>(high - low + 1), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[static_cast<std::size_t>(low_ - low) + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[static_cast<std::size_t>(o.low_ - low) + i] += o.coeffs_[i];
  low_ = low;
  coeffs_ = std::move(c);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r = a;
  for (Integer& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return LaurentPoly(a.low_ + b.low_, std::move(c));
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    const std::int64_t e = low_ + static_cast<std::int64_t>(i);
    const Integer mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (e == 0 || mag != 1) os << mag;
    if (e != 0) {
      os << "t";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  if (a.is_zero()) return LaurentPoly{};
  std::vector<Integer> rem = a.coefficients();
  const std::vector<Integer>& den = b.coefficients();
  if (rem.size() < den.size()) return std::nullopt;
  std::vector<Integer> quot(rem.size() - den.size() + 1, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer& top = rem[k + den.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), den.back().get_mpz_t())) return std::nullopt;
    const Integer q = top / den.back();
    quot[k] = q;
    for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] -= q * den[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Integer& c) { return c != 0; })) return std::nullopt;
  return LaurentPoly(a.low_exponent() - b.low_exponent(), std::move(quot));
}

bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b) { return a.canonical() == b.canonical(); }

namespace {

// Pseudo-remainder of a by b, both with lowest exponent 0, reduced to its
// primitive part at every step to keep coefficients small.
LaurentPoly primitive_remainder(LaurentPoly a, const LaurentPoly& b) {
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const std::int64_t shift = a.high_exponent() - b.high_exponent();
    a = LaurentPoly(b.leading_coefficient()) * a - LaurentPoly::monomial(a.leading_coefficient(), shift) * b;
    a = a.primitive_part();
    // b has a nonzero constant term, so powers of t are irrelevant to the gcd.
    if (!a.is_zero()) a = a.shifted(-a.low_exponent());
  }
  return a;
}

LaurentPoly normalize_base(const LaurentPoly& p) { return p.canonical().primitive_part(); }

}  // namespace

LaurentPoly laurent_gcd(const std::vector<LaurentPoly>& ps) {
  LaurentPoly g;
  for (const LaurentPoly& p : ps) {
    if (p.is_zero()) continue;
    if (g.is_zero()) {
      g = normalize_base(p);
      continue;
    }
    LaurentPoly a = g;
    LaurentPoly b = normalize_base(p);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
      LaurentPoly r = primitive_remainder(a, b);
      a = b;
      b = r.is_zero() ? r : r.shifted(-r.low_exponent());
    }
    g = normalize_base(a);
  }
  return g;
}

std::int64_t totient(std::int64_t d) {
  std::int64_t result = d;
  std::int64_t n = d;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

int mobius(std::int64_t n) {
  int mu = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace

LaurentPoly cyclotomic(std::int64_t d) {
  if (d < 1) throw Error(ErrorCode::InternalError, "cyclotomic order must be positive");
  // Phi_d = prod_{k | d} (t^k - 1)^mu(d/k), multiplying and dividing by one
  // binomial at a time. The factors with mu = +1 go first so every division
  // stays exact.
  std::vector<std::int64_t> up, down;
  for (std::int64_t k = 1; k * k <= d; ++k) {
    if (d % k) continue;
    for (std::int64_t e : {k, d / k}) {
      const int mu = mobius(d / e);
      if (mu == 1) up.push_back(e);
      if (mu == -1) down.push_back(e);
      if (k * k == d) break;
    }
  }
  std::vector<Integer> c{1};
  for (std::int64_t k : up) {
    // c * (t^k - 1)
    std::vector<Integer> next(c.size() + static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + static_cast<std::size_t>(k)] += c[i];
      next[i] -= c[i];
    }
    c = std::move(next);
  }
  for (std::int64_t k : down) {
    // c / (t^k - 1): q_i = q_{i-k} - c_i, read from the bottom.
    const auto ks = static_cast<std::size_t>(k);
    std::vector<Integer> q(c.size() - ks, 0);
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = (i >= ks ? q[i - ks] : Integer(0)) - c[i];
    c = std::move(q);
  }
  return LaurentPoly(0, std::move(c)).canonical();
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  for (b %= m; e; e >>= 1, b = mul_mod(b, b, m))
    if (e & 1) r = mul_mod(r, b, m);
  return r;
}

// Miller-Rabin with a base set that is deterministic below 2^64.
bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (n % p == 0) return n == p;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// A prime l = 1 mod d near 2^40 and an element of exact order d modulo l.
// Phi_d(x) then vanishes mod l at that element.
std::pair<u64, u64> root_of_unity(std::int64_t d) {
  const auto ud = static_cast<u64>(d);
  const auto factors = prime_factors(d);
  for (u64 l = (u64{1} << 40) / ud * ud + 1;; l += ud) {
    if (!is_prime_u64(l)) continue;
    for (u64 a = 2; a < l; ++a) {
      const u64 w = pow_mod(a, (l - 1) / ud, l);
      bool exact = w != 1 || d == 1;
      for (std::int64_t q : factors)
        if (pow_mod(w, ud / static_cast<u64>(q), l) == 1) exact = false;
      if (exact) return {l, w};
    }
  }
}

// Value of p at w modulo l; p's lowest exponent is ignored, which only
// multiplies the value by a unit.
u64 evaluate_mod(const LaurentPoly& p, u64 w, u64 l) {
  u64 acc = 0;
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    const u64 ci = mpz_fdiv_ui(c[i].get_mpz_t(), static_cast<unsigned long>(l));
    acc = (mul_mod(acc, w, l) + ci) % l;
  }
  return acc;
}

// Every d with totient(d) <= bound, built from prime factorizations.
std::vector<std::int64_t> orders_with_small_totient(std::int64_t bound) {
  std::vector<std::int64_t> primes;
  std::vector<bool> composite(static_cast<std::size_t>(bound + 2), false);
  for (std::int64_t i = 2; i <= bound + 1; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    for (std::int64_t j = i * i; j <= bound + 1; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  std::vector<std::int64_t> out;
  std::function<void(std::size_t, std::int64_t, std::int64_t)> grow = [&](std::size_t from, std::int64_t d,
                                                                             std::int64_t phi) {
    out.push_back(d);
    for (std::size_t i = from; i < primes.size(); ++i) {
      const std::int64_t p = primes[i];
      if (phi * (p - 1) > bound) break;
      std::int64_t pk = p, phik = p - 1;
      while (phi * phik <= bound) {
        grow(i + 1, d * pk, phi * phik);
        pk *= p;
        phik *= p;
      }
    }
  };
  grow(0, 1, 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CyclotomicSplit cyclotomic_split(const LaurentPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot split the zero polynomial");
  CyclotomicSplit out;
  LaurentPoly rest = p.canonical();
  for (std::int64_t d : orders_with_small_totient(rest.degree())) {
    if (rest.degree() == 0) break;
    if (totient(d) > rest.degree()) continue;
    // A nonzero value at a d-th root of unity mod a prime rules Phi_d out;
    // exact division confirms every factor that survives.
    const auto [l, w] = root_of_unity(d);
    if (evaluate_mod(rest, w, l) != 0) continue;
    const LaurentPoly phi = cyclotomic(d);
    while (rest.degree() >= phi.degree()) {
      auto q = exact_divide(rest, phi);
      if (!q) break;
      rest = q->canonical();
      ++out.orders[d];
      if (rest.degree() < phi.degree() || evaluate_mod(rest, w, l) != 0) break;
    }
  }
  out.remainder = rest.canonical();
  return out;
}

}  // namespace tubular
