#include <doctest.h>

#include <random>

#include "tubular/error.hpp"
#include "tubular/lattice.hpp"

using namespace tubular;

TEST_CASE("ext_gcd small cases") {
  auto z = ext_gcd(0, 0);
  CHECK(z.g == 0);
  CHECK(z.alpha == 0);
  CHECK(z.beta == 0);
  auto one = ext_gcd(1, 0);
  CHECK(one.g == 1);
  CHECK(one.alpha == 1);
  CHECK(one.beta == 0);
  auto r = ext_gcd(6, 4);
  CHECK(r.g == 2);
  CHECK(r.alpha * 6 + r.beta * 4 == 2);
}

TEST_CASE("ext_gcd bezout identity on random input") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-500, 500);
  for (int i = 0; i < 2000; ++i) {
    Integer a = d(rng), b = d(rng);
    auto r = ext_gcd(a, b);
    CHECK(r.g >= 0);
    CHECK(r.alpha * a + r.beta * b == r.g);
    CHECK(r.g == gcd(a, b));
  }
}

TEST_CASE("det2") {
  CHECK(det2(LatticeVec{1, 0}, LatticeVec{0, 1}) == 1);
  CHECK(det2(LatticeVec{2, -1}, LatticeVec{-1, 2}) == 3);
  CHECK(det2(LatticeVec{5, 7}, LatticeVec{5, 7}) == 0);
  CHECK(det2(RationalVec{Rational(1, 2), 0}, RationalVec{0, 4}) == 2);
}

TEST_CASE("primitive part and content") {
  CHECK(primitive_part(LatticeVec{4, 6}) == LatticeVec{2, 3});
  CHECK(primitive_part(LatticeVec{0, 0}) == LatticeVec{0, 0});
  CHECK(content(LatticeVec{-4, 0}) == 4);
  CHECK(is_primitive(LatticeVec{-1, 3}));
  CHECK_FALSE(is_primitive(LatticeVec{2, 0}));
}

TEST_CASE("Mat2Q inverse and products") {
  Mat2Q m = Mat2Q::from_columns({2, 0}, {1, 1});
  CHECK(m.det() == 2);
  CHECK(m * m.inverse() == Mat2Q::identity());
  CHECK_FALSE(m.inverse().is_integral());
  CHECK_THROWS_AS(Mat2Q::from_columns({1, 2}, {2, 4}).inverse(), Error);
  CHECK(to_lattice(m * LatticeVec{1, 1}) == LatticeVec{3, 1});
  CHECK_THROWS_AS(to_lattice(RationalVec{Rational(1, 2), 0}), Error);
}

TEST_CASE("congruence sublattice basis examples") {
  auto a = congruence_sublattice_basis(1, 1, 2);
  CHECK(a.index == 2);
  CHECK(a.basis == Mat2Q::from_columns({2, 0}, {1, 1}));
  auto b = congruence_sublattice_basis(3, -7, 1);
  CHECK(b.index == 1);
  CHECK(b.basis == Mat2Q::identity());
  auto c = congruence_sublattice_basis(2, 0, 2);
  CHECK(c.index == 1);
  CHECK(c.basis == Mat2Q::identity());
}

TEST_CASE("congruence sublattice basis matches enumeration") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> entry(-6, 6);
  std::uniform_int_distribution<long> modulus(1, 9);
  for (int i = 0; i < 300; ++i) {
    const Integer m = entry(rng), n = entry(rng), M = modulus(rng);
    auto s = congruence_sublattice_basis(m, n, M);
    const Integer d1 = s.basis.at(0, 0).get_num(), c = s.basis.at(0, 1).get_num(), d2 = s.basis.at(1, 1).get_num();
    CHECK(s.basis.at(1, 0) == 0);
    CHECK(d1 > 0);
    CHECK(d2 > 0);
    CHECK(c >= 0);
    CHECK(c < d1);
    CHECK(s.index == d1 * d2);
    // Every point of a box lies in the lattice iff it satisfies the congruence.
    for (long p = -8; p <= 8; ++p)
      for (long q = -8; q <= 8; ++q) {
        const bool congruent = mod(m * p + n * q, M) == 0;
        const Rational y = Rational(q) / d2;
        const Rational x = (Rational(p) - y * c) / d1;
        CHECK(congruent == (is_integral(x) && is_integral(y)));
      }
  }
}

TEST_CASE("integer kernel examples") {
  CHECK(integer_kernel(IntMatrix(1, 2)) == std::vector<std::vector<Integer>>{{1, 0}, {0, 1}});
  CHECK(integer_kernel(IntMatrix(1, 2, {1, -1})) == std::vector<std::vector<Integer>>{{1, 1}});
  auto k = integer_kernel(IntMatrix(2, 2, {1, 2, 2, 4}));
  REQUIRE(k.size() == 1);
  CHECK(((k[0] == std::vector<Integer>{2, -1}) || (k[0] == std::vector<Integer>{-2, 1})));
}

TEST_CASE("integer kernel is annihilated and saturated") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> entry(-4, 4);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int i = 0; i < 300; ++i) {
    const std::size_t r = dim(rng), c = dim(rng) + 1;
    std::vector<Integer> data;
    for (std::size_t k = 0; k < r * c; ++k) data.push_back(entry(rng));
    IntMatrix a(r, c, data);
    auto ker = integer_kernel(a);
    CHECK(ker.size() == c - rank(a));
    for (const auto& x : ker)
      for (const auto& y : a.apply(x)) CHECK(y == 0);
    if (ker.size() == 1) {
      Integer g = 0;
      for (const auto& x : ker[0]) g = gcd(g, x);
      CHECK(g == 1);
    }
  }
}

TEST_CASE("row HNF is echelon with reduced entries") {
  IntMatrix a(2, 3, {2, 4, 6, 0, 3, 1});
  IntMatrix h = row_hnf(a);
  CHECK(h.rows() == 2);
  CHECK(h(0, 0) == 2);
  CHECK(h(1, 0) == 0);
  CHECK(h(1, 1) == 3);
  CHECK(h(0, 1) >= 0);
  CHECK(h(0, 1) < 3);
}
