#include <doctest.h>

#include <random>

#include "../support.hpp"
#include "tubular/corpus.hpp"
#include "tubular/error.hpp"
#include "tubular/random_graph.hpp"

using namespace tubular;

namespace {

LaurentPoly poly(std::vector<Integer> c, std::int64_t low = 0) { return LaurentPoly(low, std::move(c)); }

const LaurentPoly t_minus_1 = poly({-1, 1});
const LaurentPoly one_minus_t = poly({1, -1});

CharacterZ normalized(const TubularGraph& g) { return *find_fbyc_character(g).character; }

}  // namespace

TEST_CASE("Laurent polynomial arithmetic") {
  CHECK((t_minus_1 * t_minus_1).to_string() == "t^2 - 2t + 1");
  CHECK((t_minus_1 + one_minus_t).is_zero());
  CHECK(LaurentPoly::monomial(3, -2).low_exponent() == -2);
  CHECK(LaurentPoly::t_power_minus_one(-2) == poly({1, 0, -1}, -2));
  CHECK(LaurentPoly::geometric_sum(2, 3) == poly({1, 0, 1, 0, 1}));
  CHECK(poly({0, 0, 2, 0}).low_exponent() == 2);
  CHECK(poly({0, 0, 2, 0}).degree() == 0);
  CHECK(poly({2, 4}, -1).content() == 2);
  CHECK(poly({-2, 0, 4}, 3).canonical() == poly({-2, 0, 4}));
  CHECK(poly({2, 0, -4}, 3).canonical() == poly({-2, 0, 4}));
  CHECK(poly({1, 2}, 1).inverted() == poly({2, 1}, -2));
  CHECK(equal_up_to_units(one_minus_t.shifted(5), t_minus_1));
  CHECK_FALSE(equal_up_to_units(poly({1, 1}), t_minus_1));
}

TEST_CASE("exact division") {
  CHECK(*exact_divide(poly({-1, 0, 1}), t_minus_1) == poly({1, 1}));
  CHECK_FALSE(exact_divide(poly({1, 0, 1}), t_minus_1).has_value());
  CHECK(exact_divide(LaurentPoly(), t_minus_1)->is_zero());
  CHECK_THROWS_AS(exact_divide(t_minus_1, LaurentPoly()), Error);
}

TEST_CASE("multiplication then division round trips") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 500; ++i) {
    LaurentPoly a = testing_support::random_poly(rng), b = testing_support::random_poly(rng);
    CHECK(a * b == b * a);
    if (b.is_zero()) continue;
    auto q = exact_divide(a * b, b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
}

TEST_CASE("gcd examples") {
  const LaurentPoly sq = one_minus_t * one_minus_t;
  CHECK(laurent_gcd({sq, sq, LaurentPoly()}) == t_minus_1 * t_minus_1);
  CHECK(laurent_gcd({t_minus_1, poly({-1, 0, 1})}) == t_minus_1);
  CHECK(laurent_gcd({}).is_zero());
  CHECK(laurent_gcd({LaurentPoly(), LaurentPoly()}).is_zero());
  CHECK(laurent_gcd({poly({2, 2}), poly({3, 3}, 4)}) == poly({1, 1}));
}

TEST_CASE("gcd divides its inputs and finds common factors") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    LaurentPoly c = testing_support::random_poly(rng);
    LaurentPoly a = testing_support::random_poly(rng) * c, b = testing_support::random_poly(rng) * c;
    LaurentPoly g = laurent_gcd({a, b});
    if (a.is_zero() && b.is_zero()) {
      CHECK(g.is_zero());
      continue;
    }
    for (const LaurentPoly& p : {a, b})
      if (!p.is_zero()) CHECK(exact_divide(p.primitive_part(), g).has_value());
    if (!c.is_zero() && !a.is_zero() && !b.is_zero())
      CHECK(exact_divide(g, c.primitive_part()).has_value());
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == t_minus_1);
  CHECK(cyclotomic(2) == poly({1, 1}));
  CHECK(cyclotomic(6) == poly({1, -1, 1}));
  CHECK(cyclotomic(12) == poly({1, 0, -1, 0, 1}));
  for (std::int64_t d = 1; d <= 30; ++d) CHECK(cyclotomic(d).degree() == totient(d));
  // t^n - 1 is the product of the cyclotomic polynomials of the divisors of n.
  for (std::int64_t n = 1; n <= 20; ++n) {
    LaurentPoly prod(1);
    for (std::int64_t d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic(d);
    CHECK(prod == LaurentPoly::t_power_minus_one(n));
  }
}

TEST_CASE("cyclotomic splitting") {
  auto a = cyclotomic_split(t_minus_1 * t_minus_1);
  CHECK(a.orders == std::map<std::int64_t, unsigned>{{1, 2}});
  CHECK(a.remainder == LaurentPoly(1));
  auto b = cyclotomic_split(poly({1, 1, 1}));
  CHECK(b.orders == std::map<std::int64_t, unsigned>{{3, 1}});
  auto c = cyclotomic_split(poly({-1, -1, 1}));
  CHECK(c.orders.empty());
  CHECK(c.remainder == poly({-1, -1, 1}));
  CHECK_THROWS_AS(cyclotomic_split(LaurentPoly()), Error);
  CHECK(biorder_index(cyclotomic_split(poly({1, 1}) * t_minus_1)) == std::optional<Integer>(2));
  CHECK_FALSE(biorder_index(c).has_value());
}

TEST_CASE("Fox derivatives") {
  const std::vector<Integer> ones{1, 1};
  CHECK(fox_derivative(commutator({{0, 1}}, {{1, 1}}), 0, ones) == one_minus_t);
  CHECK(fox_derivative(Word{{1, 3}}, 0, ones).is_zero());
  CHECK(fox_derivative(Word{{0, 4}}, 0, {Integer(2)}) == LaurentPoly::geometric_sum(2, 4));
  CHECK_THROWS_AS(fox_derivative(Word{{0, 1}}, 5, ones), Error);
  CHECK(abelianize(Word{{0, 2}, {1, -1}}, {3, 1}) == LaurentPoly::monomial(1, 5));
}

TEST_CASE("Fox derivatives agree with the product rule") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int i = 0; i < 500; ++i) {
    Word w = testing_support::random_word(rng, 3, 6);
    std::vector<Integer> values{val(rng), val(rng), val(rng)};
    for (std::size_t gen = 0; gen < 3; ++gen)
      CHECK(fox_derivative(w, gen, values) == testing_support::fox_by_axioms(w, gen, values));
  }
}

TEST_CASE("Alexander matrix of the Burns group") {
  const TubularGraph burns = corpus("burns").graph;
  PolyMatrix m = alexander_matrix(presentation(burns), normalized(burns));
  REQUIRE(m.size() == 2);
  CHECK(m[0] == std::vector<LaurentPoly>{one_minus_t, t_minus_1, LaurentPoly()});
  CHECK(m[1] == std::vector<LaurentPoly>{LaurentPoly(1), LaurentPoly(-1), one_minus_t});
  auto minors = maximal_minors(m);
  REQUIRE(minors.size() == 3);
  CHECK(equal_up_to_units(minors[0], one_minus_t * one_minus_t));
  CHECK(equal_up_to_units(minors[1], one_minus_t * one_minus_t));
  CHECK(minors[2].is_zero());
  CHECK(laurent_gcd(minors) == t_minus_1 * t_minus_1);
  CHECK(char_candidate(minors, {1, 1, 0}).poly == t_minus_1 * t_minus_1);
}

TEST_CASE("Alexander matrix of Z^2 and Gersten") {
  TubularGraph z2 = testing_support::z2();
  CharacterZ chi;
  chi.vertex = {{2, 3}};
  PolyMatrix m = alexander_matrix(presentation(z2), chi);
  REQUIRE(m.size() == 1);
  CHECK(m[0][0] == poly({1, 0, 0, -1}));
  CHECK(m[0][1] == poly({-1, 0, 1}));

  const TubularGraph gersten = corpus("gersten").graph;
  PolyMatrix g = alexander_matrix(presentation(gersten), normalized(gersten));
  CHECK(g.size() == 3);
  CHECK(g[0].size() == 4);
  CHECK(g[0] == std::vector<LaurentPoly>{one_minus_t, t_minus_1, LaurentPoly(), LaurentPoly()});
  auto minors = maximal_minors(g);
  CHECK(equal_up_to_units(minors[0], t_minus_1 * t_minus_1 * t_minus_1));
  CHECK(minors[2].is_zero());
  CHECK(minors[3].is_zero());
  CHECK(char_candidate(minors, {1, 1, 0, 0}).poly == t_minus_1 * t_minus_1 * t_minus_1);
}

TEST_CASE("minors of a matrix with a zero row vanish") {
  PolyMatrix m{{LaurentPoly(), LaurentPoly(), LaurentPoly()}, {t_minus_1, LaurentPoly(1), poly({1, 1})}};
  for (const auto& p : maximal_minors(m)) CHECK(p.is_zero());
  CHECK_THROWS_AS(maximal_minors(PolyMatrix{{t_minus_1}}), Error);
}

TEST_CASE("char candidate errors") {
  CHECK_THROWS_AS(char_candidate({t_minus_1, t_minus_1}, {0, 0}), Error);
  CHECK_THROWS_AS(char_candidate({poly({1, 0, 1}), t_minus_1}, {2, 0}), Error);
}

TEST_CASE("fraction-free determinant matches cofactor expansion") {
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<int> size(1, 4);
  for (int i = 0; i < 200; ++i) {
    const int n = size(rng);
    PolyMatrix m(n, std::vector<LaurentPoly>(n));
    for (auto& row : m)
      for (auto& x : row) x = testing_support::random_poly(rng);
    CHECK(determinant(m) == testing_support::cofactor_determinant(m));
  }
}

TEST_CASE("Alexander reports on random free-by-Z graphs") {
  std::mt19937_64 rng(66);
  RandomGraphOptions opt;
  opt.force_fbyc = true;
  opt.max_vertices = 4;
  for (int i = 0; i < 40; ++i) {
    TubularGraph g = random_graph(rng, opt);
    auto r = alexander_report(g, *find_fbyc_character(g).character);
    CHECK(r.fundamental_identity);
    CHECK(r.minor_ratio_identity);
    CHECK(r.rows + 1 == r.cols);
  }
}

TEST_CASE("maximal minors match column-deleted cofactor determinants") {
  std::mt19937_64 rng(57);
  std::uniform_int_distribution<int> size(1, 4);
  std::uniform_int_distribution<int> sparse(0, 2);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(size(rng));
    PolyMatrix m(n, std::vector<LaurentPoly>(n + 1));
    for (auto& row : m)
      for (auto& x : row)
        if (sparse(rng)) x = testing_support::random_poly(rng);
    // Occasionally force a rank drop.
    if (n > 1 && i % 7 == 0) m[1] = m[0];
    const auto minors = maximal_minors(m);
    for (std::size_t skip = 0; skip <= n; ++skip) {
      PolyMatrix sub(n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c <= n; ++c)
          if (c != skip) sub[r].push_back(m[r][c]);
      CHECK(minors[skip] == testing_support::cofactor_determinant(sub));
    }
  }
}
