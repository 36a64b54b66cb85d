#include <doctest.h>

#include <random>

#include "tubular/corpus.hpp"
#include "tubular/equitable.hpp"
#include "tubular/error.hpp"
#include "tubular/random_graph.hpp"

using namespace tubular;

namespace {

CharacterZ normalized(const TubularGraph& g) { return *find_fbyc_character(g).character; }

}  // namespace

TEST_CASE("intersection numbers") {
  CHECK(intersection_number({1, 0}, {0, 1}) == 1);
  CHECK(intersection_number({2, -1}, {1, 0}) == 1);
  CHECK(intersection_number({3, 6}, {1, 2}) == 0);
}

TEST_CASE("verify equitable examples") {
  const TubularGraph burns = corpus("burns").graph;
  auto std_basis = verify_equitable(burns, {{{{1, 0}, {0, 1}}}});
  CHECK(std_basis.ok);
  CHECK(std_basis.edge_sums[0].src_sum == 1);
  CHECK(std_basis.edge_sums[0].dst_sum == 1);
  auto three = verify_equitable(burns, {{{{2, -1}, {-1, 2}}}});
  CHECK(three.ok);
  CHECK(three.edge_sums[0].src_sum == 3);
  CHECK(three.span_index[0] == 3);
  auto gersten = verify_equitable(corpus("gersten").graph, {{{{1, 0}, {0, 1}}}});
  CHECK_FALSE(gersten.ok);
  CHECK(gersten.edge_sums[0].src_sum == 1);
  CHECK(gersten.edge_sums[0].dst_sum == 3);
  auto flat = verify_equitable(burns, {{{{1, 1}, {2, 2}}}});
  CHECK_FALSE(flat.ok);
  CHECK(flat.span_index[0] == 0);
  CHECK_THROWS_AS(verify_equitable(burns, EquitableSet{}), Error);
}

TEST_CASE("constructed sets for Burns and Gersten") {
  const TubularGraph burns = corpus("burns").graph;
  EquitableSet b = construct_equitable(burns, normalized(burns));
  CHECK(b.families[0] == std::vector<LatticeVec>{{2, -1}, {-1, 2}});
  auto rb = verify_equitable(burns, b);
  CHECK(rb.ok);
  CHECK(rb.edge_sums[0].src_sum == 3);
  CHECK(rb.span_index[0] == 3);

  const TubularGraph gersten = corpus("gersten").graph;
  EquitableSet g = construct_equitable(gersten, normalized(gersten));
  CHECK(g.families[0] == std::vector<LatticeVec>{{2, -1}, {-2, 3}});
  auto rg = verify_equitable(gersten, g);
  CHECK(rg.ok);
  CHECK(rg.edge_sums[0].src_sum == 4);
  CHECK(rg.edge_sums[1].src_sum == 4);
}

TEST_CASE("construction needs a character nonzero on every edge") {
  const TubularGraph w = corpus("wise-simple-2").graph;
  CharacterZ zero_on_edge;
  zero_on_edge.vertex = {{0, 0}};
  zero_on_edge.stable = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(construct_equitable(w, zero_on_edge), Error);
  try {
    construct_equitable(w, zero_on_edge);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CharacterZeroOnEdge);
  }
}

TEST_CASE("equitable sets survive scaling and random graphs") {
  std::mt19937_64 rng(99);
  RandomGraphOptions opt;
  opt.force_fbyc = true;
  for (int i = 0; i < 100; ++i) {
    TubularGraph g = random_graph(rng, opt);
    auto r = find_fbyc_character(g);
    REQUIRE(r.found());
    auto c = construct_equitable_detailed(g, *r.character);
    CHECK(verify_equitable(g, c.set).ok);
    CHECK(c.multiplier > 0);
    for (const Mat2Q& m : c.to_root) CHECK(abs(m.det()) == 1);
    EquitableSet scaled = c.set;
    for (auto& fam : scaled.families)
      for (auto& x : fam) x = Integer(3) * x;
    CHECK(verify_equitable(g, scaled).ok);
  }
}
