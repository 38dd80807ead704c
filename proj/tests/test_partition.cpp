#include <doctest.h>

#include "helpers.hpp"
#include "sumsetlab/constructions.hpp"
#include "sumsetlab/errors.hpp"
#include "sumsetlab/generators.hpp"
#include "sumsetlab/partition.hpp"

using namespace sumsetlab;
using testing::labels_of;
using testing::make_graph;
using testing::zset;

TEST_SUITE("partition") {
  TEST_CASE("interval with a far point splits in two") {
    auto g = build_addition_graph(zset({0, 1, 2, 3, 100}), zset({0, 1}), 2);
    auto p = partition_graph(g);
    REQUIRE(p.k() == 2);
    CHECK(labels_of(g, p.blocks[0].bottom) == std::vector<std::int64_t>{0, 1, 2, 3});
    CHECK(p.blocks[0].ratio == Ratio(5, 4));
    CHECK(labels_of(g, p.blocks[1].bottom) == std::vector<std::int64_t>{100});
    CHECK(p.blocks[1].ratio == Ratio(2));
    auto v = verify_partition(g, p);
    CHECK(v.ok());
    CHECK(v.top_sum == 9);
  }

  TEST_CASE("first extremal example: grid block then the independent points") {
    auto c = example1(2, 4, 1);
    auto g = build_addition_graph(c.a, c.b, 2);
    auto p = partition_graph(g);
    REQUIRE(p.k() == 2);
    CHECK(p.blocks[0].ratio == Ratio(1));
    CHECK(p.blocks[0].bottom.size() == 16);
    CHECK(p.blocks[1].ratio == Ratio(7));
    CHECK(p.blocks[1].bottom.size() == 2);
    CHECK(verify_partition(g, p).ok());
  }

  TEST_CASE("single block when the whole bottom is tight") {
    auto g = build_addition_graph(zset({0, 1, 2, 3}), zset({0, 1}), 3);
    auto p = partition_graph(g);
    REQUIRE(p.k() == 1);
    CHECK(p.blocks[0].ratio == Ratio(5, 4));
  }

  TEST_CASE("non-commutative input is rejected") {
    auto g = make_graph({{1}, {2}, {3, 4}}, {{1, 2}, {2, 3}, {2, 4}});
    CHECK_THROWS_AS(partition_graph(g), InputError);
  }

  TEST_CASE("orphan middle vertices do not break strict increase") {
    // A regression instance where peeling by channels stalls.
    auto g = build_addition_graph(zset({2, 6, 8, 10, 17, 20, 25, 27, 29}), zset({6, 16, 17, 23}), 2);
    auto p = partition_graph(g);
    auto v = verify_partition(g, p);
    CHECK(v.ok());
    CHECK(v.strictly_increasing);
  }

  TEST_CASE("random graphs partition validly") {
    for (std::uint64_t k = 0; k < 150; ++k) {
      auto rng = case_rng(8, 0, k);
      auto [a, b] = random_pair(rng, 14, 6);
      auto h = static_cast<unsigned>(uniform(rng, 1, 3));
      auto g = build_addition_graph(a, b, h);
      auto p = partition_graph(g);
      auto v = verify_partition(g, p);
      CHECK(v.ok());
      CHECK(v.top_sum == g.layer_size(h));
      for (std::size_t i = 1; i < p.k(); ++i) CHECK(p.blocks[i - 1].ratio < p.blocks[i].ratio);
    }
  }

  TEST_CASE("json") {
    auto g = build_addition_graph(zset({0, 1, 2, 3, 100}), zset({0, 1}), 1);
    auto j = to_json(partition_graph(g), true);
    CHECK(j["ratios"] == nlohmann::json::parse("[[5,4],[2,1]]"));
    CHECK(j["blocks"].size() == 2);
    CHECK(j["subgraphs"].size() == 2);
  }
}
