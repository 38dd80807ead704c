#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "sumsetlab/errors.hpp"
#include "sumsetlab/generators.hpp"
#include "sumsetlab/group.hpp"

using namespace sumsetlab;
using testing::cset;
using testing::zset;

TEST_SUITE("group") {
  TEST_CASE("elements are normalized, sorted and deduplicated") {
    auto s = cset({4, 0}, {{5, -1}, {1, -1}, {-3, 2}});
    REQUIRE(s.size() == 2);
    CHECK(s.elements()[0].coords == std::vector<std::int64_t>{1, -1});
    CHECK(s.elements()[1].coords == std::vector<std::int64_t>{1, 2});
    CHECK(s.contains(GElement{{1, 2}}));
    CHECK(s.index_of(GElement{{0, 0}}) == s.size());
  }

  TEST_CASE("group space validation") {
    CHECK_THROWS_AS(GroupSpace(std::vector<std::int64_t>{}), InputError);
    CHECK_THROWS_AS(GroupSpace({-2}), InputError);
    CHECK_THROWS_AS(GSet(GroupSpace({0}), std::vector<std::vector<std::int64_t>>{{1, 2}}), InputError);
  }

  TEST_CASE("small sumsets") {
    CHECK(sumset(zset({0, 1, 2, 3, 100}), zset({0, 1})).size() == 7);
    CHECK(iterated_sumset(zset({0, 1, 2, 3}), zset({0, 1}), 2) == zset({0, 1, 2, 3, 4, 5}));
    CHECK(iterated_sumset(zset({5}), zset({1, 2}), 0) == zset({5}));
    auto z4 = cset({4}, {{0}, {1}, {2}, {3}});
    CHECK(sumset(z4, cset({4}, {{1}})) == z4);
    CHECK(cardinality_stream(zset({0, 10}), zset({0, 1}), 3) == std::vector<std::size_t>{2, 4, 6, 8});
  }

  TEST_CASE("set algebra") {
    auto a = zset({1, 2, 3});
    auto b = zset({2, 5});
    CHECK(set_difference(a, b) == zset({1, 3}));
    CHECK(set_union(a, b) == zset({1, 2, 3, 5}));
    CHECK(translate(a, GElement{{10}}) == zset({11, 12, 13}));
    CHECK(singleton(a.space(), GElement{{7}}) == zset({7}));
  }

  TEST_CASE("mixing spaces or empty operands is an input error") {
    CHECK_THROWS_AS(sumset(zset({1}), cset({5}, {{1}})), InputError);
    CHECK_THROWS_AS(sumset(zset({1}), GSet(GroupSpace({0}))), InputError);
  }

  TEST_CASE("cardinality cap is a named guard") {
    try {
      (void)sumset(zset({0, 1, 2, 3}), zset({0, 10, 20}), 5);
      FAIL("no guard");
    } catch (const GuardError& e) {
      CHECK(e.guard() == "sumset-cap");
    }
    CHECK_NOTHROW((void)sumset(zset({0, 1, 2, 3}), zset({0, 10, 20}), 12));
  }

  TEST_CASE("json round trip") {
    auto s = cset({6, 0}, {{1, -4}, {5, 9}});
    auto j = to_json(s);
    CHECK(j["moduli"] == nlohmann::json({6, 0}));
    CHECK(gset_from_json(j) == s);
    CHECK(gset_from_json(nlohmann::json::parse(R"({"moduli":[5],"elements":[[7],[-3]]})")) == cset({5}, {{2}}));
    CHECK_THROWS_AS(gset_from_json(nlohmann::json::parse(R"({"elements":[[1]]})")), InputError);
  }

  TEST_CASE("sumsets agree with the naive oracle on random sets") {
    for (std::uint64_t k = 0; k < 200; ++k) {
      auto rng = case_rng(1234, 0, k);
      auto [a, b] = random_pair(rng, 15, 8);
      auto h = static_cast<unsigned>(uniform(rng, 0, 3));
      auto mod = oracle::moduli(a);
      CHECK(oracle::points(iterated_sumset(a, b, h)) == oracle::iterated(oracle::points(a), oracle::points(b), h, mod));
    }
  }

  TEST_CASE("growth is monotone") {
    for (std::uint64_t k = 0; k < 200; ++k) {
      auto rng = case_rng(99, 0, k);
      auto [a, b] = random_pair(rng, 20, 8);
      auto ab = sumset(a, b);
      CHECK(a.size() <= ab.size());
      CHECK(ab.size() <= a.size() * b.size());
      auto b0 = set_union(b, singleton(b.space(), b.space().identity()));
      auto prev = a;
      for (int i = 0; i < 3; ++i) {
        auto next = sumset(prev, b0);
        CHECK(set_difference(prev, next).empty());
        prev = next;
      }
    }
  }
}
