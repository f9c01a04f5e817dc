#include <doctest.h>

#include "helpers.hpp"
#include "omega/blcoll/collection.hpp"

using namespace omega;
using namespace omega::blcoll;

TEST_CASE("identity collection") {
  auto c = identity_collection(2, 3);
  CHECK_FALSE(check_collection(c).has_value());
  CHECK(c.a.count(0) == 1);
  CHECK(c.a.count(1) == 4);
  CHECK(c.a.count(2) == 8);
  auto lift = search_lift(c, 1);
  CHECK(lift.size() == 12);
  CHECK(check_contraction(c, lift, 1).empty());
}

TEST_CASE("deleting one cell leaves exactly one missing lift") {
  auto c = identity_collection(2, 3);
  auto lift = search_lift(c, 1);
  Rng rng(42);
  for (int i = 0; i < 10; ++i) {
    std::size_t d = 1 + rng.below(2);
    auto id = c.a.cells[d][rng.below(c.a.cells[d].size())];
    auto cut = delete_cell(c, d, id);
    CHECK_FALSE(check_collection(cut).has_value());
    CHECK(check_contraction(cut, lift, 1).size() == 1);
  }
}

TEST_CASE("a lift to a cell over the wrong tree is rejected") {
  auto c = identity_collection(1, 2);
  auto lift = search_lift(c, 0);
  REQUIRE_FALSE(lift.empty());
  auto other = lift.begin()->second;
  for (auto& [k, v] : lift)
    if (v != other) {
      v = other;
      break;
    }
  CHECK_FALSE(check_contraction(c, lift, 0).empty());
}

TEST_CASE("collection axioms") {
  auto c = identity_collection(1, 2);
  auto bad = c;
  bad.p.erase(bad.p.begin());
  auto v = check_collection(bad);
  REQUIRE(v.has_value());
  CHECK(v->axiom == "p-total");
  auto j = to_json(c);
  CHECK(to_json(collection_from_json(j)) == j);
  j["bogus"] = true;
  CHECK_THROWS(collection_from_json(j));
}

TEST_CASE("truncation of random collections") {
  Rng rng(9);
  for (int i = 0; i < 5; ++i) {
    auto c = random_collection(3, 2, 2, rng);
    CHECK_FALSE(check_collection(c).has_value());
    auto a = truncate_collection(truncate_collection(c, 2), 1);
    auto b = truncate_collection(c, 1);
    CHECK(a.a == b.a);
    CHECK(a.p == b.p);
    auto lift = search_lift(c, 2);
    auto missing = check_incoherent_contraction(c, lift);
    CHECK(check_incoherent_contraction(truncate_collection(c, 2), truncate_lift(lift, 2)).size() <= missing.size());
  }
}

TEST_CASE("the fixture collection has missing lifts") {
  auto c = collection_from_json(testing::load("collection_n2_seed3.json"));
  CHECK_FALSE(check_collection(c).has_value());
  CHECK_FALSE(check_contraction(c, search_lift(c, 1), 1).empty());
}
