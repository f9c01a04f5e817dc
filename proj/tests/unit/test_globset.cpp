#include <doctest.h>

#include "helpers.hpp"
#include "omega/gcore/globset.hpp"

using namespace omega;
using namespace omega::gcore;

TEST_CASE("validate: empty and terminal sets pass") {
  CHECK_FALSE(validate_globset(GlobSet::empty(2)).has_value());
  CHECK_FALSE(validate_globset(GlobSet::terminal(2)).has_value());
}

TEST_CASE("validate: a 2-cell between non-parallel 1-cells is reported at that cell") {
  GlobSet g = GlobSet::empty(2);
  g.addCell(0, "x");
  g.addCell(0, "y");
  g.addCell(1, "f", "x", "y");
  g.addCell(1, "g", "x", "x");
  g.addCell(2, "a", "f", "g");
  auto v = validate_globset(g);
  REQUIRE(v.has_value());
  CHECK(v->dim == 2);
  CHECK(v->cell == "a");
}

TEST_CASE("validate: dangling targets and duplicate ids") {
  auto bad = globset_from_json(testing::load("bad_target.json"));
  auto v = validate_globset(bad);
  REQUIRE(v.has_value());
  CHECK(v->cell == "f");
  GlobSet dup = GlobSet::empty(0);
  dup.addCell(0, "x");
  dup.addCell(0, "x");
  REQUIRE(validate_globset(dup).has_value());
  CHECK(validate_globset(dup)->axiom == "unique-id");
}

TEST_CASE("truncate: examples") {
  auto t = truncate_globset(GlobSet::terminal(2), 0);
  CHECK(t.n == 0);
  CHECK(t.count(0) == 1);
  auto g = globset_from_json(testing::load("globset_n2_seed7.json"));
  CHECK(truncate_globset(g, 2) == g);
}

TEST_CASE("truncate: iterated truncation on random sets, outputs stay globular") {
  Rng rng(101);
  for (int i = 0; i < 10; ++i) {
    auto g = random_globset(3, 4, rng);
    REQUIRE_FALSE(validate_globset(g).has_value());
    auto t2 = truncate_globset(g, 2);
    CHECK_FALSE(validate_globset(t2).has_value());
    CHECK(truncate_globset(t2, 1) == truncate_globset(g, 1));
  }
}

TEST_CASE("truncate commutes with globular maps") {
  Rng rng(5);
  for (int i = 0; i < 10; ++i) {
    auto g = random_globset(2, 3, rng);
    // The identity map and the map collapsing onto the terminal set.
    GlobMap id, bang;
    id.cellMap.resize(3);
    bang.cellMap.resize(3);
    for (std::size_t d = 0; d <= 2; ++d)
      for (const auto& c : g.cells[d]) {
        id.cellMap[d][c] = c;
        bang.cellMap[d][c] = "*";
      }
    CHECK_FALSE(check_glob_map(g, GlobSet::terminal(2), bang).has_value());
    CHECK_FALSE(check_glob_map(truncate_globset(g, 1), GlobSet::terminal(1), truncate_map(bang, 1)).has_value());
    CHECK_FALSE(check_glob_map(truncate_globset(g, 1), truncate_globset(g, 1), truncate_map(id, 1)).has_value());
  }
}

TEST_CASE("glob maps: a map breaking sources is rejected") {
  auto g = testing::graph({"x", "y"}, {{"f", "x", "y"}});
  GlobMap m;
  m.cellMap.resize(2);
  m.cellMap[0] = {{"x", "x"}, {"y", "y"}};
  m.cellMap[1] = {{"f", "f"}};
  CHECK_FALSE(check_glob_map(g, g, m).has_value());
  m.cellMap[0]["x"] = "y";
  CHECK(check_glob_map(g, g, m).has_value());
}

TEST_CASE("json: round trip and strict reading") {
  auto g = globset_from_json(testing::load("globset_n2_seed7.json"));
  CHECK(globset_from_json(to_json(g)) == g);
  auto j = to_json(g);
  j["extra"] = 1;
  CHECK_THROWS_AS(globset_from_json(j), ParseError);
  CHECK_THROWS_AS(globset_from_json(nlohmann::json::parse(R"({"n":1,"cells":[["x"],[3]],"src":{"1":{}},"tgt":{"1":{}}})")),
                  ParseError);
}

TEST_CASE("random globsets are deterministic per seed") {
  Rng a(7), b(7);
  CHECK(random_globset(2, 3, a) == random_globset(2, 3, b));
  Rng z(1);
  auto empty = random_globset(2, 0, z);
  CHECK(empty.count(0) + empty.count(1) + empty.count(2) == 0);
}
