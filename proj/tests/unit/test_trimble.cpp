#include <doctest.h>

#include "helpers.hpp"
#include "omega/monads/laws.hpp"
#include "omega/opweak/trimble.hpp"

using namespace omega;
using namespace omega::opweak;
using testing::at;

namespace {

FinOperad seed(std::size_t cap = 3) { return terminal_operad(gcore::finset_base(), cap); }

}  // namespace

TEST_CASE("the tower stops at the supported depth") {
  CHECK(trimble_tower(seed(), 2, Mode::Incoherent).size() == 3);
  CHECK_THROWS_AS(trimble_tower(seed(), 3, Mode::Incoherent), monads::UnsupportedDepth);
}

TEST_CASE("with the terminal seed the tower collapses to the strict one") {
  for (std::size_t n = 0; n <= 2; ++n) {
    Obj t = gcore::globset_to_ngraph(gcore::GlobSet::terminal(n));
    CHECK_FALSE(check_strict_collapse(seed(), Mode::Incoherent, n, t, 3).has_value());
    CHECK_FALSE(check_strict_collapse(seed(), Mode::Coherent, n, t, 3).has_value());
    Rng rng(11);
    for (int i = 0; i < 3; ++i)
      CHECK_FALSE(check_strict_collapse(seed(), Mode::Incoherent, n, monads::random_ngraph(n, 3, rng), 3).has_value());
  }
}

TEST_CASE("tower monads satisfy the monad laws") {
  auto tower = trimble_tower(seed(), 2, Mode::Incoherent);
  for (std::size_t k = 1; k <= 2; ++k)
    CHECK(monads::monad_law_report(*tower[k].monad, 3, 2, 5, [k](Rng& r) { return monads::random_ngraph(k, 2, r); })
              .ok());
}

TEST_CASE("a seed whose cap is below the bound is refused") {
  auto tower = trimble_tower(seed(1), 1, Mode::Incoherent);
  Obj loop = gcore::globset_to_ngraph(testing::graph({"v"}, {{"e", "v", "v"}}));
  CHECK_THROWS_AS(tower[1].monad->apply(loop, 3), monads::CapError);
}

TEST_CASE("fundamental structures are algebras") {
  auto tower = trimble_tower(seed(), 2, Mode::Incoherent);
  Space d = discrete_space({at("p"), at("q")});
  Space cyc = space_from_json(testing::load("space_two_cycle.json"));
  for (std::size_t n = 0; n <= 2; ++n)
    CHECK_FALSE(monads::check_algebra(*tower[n].monad, tower[n].fundamental(d, 3), tower[n].action(), 3).has_value());
  CHECK_FALSE(monads::check_algebra(*tower[1].monad, tower[1].fundamental(cyc, 2), tower[1].action(), 2).has_value());
  CHECK(monads::truncate_obj(tower[2].fundamental(cyc, 2)) == tower[1].fundamental(cyc, 2));
}

TEST_CASE("the composite of lifted free-category monads matches the tower") {
  auto golden = testing::load("golden.json");
  auto t = composite_check(seed(), Mode::Incoherent, gcore::GlobSet::terminal(2), 2, 2);
  CHECK(t.ok());
  CHECK(t.towerCounts == golden["composite_n2_terminal_b2"]["value"].get<std::vector<std::size_t>>());
  CHECK(t.compositeCounts == t.towerCounts);
  auto g = gcore::globset_from_json(testing::load("globset_n2_seed7.json"));
  auto r = composite_check(seed(), Mode::Incoherent, g, 2, 2);
  CHECK(r.ok());
  CHECK(r.towerCounts == golden["composite_n2_globset_seed7_b2"]["value"].get<std::vector<std::size_t>>());
  Rng rng(3);
  for (std::size_t n = 0; n <= 2; ++n)
    for (int i = 0; i < 3; ++i) CHECK(composite_check(seed(), Mode::Incoherent, gcore::random_globset(n, 3, rng), n, 2).ok());
}
