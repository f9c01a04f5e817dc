#include <doctest.h>

#include "omega/gcore/tower.hpp"

using namespace omega;
using namespace omega::gcore;

TEST_CASE("constant terminal tower unwraps to one object with a terminal hom tower") {
  auto u = tower_unwrap(terminal_tower(), 4);
  REQUIRE(u.objects.size() == 1);
  CHECK(u.hom(u.objects[0], u.objects[0]).equalTo(terminal_tower(), 3));
}

TEST_CASE("wrap and unwrap are inverse on towers of truncations") {
  Rng rng(23);
  for (int i = 0; i < 5; ++i) {
    auto t = tower_of(random_globset(3, 3, rng));
    for (std::size_t depth = 1; depth <= 5; ++depth) {
      auto u = tower_unwrap(t, depth);
      auto w = tower_wrap(u);
      CHECK(w.equalTo(t, depth));
      CHECK(tower_unwrap(w, depth).equalTo(u, depth - 1));
    }
  }
}

TEST_CASE("a broken level-2 witness is reported at level 2") {
  auto good = random_globset(3, 2, *std::make_unique<Rng>(2));
  OmegaTower broken([good](std::size_t k) {
    GlobSet g = k <= 3 ? truncate_globset(good, std::min<std::size_t>(k, 3)) : GlobSet::empty(k);
    if (k == 2) g.addCell(0, "intruder");
    return g;
  });
  try {
    broken.checkCompatible(3);
    FAIL("expected a compatibility error");
  } catch (const CompatibilityError& e) {
    CHECK(e.level == 2);
  }
}
