#include <doctest.h>

#include <map>
#include <set>

#include "omega/coalgebra/coalgebra.hpp"
#include "omega/rng.hpp"

using namespace omega;
using namespace omega::coalgebra;

namespace {

// Closed form for the unfold of a word coalgebra: follow next from a,
// collecting labels.
std::vector<std::string> walk(const std::vector<std::string>& labels, const std::vector<std::size_t>& next,
                              std::size_t a, std::size_t depth) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < depth; ++i) {
    out.push_back(labels[a]);
    a = next[a];
  }
  return out;
}

std::size_t powerSum(std::size_t base, std::size_t top) {
  std::size_t s = 0, p = 1;
  for (std::size_t k = 0; k <= top; ++k, p *= base) s += p;
  return s;
}

}  // namespace

TEST_CASE("word functor stages double") {
  auto chain = adamek_chain(word_functor({"a", "b"}), 4);
  for (std::size_t k = 0; k <= 3; ++k) CHECK(chain.stage(k).size() == (std::size_t{1} << k));
}

TEST_CASE("connecting maps drop the last symbol") {
  auto chain = adamek_chain(word_functor({"a", "b"}), 3);
  for (const auto& x : chain.stage(3)) {
    auto w = flatten_word(x);
    auto down = flatten_word(chain.connect(2, x));
    CHECK(down == std::vector<std::string>(w.begin(), w.end() - 1));
  }
}

TEST_CASE("unfold of the swap coalgebra alternates") {
  auto f = word_functor({"a", "b"});
  auto c = word_coalgebra({"a", "b"}, {1, 0});
  for (std::size_t d = 0; d <= 10; ++d) {
    CHECK(flatten_word(unfold(*f, c, Term::atom("0"), d)) == walk({"a", "b"}, {1, 0}, 0, d));
    CHECK(flatten_word(unfold(*f, c, Term::atom("1"), d)) == walk({"a", "b"}, {1, 0}, 1, d));
  }
}

TEST_CASE("unfold agrees with the walk on seeded coalgebras") {
  Rng rng(31);
  auto f = word_functor({"a", "b", "c"});
  for (int i = 0; i < 10; ++i) {
    std::size_t k = 1 + rng.below(4);
    std::vector<std::string> labels;
    std::vector<std::size_t> next;
    for (std::size_t s = 0; s < k; ++s) {
      labels.push_back(std::string(1, static_cast<char>('a' + rng.below(3))));
      next.push_back(rng.below(k));
    }
    auto c = word_coalgebra(labels, next);
    for (std::size_t s = 0; s < k; ++s)
      CHECK(flatten_word(unfold(*f, c, Term::atom(std::to_string(s)), 6)) == walk(labels, next, s, 6));
  }
}

TEST_CASE("identity functor: every stage is the point and unfold is constant") {
  auto chain = adamek_chain(identity_functor(), 3);
  for (std::size_t k = 0; k <= 3; ++k) CHECK(chain.stage(k).size() == 1);
  Coalgebra c{{Term::atom("p"), Term::atom("q")}, [](const Term& x) { return x; }};
  CHECK(unfold(*identity_functor(), c, Term::atom("p"), 5) == star());
}

TEST_CASE("cones are compatible with the connecting maps") {
  auto f = word_functor({"a", "b"});
  auto chain = adamek_chain(f, 6);
  auto c = word_coalgebra({"a", "b", "a"}, {1, 2, 0});
  for (const auto& s : c.carrier)
    for (std::size_t d = 0; d < 6; ++d) CHECK(chain.connect(d, unfold(*f, c, s, d + 1)) == unfold(*f, c, s, d));
}

TEST_CASE("free monoid stages are sums of powers") {
  auto chain = adamek_chain(free_monoid_functor(3), 2);
  CHECK(chain.stage(1).size() == 4);
  CHECK(chain.stage(2).size() == powerSum(4, 3));
}

TEST_CASE("lambek probe: word functors to depth 4") {
  for (std::size_t m = 1; m <= 3; ++m) {
    std::vector<std::string> alphabet;
    for (std::size_t i = 0; i < m; ++i) alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
    auto chain = adamek_chain(word_functor(alphabet), 5);
    for (std::size_t d = 0; d <= 4; ++d) {
      auto r = lambek_probe(chain, d);
      CHECK(r.bijective);
      CHECK(r.limitSize == r.appliedSize);
    }
  }
}

TEST_CASE("lambek probe: graded free monoid to depth 2") {
  auto chain = adamek_chain(free_monoid_functor(3), 3);
  for (std::size_t d = 0; d <= 2; ++d) CHECK(lambek_probe(chain, d).bijective);
}

TEST_CASE("functor descriptions round trip") {
  for (const auto& f : {identity_functor(), word_functor({"x", "y"}), free_monoid_functor(2)})
    CHECK(functor_from_json(f->describe())->describe() == f->describe());
  CHECK_THROWS(functor_from_json(nlohmann::json{{"kind", "powerset"}}));
}
