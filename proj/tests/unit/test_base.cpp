#include <doctest.h>

#include "helpers.hpp"
#include "omega/gcore/base.hpp"
#include "omega/monads/laws.hpp"

using namespace omega;
using namespace omega::gcore;
using testing::at;

namespace {

Obj oneObject(std::size_t homSize) {
  std::vector<Term> elems;
  for (std::size_t i = 0; i < homSize; ++i) elems.push_back(at("h" + std::to_string(i)));
  return make_graph(*finset_base(), {at("v")}, [&](const Term&, const Term&) { return Obj::set(elems); });
}

}  // namespace

TEST_CASE("finite sets: cardinalities of the universal objects") {
  auto v = finset_base();
  CHECK(v->elements(v->terminalObj()).size() == 1);
  CHECK(v->elements(v->initialObj()).empty());
  std::vector<Obj> xs{Obj::set({at("a"), at("b")}), Obj::set({at("c"), at("d"), at("e")})};
  CHECK(v->elements(v->product(xs)).size() == 6);
  CHECK(v->elements(v->coproduct(std::span<const Obj>(xs))).size() == 5);
}

TEST_CASE("graphs: terminal, products and coproducts") {
  auto g = vgraph_base(finset_base());
  Obj t = g->terminalObj();
  CHECK(t.members().size() == 1);
  CHECK(t.hom(t.members()[0], t.members()[0]).members().size() == 1);

  std::vector<Obj> xs{oneObject(2), oneObject(3)};
  Obj p = g->product(xs);
  REQUIRE(p.members().size() == 1);
  CHECK(p.hom(p.members()[0], p.members()[0]).members().size() == 6);

  auto two = make_graph(*finset_base(), {at("a"), at("b")}, [](const Term&, const Term&) { return Obj::set({at("f")}); });
  std::vector<Obj> ys{oneObject(1), two};
  Obj c = g->coproduct(std::span<const Obj>(ys));
  REQUIRE(c.members().size() == 3);
  std::size_t cross = 0;
  for (const auto& a : c.members())
    for (const auto& b : c.members())
      if (c.hom(a, b).members().empty()) ++cross;
  CHECK(cross == 4);  // two ordered pairs each way between the components
}

TEST_CASE("graph bases keep the cardinality invariants and distributivity on random samples") {
  Rng rng(3);
  auto g = vgraph_base(finset_base());
  for (int i = 0; i < 5; ++i) {
    std::vector<Obj> sample{monads::random_graph(rng, 3, 4), monads::random_graph(rng, 2, 3)};
    CHECK_FALSE(g->checkInvariants(sample).has_value());
    std::vector<Obj> ys{monads::random_graph(rng, 2, 2), monads::random_graph(rng, 2, 2)};
    CHECK_FALSE(g->checkDistributive(sample[0], ys).has_value());
  }
  auto g2 = ngraph_base(2);
  Rng r2(4);
  std::vector<Obj> s2{monads::random_ngraph(2, 2, r2), monads::random_ngraph(2, 2, r2)};
  CHECK_FALSE(g2->checkInvariants(s2).has_value());
}

TEST_CASE("apply_locally: identity, constant and squaring functors") {
  auto fin = finset_base();
  auto a = make_graph(*fin, {at("x"), at("y")}, [](const Term& s, const Term& t) {
    if (s == t) return Obj::set({at("i")});
    if (s == at("x")) return Obj::set({at("f"), at("g")});
    return Obj::set({});
  });
  BaseFunctor id{"id", [](const Obj& x) { return x; }, identityCellFn()};
  CHECK(apply_locally(id, *fin, a) == a);

  BaseFunctor bang{"!", [fin](const Obj&) { return fin->terminalObj(); }, [](std::size_t d, const Term&) { return terminalCell(d); }};
  Obj t = apply_locally(bang, *fin, a);
  for (const auto& s : t.members())
    for (const auto& u : t.members()) CHECK(t.hom(s, u).members().size() == 1);

  BaseFunctor sq{"sq",
                 [fin](const Obj& x) {
                   std::vector<Obj> xs{x, x};
                   return fin->product(xs);
                 },
                 [fin](std::size_t d, const Term& c) {
                   std::vector<Term> cs{c, c};
                   return fin->productCell(d, cs);
                 }};
  Obj s = apply_locally(sq, *fin, a);
  CHECK(s.hom(at("x"), at("x")).members().size() == 1);
  CHECK(s.hom(at("x"), at("y")).members().size() == 4);

  // H∘G applied at once equals H after G.
  Obj twice = apply_locally(sq, *fin, apply_locally(sq, *fin, a));
  CHECK(apply_locally(compose(sq, sq), *fin, a) == twice);
  CHECK(twice.hom(at("x"), at("y")).members().size() == 16);
}
