#include <doctest.h>

#include "helpers.hpp"
#include "omega/monads/laws.hpp"
#include "omega/monads/pasting.hpp"

using namespace omega;
using namespace omega::gcore;
using namespace omega::monads;
using testing::at;

namespace {

Obj loop() { return globset_to_ngraph(testing::graph({"v"}, {{"e", "v", "v"}})); }
Obj arrow() { return globset_to_ngraph(testing::graph({"u", "v"}, {{"e", "u", "v"}})); }
Obj chain3() { return globset_to_ngraph(testing::graph({"u", "v", "w"}, {{"f", "u", "v"}, {"g", "v", "w"}})); }

// fc whose multiplication sends every endomorphism to the identity.
class WrongMult : public Monad {
 public:
  WrongMult(MonadPtr t, const Obj& x) : t_(std::move(t)), ids_(t_->apply(x, 0)) {}
  std::string name() const override { return "wrong"; }
  const BasePtr& base() const override { return t_->base(); }
  Obj apply(const Obj& x, std::size_t b) const override { return t_->apply(x, b); }
  Term unit(std::size_t d, const Term& c) const override { return t_->unit(d, c); }
  Term mult(std::size_t d, const Term& c) const override {
    Term m = t_->mult(d, c);
    if (d != 1 || m.args()[0] != m.args()[1]) return m;
    return Term::hom(m.args()[0], m.args()[0], ids_.hom(m.args()[0], m.args()[0]).members()[0]);
  }
  Term fmap(const CellFn& f, std::size_t d, const Term& c) const override { return t_->fmap(f, d, c); }
  std::pair<Term, Term> split(std::size_t d, const Term& c) const override { return t_->split(d, c); }

 private:
  MonadPtr t_;
  Obj ids_;
};

}  // namespace

TEST_CASE("fc on a loop counts paths by length") {
  auto fc = fc_monad(finset_base());
  Obj f = fc->apply(loop(), 3);
  CHECK(f.hom(at("v"), at("v")).members().size() == 4);
  CHECK(kelly_count(loop(), at("v"), at("v"), 3) == 4);
}

TEST_CASE("fc on one arrow") {
  auto fc = fc_monad(finset_base());
  Obj f = fc->apply(arrow());
  CHECK(f.hom(at("u"), at("v")).members().size() == 1);
  CHECK(f.hom(at("u"), at("u")).members().size() == 1);
  CHECK(f.hom(at("v"), at("u")).members().empty());
  CHECK(f.hom(at("u"), at("v")).members()[0].str().find("e") != std::string::npos);
}

TEST_CASE("Kelly count matches fc on random graphs") {
  Rng rng(5);
  auto fc = fc_monad(finset_base());
  for (int i = 0; i < 10; ++i) {
    Obj x = random_graph(rng, 4, 5);
    Obj f = fc->apply(x, 3);
    for (const auto& a : x.members())
      for (const auto& b : x.members()) CHECK(f.hom(a, b).members().size() == kelly_count(x, a, b, 3));
  }
}

TEST_CASE("fc unit and multiplication on a composable pair") {
  auto fc = fc_monad(finset_base());
  Obj x = chain3();
  Obj f = fc->apply(x);
  Obj ff = fc->apply(f, 3);
  CHECK(f.hom(at("u"), at("w")).members().size() == 1);
  // Every cell of fc(fc x) from u to w multiplies to the single composite.
  Term composite = Term::hom(at("u"), at("w"), f.hom(at("u"), at("w")).members()[0]);
  for (const auto& c : ff.hom(at("u"), at("w")).members())
    CHECK(fc->mult(1, Term::hom(at("u"), at("w"), c)) == composite);
  for (const auto& c : cells(x, 1)) CHECK(fc->mult(1, fc->unit(1, fc->unit(1, c))) == fc->unit(1, c));
}

TEST_CASE("lifted writer doubles homs") {
  auto t = lift_monad(writer_z2());
  Obj x = globset_to_ngraph(testing::graph({"u", "v"}, {{"a", "u", "v"}, {"b", "u", "v"}, {"c", "u", "v"}}));
  CHECK(t->apply(x).hom(at("u"), at("v")).members().size() == 6);
}

TEST_CASE("monad laws hold for fc, writer and the strict tower") {
  auto gen = [](Rng& r) { return random_graph(r, 4, 5); };
  CHECK(monad_law_report(*fc_monad(finset_base()), 20, 4, 7, gen).ok());
  CHECK(monad_law_report(*writer_z2(), 5, 3, 1, [](Rng& r) { return random_set(r, 3); }).ok());
  CHECK(monad_law_report(*fm_step(writer_z2()), 5, 2, 3, [](Rng& r) { return random_graph(r, 3, 4); }).ok());
  auto tower = strict_tower(2);
  for (std::size_t k = 1; k <= 2; ++k)
    CHECK(monad_law_report(*tower[k].monad, 3, 3, 11, [k](Rng& r) { return random_ngraph(k, 3, r); }).ok());
}

TEST_CASE("frozen fc law count") {
  auto r = monad_law_report(*fc_monad(finset_base()), 20, 4, 7, [](Rng& g) { return random_graph(g, 4, 5); });
  CHECK(r.checked == testing::load("golden.json")["fc_laws_seed7_b4_checked"]["value"].get<std::size_t>());
}

TEST_CASE("a wrong multiplication is caught") {
  WrongMult bad(fc_monad(finset_base()), loop());
  CHECK_FALSE(check_monad_laws(bad, loop(), 3).empty());
}

TEST_CASE("Eilenberg-Moore algebras") {
  auto fc = fc_monad(finset_base());
  Obj x = chain3();
  CHECK_FALSE(check_algebra(*fc, fc->apply(x), multFn(fc), 3).has_value());
  Obj one = vgraph_base(finset_base())->terminalObj();
  CHECK_FALSE(check_algebra(*fc, one, [](std::size_t d, const Term&) { return terminalCell(d); }, 3).has_value());
  // The graph itself has no composite u -> w.
  CHECK(check_algebra(*fc, x, [](std::size_t, const Term& c) { return c; }, 3).has_value());
}

TEST_CASE("distributive laws and truncation morphisms") {
  Rng rng(5);
  auto tower = strict_tower(3);
  for (int i = 0; i < 3; ++i) {
    CHECK_FALSE(check_dist_law(writer_z2(), nullptr, random_graph(rng, 3, 4), 2).has_value());
    CHECK_FALSE(check_dist_law(tower[1].monad, nullptr, random_ngraph(2, 2, rng), 2).has_value());
    for (std::size_t k = 1; k <= 3; ++k)
      CHECK_FALSE(check_monad_morphism(truncation_morphism(tower, k), random_ngraph(k, 2, rng), k - 1, 2).has_value());
  }
  CHECK_THROWS_AS(strict_tower(4), UnsupportedDepth);
}

TEST_CASE("pasting diagrams") {
  CHECK(parse_tree("(()())").edges() == 2);
  CHECK(parse_tree("((()))").height() == 2);
  CHECK(parse_tree("((())())").truncated(1) == parse_tree("(()())"));
  CHECK(parse_tree("(()(()))").str() == "(()(()))");
  CHECK_THROWS(parse_tree("(()"));
  CHECK(tn_terminal_globset(1, 3).count(1) == 4);
}

TEST_CASE("tower cells agree with the tree oracle") {
  auto golden = testing::load("golden.json");
  CHECK(enumerate_tn_cells(2, GlobSet::terminal(2), 2, 2).size() ==
        golden["oracle_n2_terminal_d2_b2"]["value"].get<std::size_t>());
  auto g = globset_from_json(testing::load("globset_n2_seed7.json"));
  auto d2 = golden["oracle_globset_n2_seed7_d2"]["value"].get<std::vector<std::size_t>>();
  auto d1 = golden["oracle_globset_n2_seed7_d1"]["value"].get<std::vector<std::size_t>>();
  for (std::size_t b = 0; b <= 3; ++b) {
    CHECK(pasting_oracle(2, g, 2, b) == d2[b]);
    CHECK(enumerate_tn_cells(2, g, 2, b).size() == d2[b]);
    CHECK(enumerate_tn_cells(2, g, 1, b).size() == d1[b]);
  }
  Rng rng(7);
  for (int s = 0; s < 5; ++s)
    for (std::size_t n = 1; n <= 2; ++n) {
      auto x = random_globset(n, 3, rng);
      for (std::size_t d = 0; d <= n; ++d) CHECK(enumerate_tn_cells(n, x, d, 3).size() == pasting_oracle(n, x, d, 3));
    }
}
