// One PASS/FAIL line per acceptance criterion.  Exits nonzero if any fails.
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "omega/blcoll/collection.hpp"
#include "omega/cli/cli.hpp"
#include "omega/coalgebra/coalgebra.hpp"
#include "omega/gcore/ngraph.hpp"
#include "omega/gcore/tower.hpp"
#include "omega/monads/laws.hpp"
#include "omega/monads/pasting.hpp"
#include "omega/opweak/operad.hpp"
#include "omega/opweak/trimble.hpp"

#ifndef OMEGA_CLI_PATH
#define OMEGA_CLI_PATH "omega-cli"
#endif

using namespace omega;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

using Seconds = std::chrono::duration<double>;

Outcome fcLaws() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  auto r = monads::monad_law_report(*monads::fc_monad(gcore::finset_base()), 20, 4, 7,
                                    [](Rng& g) { return monads::random_graph(g, 4, 5); });
  double secs = Seconds(std::chrono::steady_clock::now() - start).count();
  o.detail = std::to_string(r.checked) + " equations, " + std::to_string(r.failures.size()) + " failures, " +
             std::to_string(secs) + " s";
  if (!r.ok()) o.fail(nlohmann::json(monads::to_json(r)["failures"][0]).dump());
  if (secs >= 10.0) o.fail("took " + std::to_string(secs) + " s");
  return o;
}

Outcome towerOracle() {
  Outcome o;
  std::size_t checks = 0;
  auto compare = [&](std::size_t n, const gcore::GlobSet& g, const std::string& label) {
    for (std::size_t d = 0; d <= n; ++d)
      for (std::size_t b = 0; b <= 3; ++b) {
        ++checks;
        auto a = monads::enumerate_tn_cells(n, g, d, b).size();
        auto e = monads::pasting_oracle(n, g, d, b);
        if (a != e)
          o.fail(label + " n=" + std::to_string(n) + " d=" + std::to_string(d) + " b=" + std::to_string(b) + ": " +
                 std::to_string(a) + " vs " + std::to_string(e));
      }
  };
  for (std::size_t n = 1; n <= 2; ++n) {
    compare(n, gcore::GlobSet::terminal(n), "terminal");
    Rng rng(100 + n);
    for (int i = 0; i < 5; ++i) compare(n, gcore::random_globset(n, 3, rng), "random " + std::to_string(i));
  }
  if (o.ok) o.detail = std::to_string(checks) + " counts agree";
  return o;
}

Outcome lambek() {
  Outcome o;
  for (std::size_t m = 1; m <= 3; ++m) {
    std::vector<std::string> alphabet;
    for (std::size_t i = 0; i < m; ++i) alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
    auto chain = coalgebra::adamek_chain(coalgebra::word_functor(alphabet), 5);
    for (std::size_t d = 0; d <= 4; ++d) {
      auto r = coalgebra::lambek_probe(chain, d);
      if (!r.bijective) o.fail("word |M|=" + std::to_string(m) + " depth " + std::to_string(d));
    }
  }
  auto fm = coalgebra::adamek_chain(coalgebra::free_monoid_functor(3), 3);
  for (std::size_t d = 0; d <= 2; ++d)
    if (!coalgebra::lambek_probe(fm, d).bijective) o.fail("free monoid depth " + std::to_string(d));
  return o;
}

Outcome unfoldSwap() {
  Outcome o;
  auto f = coalgebra::word_functor({"a", "b"});
  auto c = coalgebra::word_coalgebra({"a", "b"}, {1, 0});
  for (std::size_t d = 0; d <= 10; ++d) {
    std::vector<std::string> expect;
    for (std::size_t i = 0; i < d; ++i) expect.push_back(i % 2 == 0 ? "a" : "b");
    if (coalgebra::flatten_word(coalgebra::unfold(*f, c, Term::atom("0"), d)) != expect)
      o.fail("depth " + std::to_string(d));
  }
  return o;
}

Outcome wrapUnwrap() {
  Outcome o;
  Rng rng(23);
  for (int i = 0; i < 5; ++i) {
    auto t = gcore::tower_of(gcore::random_globset(3, 3, rng));
    for (std::size_t depth = 1; depth <= 5; ++depth) {
      auto u = gcore::tower_unwrap(t, depth);
      auto w = gcore::tower_wrap(u);
      if (!w.equalTo(t, depth)) o.fail("wrap∘unwrap, tower " + std::to_string(i) + " depth " + std::to_string(depth));
      if (!gcore::tower_unwrap(w, depth).equalTo(u, depth - 1))
        o.fail("unwrap∘wrap, tower " + std::to_string(i) + " depth " + std::to_string(depth));
    }
  }
  return o;
}

// Random P-algebras of size <= 3: monoid-style folds for the terminal operad
// and translations for cyclic operads, some of them perturbed.
std::vector<opweak::OperadAlgebra> algebraInstances() {
  std::vector<opweak::OperadAlgebra> out;
  Rng rng(61);
  auto name = [](std::uint64_t i) { return Term::atom(std::to_string(i)); };
  for (int i = 0; i < 20; ++i) {
    std::size_t s = 1 + rng.below(3);
    std::vector<Term> carrier;
    for (std::size_t k = 0; k < s; ++k) carrier.push_back(name(k));
    std::vector<std::vector<std::size_t>> table(s, std::vector<std::size_t>(s));
    for (auto& row : table)
      for (auto& x : row) x = rng.below(s);
    std::size_t unit = rng.below(s);
    if (rng.coin())
      for (std::size_t a = 0; a < s; ++a) table[unit][a] = table[a][unit] = a;
    out.push_back({opweak::terminal_operad(gcore::finset_base(), 3), carrier,
                   [table, unit, name](const Term&, const std::vector<Term>& as) {
                     std::size_t v = unit;
                     for (const auto& a : as) v = table[v][std::stoul(a.str())];
                     return name(v);
                   }});
  }
  for (int i = 0; i < 10; ++i) {
    std::size_t m = 1 + rng.below(3);
    auto p = opweak::operad_from_json(cli::gen_random("operad", 2, m, 1 + i));
    std::vector<Term> carrier;
    for (std::size_t k = 0; k < m; ++k) carrier.push_back(name(k));
    bool perturb = rng.coin();
    out.push_back({p, carrier, [m, perturb, name](const Term& op, const std::vector<Term>& as) {
                     std::size_t v = std::stoul(op.str().substr(1));
                     for (const auto& a : as) v += std::stoul(a.str());
                     if (perturb && as.size() == 2) v += 1;
                     return name(v % m);
                   }});
  }
  return out;
}

Outcome degenerate() {
  Outcome o;
  Rng rng(7);
  for (int i = 0; i < 5; ++i)
    if (auto e = opweak::check_terminal_reduction(monads::random_graph(rng, 4, 5), 3)) o.fail("terminal operad: " + *e);
  std::size_t good = 0, bad = 0;
  for (const auto& alg : algebraInstances()) {
    bool asAlgebra = !opweak::check_operad_algebra(alg).has_value();
    auto cat = opweak::one_object_category(alg);
    bool asCategory = !opweak::check_weak_cat(cat, gcore::kUnbounded).has_value();
    bool back = !opweak::check_operad_algebra(opweak::algebra_of(cat)).has_value();
    if (asAlgebra != asCategory || asAlgebra != back) o.fail("one-object verdicts disagree");
    (asAlgebra ? good : bad)++;
  }
  if (good == 0 || bad == 0) o.fail("instances do not cover both verdicts");
  if (o.ok) o.detail = std::to_string(good) + " algebras, " + std::to_string(bad) + " non-algebras";
  return o;
}

Outcome strictCollapse() {
  Outcome o;
  auto seed = opweak::terminal_operad(gcore::finset_base(), 3);
  Rng rng(11);
  for (std::size_t n = 0; n <= 2; ++n) {
    std::vector<gcore::Obj> xs{gcore::globset_to_ngraph(gcore::GlobSet::terminal(n))};
    for (int i = 0; i < 3; ++i) xs.push_back(monads::random_ngraph(n, 3, rng));
    for (const auto& x : xs)
      if (auto e = opweak::check_strict_collapse(seed, opweak::Mode::Incoherent, n, x, 3))
        o.fail("n=" + std::to_string(n) + ": " + *e);
  }
  return o;
}

Outcome composite() {
  Outcome o;
  auto seed = opweak::terminal_operad(gcore::finset_base(), 3);
  Rng rng(3);
  for (std::size_t n = 0; n <= 2; ++n) {
    std::vector<gcore::GlobSet> xs{gcore::GlobSet::terminal(n)};
    for (int i = 0; i < 3; ++i) xs.push_back(gcore::random_globset(n, 3, rng));
    for (const auto& x : xs)
      for (std::size_t b = 0; b <= 2; ++b) {
        auto r = opweak::composite_check(seed, opweak::Mode::Incoherent, x, n, b);
        if (!r.ok()) o.fail(opweak::to_json(r).dump());
      }
  }
  return o;
}

Outcome contraction() {
  Outcome o;
  auto c = blcoll::identity_collection(2, 3);
  auto lift = blcoll::search_lift(c, 1);
  if (!blcoll::check_contraction(c, lift, 1).empty()) o.fail("identity collection rejected");
  Rng rng(42);
  for (int i = 0; i < 10; ++i) {
    std::size_t d = 1 + rng.below(2);
    auto id = c.a.cells[d][rng.below(c.a.cells[d].size())];
    auto missing = blcoll::check_contraction(blcoll::delete_cell(c, d, id), lift, 1);
    if (missing.size() != 1) o.fail("deleting " + id + " gave " + std::to_string(missing.size()) + " reports");
  }
  return o;
}

struct Captured {
  int status;
  std::string output;
};

Captured capture(const std::string& cmd) {
  Captured c{-1, {}};
  FILE* p = popen((cmd + " 2>&1").c_str(), "r");
  if (!p) return c;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) c.output.append(buf.data(), got);
  c.status = pclose(p);
  return c;
}

Outcome cliDeterminism() {
  Outcome o;
  const char* dir = std::getenv("OMEGA_FIXTURE_DIR");
  std::string fx = dir ? dir : "fixtures";
  const std::vector<std::string> commands{
      "validate --kind globset --input " + fx + "/terminal2.json",
      "validate --kind globset --input " + fx + "/bad_target.json",
      "validate --kind operad --input " + fx + "/operad_cyclic_seed1.json",
      "validate --kind collection --input " + fx + "/collection_n2_seed3.json",
      "validate --kind space --input " + fx + "/space_seed5.json",
      "truncate --dim 1 --input " + fx + "/globset_n2_seed7.json",
      "free-cat --dim 1 --bound 3 --input " + fx + "/graph_seed14.json --from x1 --to x0",
      "tn-cells --n 2 --dim 2 --bound 2 --input " + fx + "/globset_n2_seed7.json",
      "oracle --n 2 --dim 2 --bound 3 --input " + fx + "/globset_n2_seed7.json",
      "laws --monad fc --samples 5 --seed 7 --bound 3",
      "laws --monad trimble2 --samples 2 --seed 1 --bound 2",
      "adamek --functor word --alphabet a,b,c --depth 4",
      "adamek --functor free-monoid --grade 2 --depth 2",
      "unfold --depth 10",
      "trimble --n 2 --bound 2",
      "trimble --model graph --n 2 --bound 3 --input " + fx + "/space_two_cycle.json",
      "composite-check --n 2 --bound 2 --input " + fx + "/globset_n2_seed7.json",
      "collection-check --input " + fx + "/collection_n2_seed3.json",
      "gen-random --kind globset --n 2 --size 3 --seed 7",
      "gen-random --kind operad --n 2 --size 3 --seed 1",
      "gen-random --kind collection --n 2 --seed 3",
      "trimble --n 3",
  };
  for (const auto& args : commands) {
    std::string cmd = std::string("'") + OMEGA_CLI_PATH + "' " + args;
    auto a = capture(cmd), b = capture(cmd);
    if (a.status == -1 || a.output.empty()) o.fail("no output from: " + args);
    if (a.status != b.status || a.output != b.output) o.fail("runs differ: " + args);
  }
  if (o.ok) o.detail = std::to_string(commands.size()) + " commands";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"C1 fc laws on 20 seeded graphs, bound 4, under 10 s", fcLaws},
      {"C2 strict tower counts match the tree oracle", towerOracle},
      {"C3 Lambek probes for word and graded free-monoid functors", lambek},
      {"C4 unfold of the swap coalgebra to depth 10", unfoldSwap},
      {"C5 wrap and unwrap are inverse to depth 5", wrapUnwrap},
      {"C6 terminal-operad and one-object reductions", degenerate},
      {"C7 terminal seed collapses the tower to the strict one", strictCollapse},
      {"C8 composite of lifted fc monads matches the tower", composite},
      {"C9 tautological contraction and single deletions", contraction},
      {"C10 CLI output is byte-identical across runs", cliDeterminism},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << (o.detail.empty() ? "" : " (" + o.detail + ")") << "\n";
  }
  return failed == 0 ? 0 : 1;
}
