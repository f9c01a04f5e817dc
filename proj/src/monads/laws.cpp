#include "omega/monads/laws.hpp"

#include <map>
#include <unordered_set>

#include "omega/gcore/ngraph.hpp"

namespace omega::monads {

using gcore::cells;

std::vector<LawFailure> check_monad_laws(const Monad& t, const Obj& x, std::size_t bound, std::size_t* checked) {
  std::vector<LawFailure> out;
  std::size_t count = 0;
  const std::size_t depth = t.base()->depth();
  Obj tx = t.apply(x, bound);
  Obj ttx = t.apply(tx, bound);
  Obj tttx = t.apply(ttx, bound);
  auto fail = [&](const char* law, std::size_t d, const Term& c) { out.push_back({0, law, d, c.str()}); };
  CellFn unit = [&t](std::size_t d, const Term& c) { return t.unit(d, c); };
  CellFn mult = [&t](std::size_t d, const Term& c) { return t.mult(d, c); };
  for (std::size_t d = 0; d <= depth; ++d) {
    for (const auto& c : cells(tx, d, bound)) {
      ++count;
      if (!(t.mult(d, t.unit(d, c)) == c)) fail("left-unit", d, c);
      if (!(t.mult(d, t.fmap(unit, d, c)) == c)) fail("right-unit", d, c);
    }
    for (const auto& c : cells(ttx, d, bound)) {
      ++count;
      if (!gcore::hasCell(tx, d, t.mult(d, c))) fail("well-typed", d, c);
    }
    for (const auto& c : cells(tttx, d, bound)) {
      ++count;
      if (!(t.mult(d, t.mult(d, c)) == t.mult(d, t.fmap(mult, d, c)))) fail("associativity", d, c);
    }
  }
  if (checked) *checked += count;
  return out;
}

Obj random_graph(Rng& rng, std::size_t maxObjects, std::size_t maxEdges) {
  std::size_t n = rng.between(1, std::max<std::size_t>(maxObjects, 1));
  std::size_t e = rng.between(0, maxEdges);
  std::vector<Term> objs;
  for (std::size_t i = 0; i < n; ++i) objs.push_back(Term::atom("x" + std::to_string(i)));
  std::vector<std::vector<Term>> homs(n * n);
  for (std::size_t i = 0; i < e; ++i) homs[rng.below(n * n)].push_back(Term::atom("e" + std::to_string(i)));
  std::vector<Obj> hs;
  for (auto& h : homs) hs.push_back(Obj::set(std::move(h)));
  return Obj::graph(std::move(objs), std::move(hs), 1, Obj::Kind::Set);
}

Obj random_ngraph(std::size_t n, std::size_t maxPerDim, Rng& rng) {
  return gcore::globset_to_ngraph(gcore::random_globset(n, maxPerDim, rng));
}

Obj random_set(Rng& rng, std::size_t maxSize) {
  std::size_t n = rng.between(0, maxSize);
  std::vector<Term> elems;
  for (std::size_t i = 0; i < n; ++i) elems.push_back(Term::atom("s" + std::to_string(i)));
  return Obj::set(std::move(elems));
}

LawReport monad_law_report(const Monad& t, std::size_t samples, std::size_t bound, std::uint64_t seed,
                           const ObjGenerator& gen) {
  LawReport r;
  r.monad = t.name();
  r.samples = samples;
  r.bound = bound;
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Obj x = gen(rng);
    for (auto& f : check_monad_laws(t, x, bound, &r.checked)) {
      f.sample = s;
      r.failures.push_back(std::move(f));
    }
  }
  return r;
}

nlohmann::json to_json(const LawReport& r) {
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : r.failures)
    fails.push_back({{"sample", f.sample}, {"law", f.law}, {"dim", f.dim}, {"cell", f.cell}});
  return {{"monad", r.monad}, {"samples", r.samples}, {"bound", r.bound}, {"checked", r.checked},
          {"ok", r.ok()}, {"failures", fails}};
}

std::optional<std::string> check_algebra(const Monad& t, const Obj& carrier, const CellFn& action, std::size_t bound) {
  const std::size_t depth = t.base()->depth();
  Obj ta = t.apply(carrier, bound);
  Obj tta = t.apply(ta, bound);
  for (std::size_t d = 0; d <= depth; ++d) {
    for (const auto& c : cells(carrier, d, bound))
      if (!(action(d, t.unit(d, c)) == c)) return "unit axiom fails at " + c.str();
    for (const auto& c : cells(ta, d, bound))
      if (!gcore::hasCell(carrier, d, action(d, c))) return "action leaves the carrier at " + c.str();
    for (const auto& c : cells(tta, d, bound))
      if (!(action(d, t.mult(d, c)) == action(d, t.fmap(action, d, c))))
        return "multiplication axiom fails at " + c.str();
  }
  return std::nullopt;
}

std::optional<std::string> check_dist_law(MonadPtr t, WeightingPtr w, const Obj& x, std::size_t bound) {
  auto lifted = lift_monad(t);
  auto fc = fc_monad(t->base(), w);
  CellFn lambda = dist_law_fn(t, w);
  const std::size_t depth = fc->base()->depth();
  Obj tx = lifted->apply(x, bound);
  Obj fx = fc->apply(x, bound);
  Obj tfx = lifted->apply(fx, bound);
  Obj tffx = lifted->apply(fc->apply(fx, bound), bound);
  Obj ttfx = lifted->apply(tfx, bound);
  for (std::size_t d = 0; d <= depth; ++d) {
    for (const auto& c : cells(tx, d, bound))
      if (!(lambda(d, lifted->fmap(unitFn(fc), d, c)) == fc->unit(d, c)))
        return "λ ∘ T(η) ≠ η_T at " + c.str();
    for (const auto& c : cells(fx, d, bound))
      if (!(lambda(d, lifted->unit(d, c)) == fc->fmap(unitFn(lifted), d, c)))
        return "λ ∘ η_T ≠ fc(η_T) at " + c.str();
    for (const auto& c : cells(tffx, d, bound)) {
      Term lhs = lambda(d, lifted->fmap(multFn(fc), d, c));
      Term rhs = fc->mult(d, fc->fmap(lambda, d, lambda(d, c)));
      if (!(lhs == rhs)) return "λ ∘ T(μ) ≠ μ ∘ fc(λ) ∘ λ at " + c.str();
    }
    for (const auto& c : cells(ttfx, d, bound)) {
      Term lhs = lambda(d, lifted->mult(d, c));
      Term rhs = fc->fmap(multFn(lifted), d, lambda(d, lifted->fmap(lambda, d, c)));
      if (!(lhs == rhs)) return "λ ∘ μ_T ≠ fc(μ_T) ∘ λ ∘ T(λ) at " + c.str();
    }
  }
  return std::nullopt;
}

std::size_t kelly_count(const Obj& x, const Term& a, const Term& b, std::size_t bound) {
  const auto& objs = x.members();
  std::map<Term, std::size_t> ways;
  for (const auto& o : objs) ways[o] = 0;
  ways[a] = 1;
  std::size_t total = ways[b];
  for (std::size_t k = 1; k <= bound; ++k) {
    std::map<Term, std::size_t> next;
    for (const auto& o : objs) next[o] = 0;
    for (const auto& u : objs)
      for (const auto& v : objs) next[v] += ways[u] * x.hom(u, v).members().size();
    ways = std::move(next);
    total += ways[b];
  }
  return total;
}

}  // namespace omega::monads
