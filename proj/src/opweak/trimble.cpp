#include "omega/opweak/trimble.hpp"

#include <unordered_set>

#include "omega/gcore/ngraph.hpp"

namespace omega::opweak {

using gcore::cells;

MonadPtr dm_step(MonadPtr t, const FinOperad& weights) { return monads::fm_step(std::move(t), weights.weighting()); }

std::vector<TrimbleLevel> trimble_tower(const FinOperad& seed, std::size_t n, Mode mode) {
  if (n > kMaxTrimbleDepth)
    throw monads::UnsupportedDepth("trimble tower depth " + std::to_string(n) + " exceeds " +
                                   std::to_string(kMaxTrimbleDepth));
  std::vector<TrimbleLevel> levels;
  TrimbleLevel zero;
  zero.mode = mode;
  zero.base = gcore::finset_base();
  zero.monad = monads::identity_monad(zero.base);
  levels.push_back(zero);
  for (std::size_t k = 1; k <= n; ++k) {
    TrimbleLevel l;
    l.n = k;
    l.mode = mode;
    l.operad = apply_pi(seed, k - 1, mode);
    l.monad = dm_step(levels.back().monad, *l.operad);
    l.base = l.monad->base();
    levels.push_back(std::move(l));
  }
  return levels;
}

gcore::CellFn relabel_to_strict(std::size_t n) {
  if (n == 0) return gcore::identityCellFn();
  auto v = gcore::ngraph_base(n - 1);
  auto sub = relabel_to_strict(n - 1);
  return [v, sub](std::size_t d, const Term& cell) {
    if (d == 0) return cell;
    std::size_t j = d - 1;
    auto [tag, prod] = v->splitCell(j, cell.arg(2));
    auto parts = v->projectCell(j, prod, tag.arity());
    std::vector<Term> rest;
    for (std::size_t i = 1; i < parts.size(); ++i) rest.push_back(sub(j, parts[i]));
    return Term::hom(cell.arg(0), cell.arg(1), v->coproductCell(j, tag, v->productCell(j, rest)));
  };
}

std::optional<std::string> check_strict_collapse(const FinOperad& seed, Mode mode, std::size_t n, const Obj& x,
                                                 std::size_t bound) {
  auto it = trimble_tower(seed, n, mode)[n].monad;
  auto t = monads::strict_tower(n)[n].monad;
  auto rel = relabel_to_strict(n);
  Obj a = it->apply(x, bound), b = t->apply(x, bound);
  Obj aa = it->apply(a, bound);
  for (std::size_t d = 0; d <= n; ++d) {
    auto bc = cells(b, d, bound);
    std::unordered_set<Term, TermHash> target(bc.begin(), bc.end()), hit;
    for (const auto& c : cells(a, d, bound)) {
      Term r = rel(d, c);
      if (r.size() != c.size()) return "relabeling changes the size of " + c.str();
      if (!target.contains(r)) return c.str() + " has no strict counterpart";
      if (!hit.insert(r).second) return "two cells relabel to " + r.str();
    }
    if (hit.size() != target.size()) return "strict cells missed in dimension " + std::to_string(d);
    for (const auto& c : cells(x, d, bound))
      if (!(rel(d, it->unit(d, c)) == t->unit(d, c))) return "units disagree at " + c.str();
    for (const auto& u : cells(aa, d, bound)) {
      Term lhs = rel(d, it->mult(d, u));
      Term rhs = t->mult(d, t->fmap(rel, d, rel(d, u)));
      if (!(lhs == rhs)) return "multiplications disagree at " + u.str();
    }
  }
  return std::nullopt;
}

MonadPtr pk_monad(const FinOperad& seed, Mode mode, std::size_t n, std::size_t k) {
  if (k >= n) throw std::invalid_argument("P_k needs k < n");
  MonadPtr p = monads::fc_monad(gcore::ngraph_base(n - 1 - k), apply_pi(seed, n - 1 - k, mode).weighting());
  for (std::size_t i = 0; i < k; ++i) p = monads::lift_monad(p);
  return p;
}

CompositeReport composite_check(const FinOperad& seed, Mode mode, const gcore::GlobSet& x, std::size_t n,
                                std::size_t bound) {
  if (x.n < n) throw gcore::DimensionError("input has dimension below " + std::to_string(n));
  Obj in = gcore::globset_to_ngraph(gcore::truncate_globset(x, n));
  CompositeReport r;
  r.n = n;
  r.bound = bound;
  Obj lhs = trimble_tower(seed, n, mode)[n].monad->apply(in, bound);
  Obj rhs = in;
  for (std::size_t k = n; k-- > 0;) rhs = pk_monad(seed, mode, n, k)->apply(rhs, bound);
  for (std::size_t d = 0; d <= n; ++d) {
    auto lc = cells(lhs, d, bound), rc = cells(rhs, d, bound);
    r.towerCounts.push_back(lc.size());
    r.compositeCounts.push_back(rc.size());
    if (r.witness) continue;
    std::unordered_set<Term, TermHash> ls(lc.begin(), lc.end()), rs(rc.begin(), rc.end());
    for (const auto& c : lc)
      if (!rs.contains(c)) {
        r.witness = "only in the tower: " + c.str();
        break;
      }
    if (!r.witness)
      for (const auto& c : rc)
        if (!ls.contains(c)) {
          r.witness = "only in the composite: " + c.str();
          break;
        }
  }
  return r;
}

nlohmann::json to_json(const CompositeReport& r) {
  nlohmann::json j{{"n", r.n}, {"bound", r.bound}, {"ok", r.ok()}, {"tower_counts", r.towerCounts},
                   {"composite_counts", r.compositeCounts}};
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

}  // namespace omega::opweak
