#include "omega/monads/monad.hpp"

#include <map>
#include <unordered_set>

#include "omega/gcore/globset.hpp"

namespace omega::monads {

using gcore::DimensionError;
using gcore::EnrichmentBase;

CellFn unitFn(MonadPtr t) {
  return [t = std::move(t)](std::size_t d, const Term& c) { return t->unit(d, c); };
}
CellFn multFn(MonadPtr t) {
  return [t = std::move(t)](std::size_t d, const Term& c) { return t->mult(d, c); };
}
CellFn fmapFn(MonadPtr t, CellFn f) {
  return [t = std::move(t), f = std::move(f)](std::size_t d, const Term& c) { return t->fmap(f, d, c); };
}

Term globalCell(std::size_t depth, const Term& e, std::size_t dim) {
  if (depth == 0) {
    if (dim != 0) throw DimensionError("set elements only have dimension 0");
    return e;
  }
  if (!e.is(Term::Kind::Hom)) throw DimensionError("not a global element of a graph: " + e.str());
  if (dim == 0) return e.arg(0);
  return Term::hom(e.arg(0), e.arg(0), globalCell(depth - 1, e.arg(2), dim - 1));
}

WeightingPtr terminal_weighting(BasePtr v, std::size_t cap) {
  auto w = std::make_shared<Weighting>();
  w->name = "terminal";
  w->cap = cap;
  w->ops = [v](std::size_t) { return v->terminalObj(); };
  w->compose = [](std::size_t dim, const Term&, const std::vector<Term>&) { return gcore::terminalCell(dim); };
  w->unit = [](std::size_t dim) { return gcore::terminalCell(dim); };
  w->action = [](std::size_t, std::size_t dim, const Term&) { return gcore::terminalCell(dim); };
  return w;
}

namespace {

bool isPointBase(const EnrichmentBase& v) { return v.depth() == 0 && v.bottom() == Obj::Kind::Point; }

// ---- identity ---------------------------------------------------------------

class IdentityMonad final : public Monad {
 public:
  explicit IdentityMonad(BasePtr v) : v_(std::move(v)) {}
  std::string name() const override { return "identity"; }
  const BasePtr& base() const override { return v_; }
  Obj apply(const Obj& x, std::size_t bound) const override { return gcore::restrict(x, bound); }
  Term unit(std::size_t, const Term& c) const override { return c; }
  Term mult(std::size_t, const Term& c) const override { return c; }
  Term fmap(const CellFn& f, std::size_t d, const Term& c) const override { return f(d, c); }
  std::pair<Term, Term> split(std::size_t d, const Term& c) const override { return v_->splitCell(d, c); }

 private:
  BasePtr v_;
};

// ---- writer -----------------------------------------------------------------

class WriterMonad final : public Monad {
 public:
  WriterMonad(std::vector<std::string> elems, std::vector<std::vector<std::size_t>> table)
      : elems_(std::move(elems)), table_(std::move(table)), v_(gcore::finset_base()) {
    for (std::size_t i = 0; i < elems_.size(); ++i) index_[elems_[i]] = i;
  }
  std::string name() const override { return "writer"; }
  const BasePtr& base() const override { return v_; }
  Obj apply(const Obj& x, std::size_t bound) const override {
    std::vector<Term> out;
    for (const auto& m : elems_)
      for (const auto& e : x.members())
        if (e.size() <= bound) out.push_back(Term::tuple({Term::atom(m), e}));
    return Obj::set(std::move(out));
  }
  Term unit(std::size_t, const Term& c) const override { return Term::tuple({Term::atom(elems_[0]), c}); }
  Term mult(std::size_t, const Term& c) const override {
    const auto& inner = c.arg(1);
    std::size_t m = index_.at(c.arg(0).name());
    std::size_t n = index_.at(inner.arg(0).name());
    return Term::tuple({Term::atom(elems_[table_[m][n]]), inner.arg(1)});
  }
  Term fmap(const CellFn& f, std::size_t d, const Term& c) const override {
    return Term::tuple({c.arg(0), f(d, c.arg(1))});
  }
  std::pair<Term, Term> split(std::size_t d, const Term& c) const override {
    auto [tag, x] = gcore::unpackInj(d, c.arg(1));
    return {tag, Term::tuple({c.arg(0), x})};
  }

 private:
  std::vector<std::string> elems_;
  std::vector<std::vector<std::size_t>> table_;
  std::map<std::string, std::size_t> index_;
  BasePtr v_;
};

// ---- lifting ----------------------------------------------------------------

class LiftedMonad final : public Monad {
 public:
  explicit LiftedMonad(MonadPtr t) : t_(std::move(t)), b_(gcore::vgraph_base(t_->base())) {}
  std::string name() const override { return t_->name() + "_*"; }
  const BasePtr& base() const override { return b_; }
  Obj apply(const Obj& x, std::size_t bound) const override {
    std::vector<Term> objs;
    for (const auto& a : x.members())
      if (a.size() <= bound) objs.push_back(a);
    return gcore::make_graph(*t_->base(), objs, [&](const Term& a, const Term& b) {
      return t_->apply(x.hom(a, b), bound - a.size());
    });
  }
  Term unit(std::size_t d, const Term& c) const override {
    if (d == 0) return c;
    return Term::hom(c.arg(0), c.arg(1), t_->unit(d - 1, c.arg(2)));
  }
  Term mult(std::size_t d, const Term& c) const override {
    if (d == 0) return c;
    return Term::hom(c.arg(0), c.arg(1), t_->mult(d - 1, c.arg(2)));
  }
  Term fmap(const CellFn& f, std::size_t d, const Term& c) const override {
    if (d == 0) return f(0, c);
    const Term& a = c.arg(0);
    const Term& b = c.arg(1);
    return Term::hom(f(0, a), f(0, b), t_->fmap(gcore::homComponent(f, a, b), d - 1, c.arg(2)));
  }
  std::pair<Term, Term> split(std::size_t d, const Term& c) const override { return gcore::unpackInj(d, c); }

 private:
  MonadPtr t_;
  BasePtr b_;
};

// ---- free category ----------------------------------------------------------

/// A hom cell of a free category, taken apart.
struct PathCell {
  std::vector<Term> objects;      // a_0 .. a_k
  std::optional<Term> weight;     // the P(k) component
  std::vector<Term> components;   // c_k, ..., c_1
};

class FreeCategoryMonad final : public Monad {
 public:
  FreeCategoryMonad(BasePtr v, WeightingPtr w) : v_(std::move(v)), w_(std::move(w)), b_(gcore::vgraph_base(v_)) {}

  std::string name() const override { return w_ ? "fc[" + w_->name + "]" : "fc"; }
  const BasePtr& base() const override { return b_; }

  PathCell unpack(std::size_t j, const Term& c) const {
    auto [tag, prod] = v_->splitCell(j, c);
    if (!tag.is(Term::Kind::Path)) throw DimensionError("free-category cell without a path index: " + c.str());
    PathCell out;
    out.objects = tag.args();
    std::size_t k = out.objects.size() - 1;
    auto parts = v_->projectCell(j, prod, k + (w_ ? 1 : 0));
    std::size_t first = 0;
    if (w_) {
      out.weight = parts[0];
      first = 1;
    }
    out.components.assign(parts.begin() + static_cast<std::ptrdiff_t>(first), parts.end());
    return out;
  }

  Term pack(std::size_t j, const PathCell& p) const {
    std::vector<Term> parts;
    parts.reserve(p.components.size() + 1);
    if (w_) parts.push_back(*p.weight);
    parts.insert(parts.end(), p.components.begin(), p.components.end());
    return v_->coproductCell(j, Term::path(p.objects), v_->productCell(j, parts));
  }

  Obj apply(const Obj& x, std::size_t bound) const override {
    std::vector<Term> objs;
    for (const auto& a : x.members())
      if (a.size() <= bound) objs.push_back(a);
    if (isPointBase(*v_))
      return gcore::make_graph(*v_, objs, [](const Term&, const Term&) { return Obj::point(); });
    std::vector<Obj> homs;
    homs.reserve(objs.size() * objs.size());
    for (const auto& a : objs) {
      std::map<Term, std::vector<std::pair<Term, Obj>>> summands;
      std::vector<Term> path{a};
      std::vector<Obj> factors;
      if (w_) factors.push_back(Obj());
      collect(x, objs, bound - a.size(), path, factors, summands);
      for (const auto& b : objs) {
        auto it = summands.find(b);
        if (it == summands.end())
          homs.push_back(v_->initialObj());
        else
          homs.push_back(v_->coproduct(std::span<const std::pair<Term, Obj>>(it->second)));
      }
    }
    return Obj::graph(std::move(objs), std::move(homs), b_->depth(), b_->bottom());
  }

  Term unit(std::size_t d, const Term& c) const override {
    if (d == 0) return c;
    if (isPointBase(*v_)) return c;
    std::size_t j = d - 1;
    PathCell p;
    p.objects = {c.arg(0), c.arg(1)};
    if (w_) p.weight = w_->unit(j);
    p.components = {c.arg(2)};
    return Term::hom(c.arg(0), c.arg(1), pack(j, p));
  }

  Term mult(std::size_t d, const Term& c) const override {
    if (d == 0 || isPointBase(*v_)) return c;
    std::size_t j = d - 1;
    PathCell outer = unpack(j, c.arg(2));
    std::size_t k = outer.objects.size() - 1;
    PathCell res;
    res.objects = {outer.objects.front()};
    std::vector<PathCell> inner;
    inner.reserve(k);
    // components are stored last edge first
    for (std::size_t i = 1; i <= k; ++i) inner.push_back(unpack(j, outer.components[k - i]));
    for (const auto& p : inner) res.objects.insert(res.objects.end(), p.objects.begin() + 1, p.objects.end());
    for (std::size_t i = k; i >= 1; --i)
      res.components.insert(res.components.end(), inner[i - 1].components.begin(), inner[i - 1].components.end());
    if (w_) {
      std::vector<Term> qs;
      for (const auto& p : inner) qs.push_back(*p.weight);
      res.weight = w_->compose(j, *outer.weight, qs);
    }
    return Term::hom(c.arg(0), c.arg(1), pack(j, res));
  }

  Term fmap(const CellFn& f, std::size_t d, const Term& c) const override {
    if (d == 0) return f(0, c);
    Term fa = f(0, c.arg(0));
    Term fb = f(0, c.arg(1));
    if (isPointBase(*v_)) return Term::hom(fa, fb, c.arg(2));
    std::size_t j = d - 1;
    PathCell p = unpack(j, c.arg(2));
    std::size_t k = p.objects.size() - 1;
    PathCell q;
    q.weight = p.weight;
    for (const auto& o : p.objects) q.objects.push_back(f(0, o));
    for (std::size_t t = 0; t < k; ++t) {
      std::size_t i = k - t;  // edge a_{i-1} -> a_i
      q.components.push_back(gcore::homComponent(f, p.objects[i - 1], p.objects[i])(j, p.components[t]));
    }
    return Term::hom(fa, fb, pack(j, q));
  }

  std::pair<Term, Term> split(std::size_t d, const Term& c) const override {
    if (d == 0) return gcore::unpackInj(0, c);
    auto [ta, a] = gcore::unpackInj(0, c.arg(0));
    auto [tb, b] = gcore::unpackInj(0, c.arg(1));
    if (!(ta == tb)) throw DimensionError("cell crosses coproduct components: " + c.str());
    if (isPointBase(*v_)) return {ta, Term::hom(a, b, c.arg(2))};
    std::size_t j = d - 1;
    PathCell p = unpack(j, c.arg(2));
    for (auto& o : p.objects) {
      auto [t, x] = gcore::unpackInj(0, o);
      if (!(t == ta)) throw DimensionError("path leaves its coproduct component: " + c.str());
      o = x;
    }
    return {ta, Term::hom(a, b, pack(j, p))};
  }

  const BasePtr& inner() const { return v_; }
  const WeightingPtr& weighting() const { return w_; }

 private:
  void collect(const Obj& x, const std::vector<Term>& objs, std::size_t budget, std::vector<Term>& path,
               std::vector<Obj>& factors, std::map<Term, std::vector<std::pair<Term, Obj>>>& out) const {
    std::size_t k = path.size() - 1;
    if (w_) {
      if (k > w_->cap) {
        // A longer path exists within the budget; the operad cannot weight it.
        throw CapError("a path of length " + std::to_string(k) + " exceeds the operad cap " +
                       std::to_string(w_->cap));
      }
      factors[0] = w_->ops(k);
    }
    // factors hold P(k)?, then X(a_0,a_1), ..., in path order; the product
    // wants the last edge first.
    std::vector<Obj> ordered;
    ordered.reserve(factors.size());
    if (w_) ordered.push_back(factors[0]);
    for (std::size_t i = factors.size(); i > (w_ ? 1u : 0u); --i) ordered.push_back(factors[i - 1]);
    Obj prod = v_->product(ordered, budget - k);
    if (!prod.members().empty()) out[path.back()].emplace_back(Term::path(path), std::move(prod));
    if (k + 1 > budget) return;
    for (const auto& next : objs) {
      const Obj& h = x.hom(path.back(), next);
      if (h.members().empty()) continue;
      path.push_back(next);
      factors.push_back(h);
      collect(x, objs, budget, path, factors, out);
      factors.pop_back();
      path.pop_back();
    }
  }

  BasePtr v_;
  WeightingPtr w_;
  BasePtr b_;
};

// ---- composite --------------------------------------------------------------

class CompositeMonad final : public Monad {
 public:
  CompositeMonad(MonadPtr t, WeightingPtr w)
      : t_(t),
        lifted_(lift_monad(t)),
        fc_(std::make_shared<FreeCategoryMonad>(t->base(), w)),
        w_(std::move(w)) {}

  std::string name() const override { return fc_->name() + "∘" + lifted_->name(); }
  const BasePtr& base() const override { return fc_->base(); }
  Obj apply(const Obj& x, std::size_t bound) const override { return fc_->apply(lifted_->apply(x, bound), bound); }
  Term unit(std::size_t d, const Term& c) const override { return fc_->unit(d, lifted_->unit(d, c)); }
  Term fmap(const CellFn& f, std::size_t d, const Term& c) const override {
    return fc_->fmap(fmapFn(lifted_, f), d, c);
  }
  Term mult(std::size_t d, const Term& c) const override {
    CellFn lambda = [this](std::size_t dd, const Term& cc) {
      return dist_law(*t_, *t_->base(), w_.get(), dd, cc);
    };
    Term swapped = fc_->fmap(lambda, d, c);
    Term flat = fc_->mult(d, swapped);
    return fc_->fmap(multFn(lifted_), d, flat);
  }
  std::pair<Term, Term> split(std::size_t d, const Term& c) const override { return fc_->split(d, c); }

 private:
  MonadPtr t_;
  MonadPtr lifted_;
  std::shared_ptr<const FreeCategoryMonad> fc_;
  WeightingPtr w_;
};

}  // namespace

MonadPtr identity_monad(BasePtr v) { return std::make_shared<IdentityMonad>(std::move(v)); }

MonadPtr writer_monad(std::vector<std::string> elements, std::vector<std::vector<std::size_t>> table) {
  return std::make_shared<WriterMonad>(std::move(elements), std::move(table));
}

MonadPtr writer_z2() { return writer_monad({"e", "g"}, {{0, 1}, {1, 0}}); }

MonadPtr lift_monad(MonadPtr t) { return std::make_shared<LiftedMonad>(std::move(t)); }

MonadPtr fc_monad(BasePtr v, WeightingPtr w) { return std::make_shared<FreeCategoryMonad>(std::move(v), std::move(w)); }

Term dist_law(const Monad& t, const EnrichmentBase& v, const Weighting* w, std::size_t dim, const Term& cell) {
  if (dim == 0 || isPointBase(v)) return cell;
  std::size_t j = dim - 1;
  auto [tag, inner] = t.split(j, cell.arg(2));
  if (!tag.is(Term::Kind::Path)) throw DimensionError("distributive law applied off a free-category hom");
  std::size_t k = tag.arity() - 1;
  std::size_t arity = k + (w ? 1 : 0);
  std::vector<Term> parts;
  parts.reserve(arity);
  for (std::size_t i = 0; i < arity; ++i) {
    CellFn proj = [&v, i, arity](std::size_t d, const Term& c) { return v.projectCell(d, c, arity)[i]; };
    parts.push_back(t.fmap(proj, j, inner));
  }
  if (w) {
    if (!w->action) throw std::invalid_argument("weighting " + w->name + " has no algebra structure");
    parts[0] = w->action(k, j, parts[0]);
  }
  return Term::hom(cell.arg(0), cell.arg(1), v.coproductCell(j, tag, v.productCell(j, parts)));
}

CellFn dist_law_fn(MonadPtr t, WeightingPtr w) {
  return [t = std::move(t), w = std::move(w)](std::size_t d, const Term& c) {
    return dist_law(*t, *t->base(), w.get(), d, c);
  };
}

MonadPtr fm_step(MonadPtr t, WeightingPtr w) { return std::make_shared<CompositeMonad>(std::move(t), std::move(w)); }

Obj truncate_obj(const Obj& x) {
  if (x.kind() != Obj::Kind::Graph) throw DimensionError("only graphs can be truncated");
  if (x.layers() == 1) {
    if (x.bottom() == Obj::Kind::Point) return Obj::point();
    return Obj::set(x.members());
  }
  std::vector<Obj> homs;
  const auto n = x.members().size();
  homs.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) homs.push_back(truncate_obj(x.homAt(i, j)));
  return Obj::graph(x.members(), std::move(homs), x.layers() - 1, x.bottom());
}

std::optional<std::string> check_monad_morphism(const MonadMorphism& m, const Obj& x, std::size_t maxDim,
                                                std::size_t bound) {
  const auto& h = m.h;
  Obj hx = h.onObject(x);
  Obj left = h.onObject(m.source->apply(x, bound));
  Obj right = m.target->apply(hx, bound);
  for (std::size_t d = 0; d <= maxDim; ++d) {
    auto lc = gcore::cells(left, d, bound);
    auto rc = gcore::cells(right, d, bound);
    std::unordered_set<Term, TermHash> target(rc.begin(), rc.end());
    std::unordered_set<Term, TermHash> hit;
    for (const auto& c : lc) {
      Term img = m.theta(d, c);
      if (!target.contains(img)) return "θ sends " + c.str() + " outside T'(Hx)";
      if (!hit.insert(img).second) return "θ is not injective at " + img.str();
    }
    if (m.weak && hit.size() != target.size())
      return "θ is not surjective in dimension " + std::to_string(d);
    // θ ∘ H(η) = η' on cells of H x.
    for (const auto& c : gcore::cells(hx, d, bound)) {
      Term viaSource = m.theta(d, h.onCell(d, m.source->unit(d, c)));
      Term viaTarget = m.target->unit(d, c);
      if (!(viaSource == viaTarget)) return "unit square fails at " + c.str();
    }
  }
  // θ ∘ H(μ) = μ' ∘ T'(θ) ∘ θ_T on cells of H(T T x).
  Obj ttx = m.source->apply(m.source->apply(x, bound), bound);
  Obj httx = h.onObject(ttx);
  for (std::size_t d = 0; d <= maxDim; ++d) {
    for (const auto& c : gcore::cells(httx, d, bound)) {
      Term lhs = m.theta(d, h.onCell(d, m.source->mult(d, c)));
      Term rhs = m.target->mult(d, m.target->fmap(m.theta, d, m.theta(d, c)));
      if (!(lhs == rhs)) return "multiplication square fails at " + c.str();
    }
  }
  return std::nullopt;
}

MonadMorphism fm_morphism(const MonadMorphism& m, MonadPtr source, MonadPtr target) {
  MonadMorphism out;
  out.source = std::move(source);
  out.target = std::move(target);
  out.weak = m.weak;
  gcore::BaseFunctor h = m.h;
  BasePtr hb = m.target->base();
  out.h = gcore::BaseFunctor{m.h.name + "_*",
                             [h, hb](const Obj& x) { return gcore::apply_locally(h, *hb, x); },
                             gcore::apply_locally_cells(m.h)};
  // θ⁺ on a hom cell: H preserves the path coproduct and the products, so θ
  // acts on each component separately.
  CellFn theta = m.theta;
  BasePtr tv = m.target->base();
  out.theta = [theta, tv](std::size_t d, const Term& c) {
    if (d == 0 || isPointBase(*tv)) return c;
    std::size_t j = d - 1;
    auto [tag, prod] = tv->splitCell(j, c.arg(2));
    std::size_t k = tag.arity() - 1;
    auto parts = tv->projectCell(j, prod, k);
    for (auto& p : parts) p = theta(j, p);
    return Term::hom(c.arg(0), c.arg(1), tv->coproductCell(j, tag, tv->productCell(j, parts)));
  };
  return out;
}

std::vector<TowerLevel> strict_tower(std::size_t n) {
  if (n > kMaxTowerDepth)
    throw UnsupportedDepth("strict tower depth " + std::to_string(n) + " exceeds " + std::to_string(kMaxTowerDepth));
  std::vector<TowerLevel> out;
  out.push_back({gcore::finset_base(), identity_monad(gcore::finset_base())});
  for (std::size_t k = 1; k <= n; ++k) {
    auto m = fm_step(out.back().monad);
    out.push_back({m->base(), m});
  }
  return out;
}

MonadMorphism truncation_morphism(const std::vector<TowerLevel>& tower, std::size_t k) {
  if (k == 0 || k >= tower.size()) throw DimensionError("no truncation morphism at level " + std::to_string(k));
  MonadMorphism m;
  m.source = tower[k].monad;
  m.target = tower[k - 1].monad;
  m.h = gcore::BaseFunctor{"U" + std::to_string(k), truncate_obj, gcore::identityCellFn()};
  m.theta = gcore::identityCellFn();
  m.weak = true;
  return m;
}

}  // namespace omega::monads
