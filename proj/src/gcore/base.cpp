#include "omega/gcore/base.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "omega/gcore/globset.hpp"

namespace omega::gcore {

struct Obj::Data {
  Kind kind = Kind::Set;
  Kind bottom = Kind::Set;
  std::size_t layers = 0;
  std::vector<Term> members;
  std::unordered_map<Term, std::size_t, TermHash> index;
  std::vector<Obj> homs;
  std::optional<Obj> emptyHom;
};

namespace {

std::shared_ptr<const Obj::Data> makeData(Obj::Kind kind, Obj::Kind bottom, std::size_t layers,
                                          std::vector<Term> members, std::vector<Obj> homs,
                                          std::optional<Obj> emptyHom) {
  auto d = std::make_shared<Obj::Data>();
  d->kind = kind;
  d->bottom = bottom;
  d->layers = layers;
  d->members = std::move(members);
  d->index.reserve(d->members.size());
  for (std::size_t i = 0; i < d->members.size(); ++i) d->index.emplace(d->members[i], i);
  d->homs = std::move(homs);
  d->emptyHom = std::move(emptyHom);
  return d;
}

}  // namespace

Obj::Obj() : Obj(makeData(Kind::Set, Kind::Set, 0, {}, {}, std::nullopt)) {}
Obj::Obj(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

Term pointElement() { return Term::atom("★"); }

Obj Obj::point() { return Obj(makeData(Kind::Point, Kind::Point, 0, {pointElement()}, {}, std::nullopt)); }

Obj Obj::set(std::vector<Term> elements) {
  return Obj(makeData(Kind::Set, Kind::Set, 0, std::move(elements), {}, std::nullopt));
}

Obj emptyLike(std::size_t layers, Obj::Kind bottom) {
  if (layers == 0) return bottom == Obj::Kind::Point ? Obj::point() : Obj::set({});
  return Obj::graph({}, {}, layers, bottom);
}

Obj Obj::graph(std::vector<Term> objects, std::vector<Obj> homs, std::size_t layers, Kind bottom) {
  if (layers == 0) throw DimensionError("a graph has at least one layer");
  if (homs.size() != objects.size() * objects.size())
    throw std::invalid_argument("graph needs one hom per ordered pair of objects");
  for (const auto& h : homs)
    if (h.layers() + 1 != layers) throw DimensionError("hom-object at the wrong depth");
  Obj empty = emptyLike(layers - 1, bottom);
  return Obj(makeData(Kind::Graph, bottom, layers, std::move(objects), std::move(homs), std::move(empty)));
}

Obj::Kind Obj::kind() const noexcept { return d_->kind; }
Obj::Kind Obj::bottom() const noexcept { return d_->bottom; }
std::size_t Obj::layers() const noexcept { return d_->layers; }
const std::vector<Term>& Obj::members() const noexcept { return d_->members; }

std::optional<std::size_t> Obj::indexOf(const Term& t) const {
  auto it = d_->index.find(t);
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

const Obj& Obj::homAt(std::size_t i, std::size_t j) const {
  if (d_->kind != Kind::Graph) throw DimensionError("hom of a non-graph object");
  return d_->homs.at(i * d_->members.size() + j);
}

const Obj& Obj::hom(const Term& a, const Term& b) const {
  if (d_->kind != Kind::Graph) throw DimensionError("hom of a non-graph object");
  auto i = indexOf(a);
  auto j = indexOf(b);
  if (!i || !j) return *d_->emptyHom;
  return homAt(*i, *j);
}

bool operator==(const Obj& x, const Obj& y) {
  if (x.d_ == y.d_) return true;
  return x.d_->kind == y.d_->kind && x.d_->layers == y.d_->layers && x.d_->members == y.d_->members &&
         x.d_->homs == y.d_->homs;
}

std::vector<Term> cells(const Obj& x, std::size_t dim, std::size_t budget) {
  std::vector<Term> out;
  if (dim > x.layers()) return out;
  if (dim == 0) {
    for (const auto& m : x.members())
      if (m.size() <= budget) out.push_back(m);
    return out;
  }
  const auto& objs = x.members();
  for (std::size_t i = 0; i < objs.size(); ++i) {
    if (objs[i].size() > budget) continue;
    for (std::size_t j = 0; j < objs.size(); ++j) {
      if (objs[j].size() > budget) continue;
      for (auto& c : cells(x.homAt(i, j), dim - 1, budget - objs[i].size()))
        out.push_back(Term::hom(objs[i], objs[j], std::move(c)));
    }
  }
  return out;
}

std::size_t cellCount(const Obj& x, std::size_t dim, std::size_t budget) { return cells(x, dim, budget).size(); }

bool hasCell(const Obj& x, std::size_t dim, const Term& cell) {
  if (dim > x.layers()) return false;
  if (dim == 0) return x.hasMember(cell);
  if (!cell.is(Term::Kind::Hom)) return false;
  auto i = x.indexOf(cell.arg(0));
  auto j = x.indexOf(cell.arg(1));
  if (!i || !j) return false;
  return hasCell(x.homAt(*i, *j), dim - 1, cell.arg(2));
}

Term cellSource(std::size_t dim, const Term& cell) {
  if (dim == 0 || !cell.is(Term::Kind::Hom)) throw DimensionError("cell has no source: " + cell.str());
  if (dim == 1) return cell.arg(0);
  return Term::hom(cell.arg(0), cell.arg(1), cellSource(dim - 1, cell.arg(2)));
}

Term cellTarget(std::size_t dim, const Term& cell) {
  if (dim == 0 || !cell.is(Term::Kind::Hom)) throw DimensionError("cell has no target: " + cell.str());
  if (dim == 1) return cell.arg(1);
  return Term::hom(cell.arg(0), cell.arg(1), cellTarget(dim - 1, cell.arg(2)));
}

Obj restrict(const Obj& x, std::size_t budget) {
  switch (x.kind()) {
    case Obj::Kind::Point:
      return x;
    case Obj::Kind::Set: {
      std::vector<Term> keep;
      for (const auto& m : x.members())
        if (m.size() <= budget) keep.push_back(m);
      if (keep.size() == x.members().size()) return x;
      return Obj::set(std::move(keep));
    }
    case Obj::Kind::Graph:
      break;
  }
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < x.members().size(); ++i)
    if (x.members()[i].size() <= budget) idx.push_back(i);
  std::vector<Term> objs;
  std::vector<Obj> homs;
  objs.reserve(idx.size());
  homs.reserve(idx.size() * idx.size());
  for (auto i : idx) objs.push_back(x.members()[i]);
  for (auto i : idx)
    for (auto j : idx) homs.push_back(restrict(x.homAt(i, j), budget - x.members()[i].size()));
  return Obj::graph(std::move(objs), std::move(homs), x.layers(), x.bottom());
}

Term packProduct(std::size_t dim, std::span<const Term> parts) {
  if (dim == 0) return Term::tuple(std::vector<Term>(parts.begin(), parts.end()));
  std::vector<Term> as, bs, cs;
  as.reserve(parts.size());
  bs.reserve(parts.size());
  cs.reserve(parts.size());
  for (const auto& p : parts) {
    if (!p.is(Term::Kind::Hom)) throw DimensionError("product component is not a hom cell: " + p.str());
    as.push_back(p.arg(0));
    bs.push_back(p.arg(1));
    cs.push_back(p.arg(2));
  }
  return Term::hom(Term::tuple(std::move(as)), Term::tuple(std::move(bs)), packProduct(dim - 1, cs));
}

std::vector<Term> unpackProduct(std::size_t dim, const Term& cell, std::size_t arity) {
  if (dim == 0) {
    if (!cell.is(Term::Kind::Tuple) || cell.arity() != arity)
      throw DimensionError("expected a " + std::to_string(arity) + "-tuple, got " + cell.str());
    return cell.args();
  }
  if (!cell.is(Term::Kind::Hom)) throw DimensionError("expected a product hom cell, got " + cell.str());
  auto as = unpackProduct(0, cell.arg(0), arity);
  auto bs = unpackProduct(0, cell.arg(1), arity);
  auto cs = unpackProduct(dim - 1, cell.arg(2), arity);
  std::vector<Term> out;
  out.reserve(arity);
  for (std::size_t i = 0; i < arity; ++i) out.push_back(Term::hom(as[i], bs[i], cs[i]));
  return out;
}

Term packInj(std::size_t dim, const Term& tag, const Term& cell) {
  if (dim == 0) return Term::inj(tag, cell);
  if (!cell.is(Term::Kind::Hom)) throw DimensionError("coproduct component is not a hom cell: " + cell.str());
  return Term::hom(Term::inj(tag, cell.arg(0)), Term::inj(tag, cell.arg(1)), cell.arg(2));
}

std::pair<Term, Term> unpackInj(std::size_t dim, const Term& cell) {
  if (dim == 0) {
    if (!cell.is(Term::Kind::Inj)) throw DimensionError("expected an injection, got " + cell.str());
    return {cell.arg(0), cell.arg(1)};
  }
  if (!cell.is(Term::Kind::Hom)) throw DimensionError("expected a coproduct hom cell, got " + cell.str());
  auto [ta, a] = unpackInj(0, cell.arg(0));
  auto [tb, b] = unpackInj(0, cell.arg(1));
  if (!(ta == tb)) throw DimensionError("hom cell crosses coproduct components: " + cell.str());
  return {ta, Term::hom(a, b, cell.arg(2))};
}

Term terminalCell(std::size_t dim) { return packProduct(dim, std::span<const Term>{}); }

CellFn identityCellFn() {
  return [](std::size_t, const Term& c) { return c; };
}

CellFn compose(CellFn outer, CellFn inner) {
  return [outer = std::move(outer), inner = std::move(inner)](std::size_t d, const Term& c) {
    return outer(d, inner(d, c));
  };
}

CellFn homComponent(const CellFn& f, const Term& a, const Term& b) {
  return [f, a, b](std::size_t d, const Term& c) {
    Term image = f(d + 1, Term::hom(a, b, c));
    if (!image.is(Term::Kind::Hom)) throw DimensionError("graph morphism sent a hom cell to " + image.str());
    return image.arg(2);
  };
}

// ---- EnrichmentBase defaults -------------------------------------------------

Obj EnrichmentBase::coproduct(std::span<const Obj> parts) const {
  std::vector<std::pair<Term, Obj>> tagged;
  tagged.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) tagged.emplace_back(Term::atom(std::to_string(i)), parts[i]);
  return coproduct(std::span<const std::pair<Term, Obj>>(tagged));
}

Term EnrichmentBase::productCell(std::size_t dim, std::span<const Term> c) const { return packProduct(dim, c); }
std::vector<Term> EnrichmentBase::projectCell(std::size_t dim, const Term& cell, std::size_t arity) const {
  return unpackProduct(dim, cell, arity);
}
Term EnrichmentBase::coproductCell(std::size_t dim, const Term& tag, const Term& cell) const {
  return packInj(dim, tag, cell);
}
std::pair<Term, Term> EnrichmentBase::splitCell(std::size_t dim, const Term& cell) const {
  return unpackInj(dim, cell);
}

Term EnrichmentBase::distributeCell(std::size_t dim, const Term& cell) const {
  auto parts = projectCell(dim, cell, 2);
  auto [tag, y] = splitCell(dim, parts[1]);
  std::vector<Term> pair{parts[0], y};
  return coproductCell(dim, tag, productCell(dim, pair));
}

std::optional<std::string> EnrichmentBase::checkDistributive(const Obj& x, std::span<const Obj> ys) const {
  Obj sum = coproduct(ys);
  std::vector<Obj> lhsFactors{x, sum};
  Obj lhs = product(lhsFactors);
  std::vector<Obj> rhsParts;
  for (const auto& y : ys) {
    std::vector<Obj> f{x, y};
    rhsParts.push_back(product(f));
  }
  Obj rhs = coproduct(rhsParts);
  for (std::size_t d = 0; d <= depth(); ++d) {
    auto l = cells(lhs, d);
    auto r = cells(rhs, d);
    if (l.size() != r.size())
      return "dimension " + std::to_string(d) + ": " + std::to_string(l.size()) + " vs " + std::to_string(r.size()) +
             " cells";
    std::unordered_set<Term, TermHash> target(r.begin(), r.end());
    std::unordered_set<Term, TermHash> seen;
    for (const auto& c : l) {
      Term img = distributeCell(d, c);
      if (!target.contains(img)) return "image of " + c.str() + " is not a cell of the distributed side";
      if (!seen.insert(img).second) return "two cells map to " + img.str();
    }
  }
  return std::nullopt;
}

std::optional<std::string> EnrichmentBase::checkInvariants(std::span<const Obj> sample) const {
  if (elements(terminalObj()).size() != 1) return "terminal object does not have exactly one element";
  if (!elements(initialObj()).empty()) return "initial object has elements";
  for (const auto& x : sample) {
    for (const auto& y : sample) {
      std::vector<Obj> pair{x, y};
      auto nx = elements(x).size();
      auto ny = elements(y).size();
      if (elements(product(pair)).size() != nx * ny) return "product cardinality is not multiplicative";
      if (elements(coproduct(std::span<const Obj>(pair))).size() != nx + ny)
        return "coproduct cardinality is not additive";
      std::vector<Obj> single{y};
      if (auto err = checkDistributive(x, pair)) return "distributivity: " + *err;
      if (auto err = checkDistributive(x, single)) return "distributivity: " + *err;
    }
  }
  return std::nullopt;
}

namespace {

/// Enumerates tuples drawn from `lists` with total size <= budget.
void tuples(const std::vector<std::vector<Term>>& lists, std::size_t budget, std::vector<Term>& prefix,
            std::size_t used, std::vector<Term>& out) {
  if (prefix.size() == lists.size()) {
    out.push_back(Term::tuple(prefix));
    return;
  }
  for (const auto& t : lists[prefix.size()]) {
    if (used + t.size() > budget) continue;
    prefix.push_back(t);
    tuples(lists, budget, prefix, used + t.size(), out);
    prefix.pop_back();
  }
}

std::vector<Term> boundedTuples(std::span<const Obj> xs, std::size_t budget) {
  std::vector<std::vector<Term>> lists;
  lists.reserve(xs.size());
  for (const auto& x : xs) lists.push_back(x.members());
  std::vector<Term> prefix, out;
  tuples(lists, budget, prefix, 0, out);
  return out;
}

class TerminalBase final : public EnrichmentBase {
 public:
  std::string objectKind() const override { return "point"; }
  std::size_t depth() const override { return 0; }
  Obj::Kind bottom() const override { return Obj::Kind::Point; }
  std::vector<Term> elements(const Obj&) const override { return {pointElement()}; }
  Obj terminalObj() const override { return Obj::point(); }
  Obj initialObj() const override { return Obj::point(); }
  Obj product(std::span<const Obj>, std::size_t) const override { return Obj::point(); }
  Obj coproduct(std::span<const std::pair<Term, Obj>>) const override { return Obj::point(); }
  using EnrichmentBase::coproduct;
  Term productCell(std::size_t, std::span<const Term>) const override { return pointElement(); }
  std::vector<Term> projectCell(std::size_t, const Term&, std::size_t arity) const override {
    return std::vector<Term>(arity, pointElement());
  }
  Term coproductCell(std::size_t, const Term&, const Term&) const override { return pointElement(); }
  std::pair<Term, Term> splitCell(std::size_t, const Term&) const override {
    return {Term::atom("0"), pointElement()};
  }
};

class FinSetBase final : public EnrichmentBase {
 public:
  std::string objectKind() const override { return "finite set"; }
  std::size_t depth() const override { return 0; }
  Obj::Kind bottom() const override { return Obj::Kind::Set; }
  std::vector<Term> elements(const Obj& x) const override { return x.members(); }
  Obj terminalObj() const override { return Obj::set({Term::tuple({})}); }
  Obj initialObj() const override { return Obj::set({}); }
  Obj product(std::span<const Obj> xs, std::size_t budget) const override {
    return Obj::set(boundedTuples(xs, budget));
  }
  Obj coproduct(std::span<const std::pair<Term, Obj>> parts) const override {
    std::vector<Term> elems;
    for (const auto& [tag, x] : parts)
      for (const auto& e : x.members()) elems.push_back(Term::inj(tag, e));
    return Obj::set(std::move(elems));
  }
  using EnrichmentBase::coproduct;
};

class GraphBase final : public EnrichmentBase {
 public:
  explicit GraphBase(BasePtr v) : v_(std::move(v)) {}

  const BasePtr& inner() const { return v_; }
  std::string objectKind() const override { return "graph over " + v_->objectKind(); }
  std::size_t depth() const override { return v_->depth() + 1; }
  Obj::Kind bottom() const override { return v_->bottom(); }

  std::vector<Term> elements(const Obj& x) const override {
    std::vector<Term> out;
    for (std::size_t i = 0; i < x.members().size(); ++i)
      for (const auto& e : v_->elements(x.homAt(i, i))) out.push_back(Term::hom(x.members()[i], x.members()[i], e));
    return out;
  }

  Obj terminalObj() const override {
    return Obj::graph({Term::tuple({})}, {v_->terminalObj()}, depth(), bottom());
  }
  Obj initialObj() const override { return Obj::graph({}, {}, depth(), bottom()); }

  Obj product(std::span<const Obj> xs, std::size_t budget) const override {
    auto objs = boundedTuples(xs, budget);
    std::vector<Obj> homs;
    homs.reserve(objs.size() * objs.size());
    std::vector<Obj> factors(xs.size());
    for (const auto& a : objs) {
      for (const auto& b : objs) {
        for (std::size_t k = 0; k < xs.size(); ++k) factors[k] = xs[k].hom(a.arg(k), b.arg(k));
        homs.push_back(v_->product(factors, budget - a.size()));
      }
    }
    return Obj::graph(std::move(objs), std::move(homs), depth(), bottom());
  }

  Obj coproduct(std::span<const std::pair<Term, Obj>> parts) const override {
    std::vector<Term> objs;
    std::vector<std::pair<std::size_t, const Term*>> origin;
    for (std::size_t p = 0; p < parts.size(); ++p)
      for (const auto& o : parts[p].second.members()) {
        objs.push_back(Term::inj(parts[p].first, o));
        origin.emplace_back(p, &o);
      }
    Obj empty = v_->initialObj();
    std::vector<Obj> homs;
    homs.reserve(objs.size() * objs.size());
    for (std::size_t i = 0; i < objs.size(); ++i)
      for (std::size_t j = 0; j < objs.size(); ++j)
        homs.push_back(origin[i].first == origin[j].first
                           ? parts[origin[i].first].second.hom(*origin[i].second, *origin[j].second)
                           : empty);
    return Obj::graph(std::move(objs), std::move(homs), depth(), bottom());
  }
  using EnrichmentBase::coproduct;

 private:
  BasePtr v_;
};

}  // namespace

BasePtr terminal_base() {
  static const BasePtr b = std::make_shared<TerminalBase>();
  return b;
}

BasePtr finset_base() {
  static const BasePtr b = std::make_shared<FinSetBase>();
  return b;
}

BasePtr vgraph_base(BasePtr v) { return std::make_shared<GraphBase>(std::move(v)); }

BasePtr ngraph_base(std::size_t n) {
  BasePtr b = finset_base();
  for (std::size_t i = 0; i < n; ++i) b = vgraph_base(b);
  return b;
}

BasePtr inner_base(const EnrichmentBase& b) {
  if (const auto* g = dynamic_cast<const GraphBase*>(&b)) return g->inner();
  return nullptr;
}

Obj make_graph(const EnrichmentBase& homBase, std::vector<Term> objects,
               const std::function<Obj(const Term&, const Term&)>& hom) {
  std::vector<Obj> homs;
  homs.reserve(objects.size() * objects.size());
  for (const auto& a : objects)
    for (const auto& b : objects) homs.push_back(hom(a, b));
  return Obj::graph(std::move(objects), std::move(homs), homBase.depth() + 1, homBase.bottom());
}

Obj apply_locally(const BaseFunctor& h, const EnrichmentBase& target, const Obj& a) {
  return make_graph(target, a.members(), [&](const Term& x, const Term& y) { return h.onObject(a.hom(x, y)); });
}

CellFn apply_locally_cells(const BaseFunctor& h) {
  return [h](std::size_t dim, const Term& c) {
    if (dim == 0) return c;
    return Term::hom(c.arg(0), c.arg(1), h.onCell(dim - 1, c.arg(2)));
  };
}

BaseFunctor compose(const BaseFunctor& outer, const BaseFunctor& inner) {
  return BaseFunctor{outer.name + "∘" + inner.name,
                     [outer, inner](const Obj& x) { return outer.onObject(inner.onObject(x)); },
                     compose(outer.onCell, inner.onCell)};
}

}  // namespace omega::gcore
