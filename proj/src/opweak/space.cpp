#include "omega/opweak/space.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "omega/gcore/globset.hpp"

namespace omega::opweak {

using gcore::cells;
using gcore::ParseError;

Space discrete_space(std::vector<Term> points) { return Space{std::move(points), {}}; }

Space graph_space(std::vector<Term> points, std::vector<Space::Edge> edges) {
  std::unordered_set<Term, TermHash> pts(points.begin(), points.end());
  if (pts.size() != points.size()) throw ModelError("repeated point");
  std::unordered_set<Term, TermHash> labels;
  for (const auto& e : edges) {
    if (!pts.contains(e.from) || !pts.contains(e.to)) throw ModelError("edge " + e.label.str() + " has a loose end");
    if (!labels.insert(e.label).second) throw ModelError("repeated edge label " + e.label.str());
  }
  return Space{std::move(points), std::move(edges)};
}

Space space_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("points") || !j.at("points").is_array())
    throw ParseError("space needs a 'points' array");
  std::vector<Term> points;
  for (const auto& p : j.at("points")) {
    if (!p.is_string()) throw ParseError("points must be strings");
    points.push_back(Term::atom(p.get<std::string>()));
  }
  std::vector<Space::Edge> edges;
  if (j.contains("edges")) {
    if (!j.at("edges").is_array()) throw ParseError("'edges' must be an array");
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() || !e[2].is_string())
        throw ParseError("an edge is [label, from, to]");
      edges.push_back({Term::atom(e[0].get<std::string>()), Term::atom(e[1].get<std::string>()),
                       Term::atom(e[2].get<std::string>())});
    }
  }
  try {
    return graph_space(std::move(points), std::move(edges));
  } catch (const ModelError& e) {
    throw ParseError(e.what());
  }
}

nlohmann::json to_json(const Space& x) {
  nlohmann::json pts = nlohmann::json::array(), es = nlohmann::json::array();
  for (const auto& p : x.points) pts.push_back(p.str());
  for (const auto& e : x.edges) es.push_back({e.label.str(), e.from.str(), e.to.str()});
  return {{"points", pts}, {"edges", es}};
}

std::vector<Term> paths(const Space& x, const Term& a, const Term& b, std::size_t bound) {
  std::vector<Term> out;
  if (std::find(x.points.begin(), x.points.end(), a) == x.points.end()) return out;
  std::vector<std::pair<Term, std::vector<Term>>> frontier{{a, {a}}};
  for (std::size_t len = 0; !frontier.empty(); ++len) {
    std::vector<std::pair<Term, std::vector<Term>>> next;
    for (const auto& [at, parts] : frontier) {
      if (at == b) {
        auto full = parts;
        full.push_back(b);
        out.push_back(Term::mpath(std::move(full)));
      }
      if (len == bound) continue;
      for (const auto& e : x.edges) {
        if (!(e.from == at)) continue;
        auto ext = parts;
        ext.push_back(e.label);
        next.emplace_back(e.to, std::move(ext));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

Space path_space(const Space& x, const Term& a, const Term& b, std::size_t bound) {
  return discrete_space(paths(x, a, b, bound));
}

Term concat(const Term& a, const std::vector<Term>& ps) {
  std::vector<Term> parts{a};
  Term at = a;
  for (const auto& p : ps) {
    if (!p.is(Term::Kind::Space) || p.arity() < 2) throw ModelError(p.str() + " is not a path");
    if (!(p.args().front() == at))
      throw ModelError("path " + p.str() + " does not start at " + at.str());
    parts.insert(parts.end(), p.args().begin() + 1, p.args().end() - 1);
    at = p.args().back();
  }
  parts.push_back(at);
  return Term::mpath(std::move(parts));
}

Space box_product(const Space& x, const Space& y) {
  Space p;
  for (const auto& a : x.points)
    for (const auto& b : y.points) p.points.push_back(Term::tuple({a, b}));
  for (const auto& e : x.edges)
    for (const auto& b : y.points)
      p.edges.push_back({Term::inj(Term::atom("0"), Term::tuple({e.label, b})), Term::tuple({e.from, b}),
                         Term::tuple({e.to, b})});
  for (const auto& a : x.points)
    for (const auto& e : y.edges)
      p.edges.push_back({Term::inj(Term::atom("1"), Term::tuple({a, e.label})), Term::tuple({a, e.from}),
                         Term::tuple({a, e.to})});
  return p;
}

Term component_of(const Space& x, const Term& p) {
  std::unordered_map<Term, std::size_t, TermHash> idx;
  for (std::size_t i = 0; i < x.points.size(); ++i) idx.emplace(x.points[i], i);
  auto it = idx.find(p);
  if (it == idx.end()) throw ModelError(p.str() + " is not a point");
  std::vector<std::size_t> parent(x.points.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    return parent[i] == i ? i : parent[i] = find(parent[i]);
  };
  for (const auto& e : x.edges) parent[find(idx.at(e.from))] = find(idx.at(e.to));
  std::size_t root = find(it->second);
  Term rep = p;
  for (std::size_t i = 0; i < x.points.size(); ++i)
    if (find(i) == root && x.points[i] < rep) rep = x.points[i];
  return rep;
}

Obj pi_n(const Space& x, std::size_t m, Mode mode, std::size_t bound) {
  if (m == 0) {
    if (mode == Mode::Incoherent) return Obj::set(x.points);
    std::vector<Term> comps;
    std::unordered_set<Term, TermHash> seen;
    for (const auto& p : x.points) {
      Term c = Term::cls(component_of(x, p));
      if (seen.insert(c).second) comps.push_back(c);
    }
    return Obj::set(std::move(comps));
  }
  return gcore::make_graph(*gcore::ngraph_base(m - 1), x.points, [&](const Term& a, const Term& b) {
    return pi_n(path_space(x, a, b, bound), m - 1, mode, bound);
  });
}

Term id_cell(std::size_t m, std::size_t j, const Term& p, Mode mode) {
  if (j == 0) return m == 0 && mode == Mode::Coherent ? Term::cls(p) : p;
  if (m == 0) throw gcore::DimensionError("Π_0 has only 0-cells");
  return Term::hom(p, p, id_cell(m - 1, j - 1, Term::mpath({p, p}), mode));
}

Term base_point(const Term& cell) {
  const Term* t = &cell;
  while (t->is(Term::Kind::Hom)) t = &t->arg(0);
  return t->is(Term::Kind::Class) ? t->arg(0) : *t;
}

gcore::CellFn fundamental_action(std::size_t m, Mode mode) {
  if (m == 0) return gcore::identityCellFn();
  auto v = gcore::ngraph_base(m - 1);
  auto sub = fundamental_action(m - 1, mode);
  return [v, sub, m, mode](std::size_t d, const Term& cell) -> Term {
    if (d == 0) return cell;
    std::size_t j = d - 1;
    const Term& a = cell.arg(0);
    const Term& b = cell.arg(1);
    auto [tag, prod] = v->splitCell(j, cell.arg(2));
    std::size_t k = tag.arity() - 1;
    auto parts = v->projectCell(j, prod, k + 1);
    std::vector<Term> pts;
    for (std::size_t i = 1; i <= k; ++i) pts.push_back(base_point(sub(j, parts[k + 1 - i])));
    Term r = concat(a, pts);
    if (!(r.args().back() == b)) throw ModelError("composite " + r.str() + " does not end at " + b.str());
    return Term::hom(a, b, id_cell(m - 1, j, r, mode));
  };
}

gcore::CellFn pi_map(const Space& to, Mode mode, const std::function<Term(const Term&)>& onPoint,
                     const std::function<std::optional<Term>(const Term&)>& onEdge) {
  auto go = std::make_shared<std::function<Term(const Term&)>>();
  std::weak_ptr<std::function<Term(const Term&)>> self = go;
  *go = [self, onPoint, onEdge](const Term& t) -> Term {
    auto& rec = *self.lock();
    switch (t.kind()) {
      case Term::Kind::Hom:
        return Term::hom(rec(t.arg(0)), rec(t.arg(1)), rec(t.arg(2)));
      case Term::Kind::Class:
        return Term::cls(rec(t.arg(0)));
      case Term::Kind::Space: {
        std::vector<Term> parts{rec(t.args().front())};
        for (std::size_t i = 1; i + 1 < t.arity(); ++i)
          if (auto e = onEdge(t.arg(i))) parts.push_back(*e);
        parts.push_back(rec(t.args().back()));
        return Term::mpath(std::move(parts));
      }
      default:
        return onPoint(t);
    }
  };
  return [go, to, mode](std::size_t, const Term& cell) {
    Term r = (*go)(cell);
    if (mode == Mode::Coherent && r.is(Term::Kind::Class)) return Term::cls(component_of(to, r.arg(0)));
    return r;
  };
}

std::optional<std::string> check_product_preservation(std::size_t m, Mode mode, const Space& x, const Space& y,
                                                      std::size_t bound) {
  Space p = box_product(x, y);
  auto base = gcore::ngraph_base(m);
  Obj pp = pi_n(p, m, mode, bound), px = pi_n(x, m, mode, bound), py = pi_n(y, m, mode, bound);
  std::vector<Obj> factors{px, py};
  Obj prod = base->product(factors, bound);
  auto side = [](std::size_t i) {
    return [i](const Term& e) -> std::optional<Term> {
      if (e.is(Term::Kind::Inj) && e.arg(0).name() == std::to_string(i)) return e.arg(1).arg(i);
      return std::nullopt;
    };
  };
  auto p1 = pi_map(x, mode, [](const Term& t) { return t.arg(0); }, side(0));
  auto p2 = pi_map(y, mode, [](const Term& t) { return t.arg(1); }, side(1));
  for (std::size_t d = 0; d <= m; ++d) {
    std::unordered_set<Term, TermHash> hit;
    for (const auto& c : cells(pp, d, bound)) {
      std::vector<Term> pair{p1(d, c), p2(d, c)};
      Term img = base->productCell(d, pair);
      if (!gcore::hasCell(prod, d, img)) return "image of " + c.str() + " is not a cell of the product";
      if (!hit.insert(img).second) return "two cells map to " + img.str();
    }
    if (hit.size() != cells(prod, d, bound).size())
      return "product cells missed in dimension " + std::to_string(d);
  }
  return std::nullopt;
}

WeakEnrichedCat gamma_path_graph(const Space& x, std::size_t bound, std::size_t cap) {
  WeakEnrichedCat c;
  auto fin = gcore::finset_base();
  c.underlying = gcore::make_graph(*fin, x.points,
                                   [&](const Term& a, const Term& b) { return Obj::set(paths(x, a, b, bound)); });
  c.operad = terminal_operad(fin, cap);
  c.gamma = [](const std::vector<Term>& objs, const Term&, const std::vector<Term>& fs) {
    return concat(objs.front(), fs);
  };
  return c;
}

FinOperad apply_pi(const FinOperad& seed, std::size_t m, Mode mode) {
  if (seed.base->depth() != 0) throw gcore::DimensionError("seed operad must live in finite sets");
  FinOperad p;
  p.name = "Π" + std::to_string(m) + "(" + seed.name + ")";
  p.base = gcore::ngraph_base(m);
  p.cap = seed.cap;
  for (const auto& o : seed.ops) p.ops.push_back(pi_n(discrete_space(o.members()), m, mode, 0));
  auto compose = seed.compose;
  p.compose = [compose, m, mode](std::size_t d, const Term& x, const std::vector<Term>& qs) {
    std::vector<Term> pts;
    for (const auto& q : qs) pts.push_back(base_point(q));
    return id_cell(m, d, compose(0, base_point(x), pts), mode);
  };
  Term u = seed.unit(0);
  p.unit = [u, m, mode](std::size_t d) { return id_cell(m, d, u, mode); };
  auto act = fundamental_action(m, mode);
  p.action = [act](std::size_t, std::size_t d, const Term& cell) { return act(d, cell); };
  return p;
}

WeakEnrichedCat dc_step(const Space& x, const FinOperad& seed, Mode mode, std::size_t bound) {
  for (const auto& a : x.points)
    for (const auto& b : x.points) {
      auto pab = path_space(x, a, b, bound);
      auto pba = path_space(x, b, a, bound);
      if (auto bad = check_product_preservation(0, mode, pab, pba, bound))
        throw ModelError("Π_0 does not preserve products: " + *bad);
    }
  WeakEnrichedCat c;
  c.underlying = gcore::make_graph(*gcore::finset_base(), x.points, [&](const Term& a, const Term& b) {
    return pi_n(path_space(x, a, b, bound), 0, mode, bound);
  });
  c.operad = apply_pi(seed, 0, mode);
  c.gamma = [mode](const std::vector<Term>& objs, const Term&, const std::vector<Term>& fs) {
    std::vector<Term> pts;
    for (const auto& f : fs) pts.push_back(base_point(f));
    Term r = concat(objs.front(), pts);
    return mode == Mode::Coherent ? Term::cls(r) : r;
  };
  return c;
}

}  // namespace omega::opweak
