#include "omega/opweak/operad.hpp"

#include <set>
#include <stdexcept>
#include <unordered_set>

#include "omega/gcore/globset.hpp"

namespace omega::opweak {

using gcore::cells;
using gcore::ParseError;

WeightingPtr FinOperad::weighting() const {
  auto w = std::make_shared<monads::Weighting>();
  w->name = name;
  w->cap = cap;
  auto opsCopy = ops;
  auto b = base;
  w->ops = [opsCopy, b](std::size_t k) { return k < opsCopy.size() ? opsCopy[k] : b->initialObj(); };
  w->compose = compose;
  w->unit = unit;
  w->action = action;
  return w;
}

namespace {

/// Calls fn with every choice of one entry from each list.
void forEachChoice(const std::vector<std::vector<Term>>& lists, std::vector<Term>& prefix,
                   const std::function<bool(const std::vector<Term>&)>& fn, bool& stop) {
  if (stop) return;
  if (prefix.size() == lists.size()) {
    if (!fn(prefix)) stop = true;
    return;
  }
  for (const auto& t : lists[prefix.size()]) {
    prefix.push_back(t);
    forEachChoice(lists, prefix, fn, stop);
    prefix.pop_back();
    if (stop) return;
  }
}

void forEachChoice(const std::vector<std::vector<Term>>& lists, const std::function<bool(const std::vector<Term>&)>& fn) {
  std::vector<Term> prefix;
  bool stop = false;
  forEachChoice(lists, prefix, fn, stop);
}

/// Sequences of k naturals with sum <= cap.
void arities(std::size_t k, std::size_t cap, std::vector<std::size_t>& prefix,
             std::vector<std::vector<std::size_t>>& out) {
  if (prefix.size() == k) {
    out.push_back(prefix);
    return;
  }
  std::size_t used = 0;
  for (auto m : prefix) used += m;
  for (std::size_t m = 0; used + m <= cap; ++m) {
    prefix.push_back(m);
    arities(k, cap, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<std::size_t>> arities(std::size_t k, std::size_t cap) {
  std::vector<std::size_t> prefix;
  std::vector<std::vector<std::size_t>> out;
  arities(k, cap, prefix, out);
  return out;
}

std::string showCall(const Term& p, const std::vector<Term>& qs) {
  std::string s = p.str() + "(";
  for (std::size_t i = 0; i < qs.size(); ++i) s += (i ? "," : "") + qs[i].str();
  return s + ")";
}

}  // namespace

std::optional<OperadViolation> check_operad_laws(const FinOperad& p) {
  std::optional<OperadViolation> bad;
  const std::size_t depth = p.base->depth();
  try {
    for (std::size_t d = 0; d <= depth && !bad; ++d) {
      std::vector<std::vector<Term>> cellsOf(p.cap + 1);
      std::vector<std::unordered_set<Term, TermHash>> member(p.cap + 1);
      for (std::size_t k = 0; k <= p.cap; ++k) {
        cellsOf[k] = cells(p.ops[k], d);
        member[k].insert(cellsOf[k].begin(), cellsOf[k].end());
      }
      Term u = p.unit(d);
      if (!member[1].contains(u)) return OperadViolation{"closure", d, "unit is not a cell of P(1)"};
      for (std::size_t k = 0; k <= p.cap && !bad; ++k) {
        for (const auto& x : cellsOf[k]) {
          if (!(p.compose(d, u, {x}) == x))
            return OperadViolation{"left-unit", d, "u(" + x.str() + ") != " + x.str()};
          if (!(p.compose(d, x, std::vector<Term>(k, u)) == x))
            return OperadViolation{"right-unit", d, x.str() + "(u,...,u) != " + x.str()};
        }
      }
      for (std::size_t k = 0; k <= p.cap && !bad; ++k) {
        for (const auto& ms : arities(k, p.cap)) {
          std::size_t total = 0;
          for (auto m : ms) total += m;
          std::vector<std::vector<Term>> lists{cellsOf[k]};
          for (auto m : ms) lists.push_back(cellsOf[m]);
          forEachChoice(lists, [&](const std::vector<Term>& pq) {
            std::vector<Term> qs(pq.begin() + 1, pq.end());
            Term pq1 = p.compose(d, pq[0], qs);
            if (!member[total].contains(pq1)) {
              bad = OperadViolation{"closure", d, showCall(pq[0], qs) + " = " + pq1.str() + " is not in P(" +
                                                      std::to_string(total) + ")"};
              return false;
            }
            // Second layer: r's under each q_i, total arity within cap.
            for (const auto& ls : arities(total, p.cap)) {
              std::vector<std::vector<Term>> rl;
              for (auto l : ls) rl.push_back(cellsOf[l]);
              forEachChoice(rl, [&](const std::vector<Term>& rs) {
                Term lhs = p.compose(d, pq1, rs);
                std::vector<Term> inner;
                std::size_t at = 0;
                for (std::size_t i = 0; i < k; ++i) {
                  std::vector<Term> group(rs.begin() + static_cast<std::ptrdiff_t>(at),
                                          rs.begin() + static_cast<std::ptrdiff_t>(at + ms[i]));
                  at += ms[i];
                  inner.push_back(p.compose(d, qs[i], group));
                }
                Term rhs = p.compose(d, pq[0], inner);
                if (!(lhs == rhs)) {
                  bad = OperadViolation{"associativity", d, showCall(pq[0], qs) + " then " + showCall(pq1, rs) +
                                                                " gives " + lhs.str() + " but nesting gives " + rhs.str()};
                  return false;
                }
                return true;
              });
              if (bad) return false;
            }
            return true;
          });
          if (bad) break;
        }
      }
    }
  } catch (const std::out_of_range& e) {
    return OperadViolation{"undefined", 0, e.what()};
  }
  return bad;
}

FinOperad terminal_operad(BasePtr v, std::size_t cap) {
  FinOperad p;
  p.name = "terminal";
  p.base = v;
  p.cap = cap;
  for (std::size_t k = 0; k <= cap; ++k) p.ops.push_back(v->terminalObj());
  p.compose = [](std::size_t d, const Term&, const std::vector<Term>&) { return gcore::terminalCell(d); };
  p.unit = [](std::size_t d) { return gcore::terminalCell(d); };
  p.action = [](std::size_t, std::size_t d, const Term&) { return gcore::terminalCell(d); };
  return p;
}

FinOperad table_operad(std::string name, std::size_t cap, std::vector<std::vector<std::string>> ops,
                       std::map<std::string, std::string> comp, std::string unit) {
  FinOperad p;
  p.name = std::move(name);
  p.base = gcore::finset_base();
  p.cap = cap;
  ops.resize(cap + 1);
  for (const auto& names : ops) {
    std::vector<Term> elems;
    for (const auto& s : names) elems.push_back(Term::atom(s));
    p.ops.push_back(Obj::set(std::move(elems)));
  }
  auto table = std::make_shared<const std::map<std::string, std::string>>(std::move(comp));
  p.compose = [table](std::size_t d, const Term& x, const std::vector<Term>& qs) {
    if (d != 0) throw gcore::DimensionError("set operads only have 0-cells");
    std::string key = x.name() + "(";
    for (std::size_t i = 0; i < qs.size(); ++i) key += (i ? "," : "") + qs[i].name();
    key += ")";
    auto it = table->find(key);
    if (it == table->end()) throw std::out_of_range("composite " + key + " is undefined");
    return Term::atom(it->second);
  };
  Term u = Term::atom(unit);
  p.unit = [u](std::size_t) { return u; };
  return p;
}

FinOperad operad_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("operad must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "cap" && key != "ops" && key != "comp" && key != "unit" && key != "name")
      throw ParseError("unknown operad key '" + key + "'");
  if (!j.contains("cap") || !j.at("cap").is_number_unsigned()) throw ParseError("'cap' must be a natural number");
  std::size_t cap = j.at("cap").get<std::size_t>();
  std::vector<std::vector<std::string>> ops(cap + 1);
  if (!j.contains("ops") || !j.at("ops").is_object()) throw ParseError("'ops' must be an object");
  for (const auto& [key, val] : j.at("ops").items()) {
    if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("arity key '" + key + "' is not a natural");
    std::size_t k = std::stoul(key);
    if (k > cap) throw ParseError("arity " + key + " exceeds cap");
    if (!val.is_array()) throw ParseError("ops." + key + " must be an array");
    for (const auto& s : val) {
      if (!s.is_string()) throw ParseError("operation names must be strings");
      ops[k].push_back(s.get<std::string>());
    }
  }
  std::map<std::string, std::string> comp;
  if (j.contains("comp")) {
    if (!j.at("comp").is_object()) throw ParseError("'comp' must be an object");
    for (const auto& [key, val] : j.at("comp").items()) {
      if (!val.is_string()) throw ParseError("comp values must be strings");
      comp[key] = val.get<std::string>();
    }
  }
  if (!j.contains("unit") || !j.at("unit").is_string()) throw ParseError("'unit' must be a string");
  std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "table";
  auto p = table_operad(name, cap, ops, comp, j.at("unit").get<std::string>());
  return p;
}

nlohmann::json to_json(const FinOperad& p) {
  nlohmann::json ops = nlohmann::json::object();
  for (std::size_t k = 0; k <= p.cap; ++k) ops[std::to_string(k)] = p.ops[k].members().size();
  return {{"name", p.name}, {"cap", p.cap}, {"arity_sizes", ops}};
}

MonadPtr vp_free_monad(const FinOperad& p) { return monads::fc_monad(p.base, p.weighting()); }

std::vector<Term> vp_free_hom(const Obj& a, const FinOperad& p, const Term& from, const Term& to, std::size_t bound) {
  Obj f = vp_free_monad(p)->apply(a, bound);
  return f.hom(from, to).members();
}

Term drop_weight(const gcore::EnrichmentBase& v, std::size_t dim, const Term& cell) {
  if (dim == 0) return cell;
  std::size_t j = dim - 1;
  auto [tag, prod] = v.splitCell(j, cell.arg(2));
  auto parts = v.projectCell(j, prod, tag.arity());
  parts.erase(parts.begin());
  return Term::hom(cell.arg(0), cell.arg(1), v.coproductCell(j, tag, v.productCell(j, parts)));
}

std::optional<std::string> check_terminal_reduction(const Obj& x, std::size_t bound) {
  if (x.kind() != Obj::Kind::Graph) return "input is not a graph";
  BasePtr v = gcore::ngraph_base(x.layers() - 1);
  auto weighted = vp_free_monad(terminal_operad(v, bound))->apply(x, bound);
  auto plain = monads::fc_monad(v)->apply(x, bound);
  for (std::size_t d = 0; d <= x.layers(); ++d) {
    auto wc = cells(weighted, d, bound);
    auto pc = cells(plain, d, bound);
    std::unordered_set<Term, TermHash> target(pc.begin(), pc.end());
    std::unordered_set<Term, TermHash> hit;
    for (const auto& c : wc) {
      Term img = drop_weight(*v, d, c);
      if (img.size() != c.size()) return "size changes at " + c.str();
      if (!target.contains(img)) return c.str() + " has no counterpart in fc";
      if (!hit.insert(img).second) return "two weighted cells map to " + img.str();
    }
    if (hit.size() != target.size()) return "not surjective in dimension " + std::to_string(d);
  }
  return std::nullopt;
}

namespace {

/// Composable strings a_0 → ... → a_k of hom elements of size <= bound.
void strings(const Obj& g, std::size_t maxLen, std::size_t bound, std::vector<Term>& objs, std::vector<Term>& fs,
             const std::function<bool(const std::vector<Term>&, const std::vector<Term>&)>& fn, bool& stop) {
  if (stop) return;
  if (!fn(objs, fs)) {
    stop = true;
    return;
  }
  if (fs.size() == maxLen) return;
  for (const auto& next : g.members()) {
    for (const auto& f : g.hom(objs.back(), next).members()) {
      if (f.size() > bound) continue;
      objs.push_back(next);
      fs.push_back(f);
      strings(g, maxLen, bound, objs, fs, fn, stop);
      fs.pop_back();
      objs.pop_back();
      if (stop) return;
    }
  }
}

std::vector<Term> slice(const std::vector<Term>& v, std::size_t from, std::size_t to) {
  return {v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to)};
}

}  // namespace

std::optional<std::string> check_weak_cat(const WeakEnrichedCat& c, std::size_t bound) {
  const auto& g = c.underlying;
  const auto& p = c.operad;
  std::optional<std::string> bad;
  auto typed = [&](const Term& a, const Term& b, const Term& f) {
    if (g.hom(a, b).hasMember(f)) return true;
    // Composites may leave the bounded fragment; then only their ends can be checked.
    const Term& path = f.is(Term::Kind::Class) ? f.arg(0) : f;
    if (path.is(Term::Kind::Space)) return path.args().front() == a && path.args().back() == b;
    return false;
  };
  try {
    for (const auto& a0 : g.members()) {
      std::vector<Term> objs{a0}, fs;
      bool stop = false;
      strings(g, p.cap, bound, objs, fs, [&](const std::vector<Term>& os, const std::vector<Term>& ff) {
        std::size_t len = ff.size();
        Term u = p.unit(0);
        if (len == 1 && !(c.gamma(os, u, ff) == ff[0])) {
          bad = "unit fails at " + ff[0].str();
          return false;
        }
        for (std::size_t k = 0; k <= p.cap; ++k) {
          for (const auto& ms : arities(k, len)) {
            std::size_t total = 0;
            for (auto m : ms) total += m;
            if (total != len) continue;
            std::vector<std::vector<Term>> lists{p.ops[k].members()};
            for (auto m : ms) lists.push_back(p.ops[m].members());
            forEachChoice(lists, [&](const std::vector<Term>& pq) {
              std::vector<Term> qs(pq.begin() + 1, pq.end());
              Term flat = c.gamma(os, p.compose(0, pq[0], qs), ff);
              if (!typed(os.front(), os.back(), flat)) {
                bad = "composite " + flat.str() + " has the wrong ends";
                return false;
              }
              std::vector<Term> outerObjs{os.front()}, inner;
              std::size_t at = 0;
              for (std::size_t i = 0; i < k; ++i) {
                inner.push_back(c.gamma(slice(os, at, at + ms[i] + 1), qs[i], slice(ff, at, at + ms[i])));
                at += ms[i];
                outerObjs.push_back(os[at]);
              }
              Term nested = c.gamma(outerObjs, pq[0], inner);
              if (!(flat == nested)) {
                bad = "nested composite " + nested.str() + " differs from " + flat.str();
                return false;
              }
              return true;
            });
            if (bad) return false;
          }
        }
        return true;
      }, stop);
      if (bad) return bad;
    }
  } catch (const std::out_of_range& e) {
    return std::string(e.what());
  }
  return bad;
}

std::optional<std::string> check_operad_algebra(const OperadAlgebra& alg) {
  const auto& p = alg.operad;
  std::unordered_set<Term, TermHash> carrier(alg.carrier.begin(), alg.carrier.end());
  std::vector<std::vector<Term>> powers{{}};
  try {
    Term u = p.unit(0);
    for (const auto& a : alg.carrier)
      if (!(alg.act(u, {a}) == a)) return "unit acts nontrivially on " + a.str();
    for (std::size_t k = 0; k <= p.cap; ++k) {
      for (const auto& ms : arities(k, p.cap)) {
        std::size_t total = 0;
        for (auto m : ms) total += m;
        std::vector<std::vector<Term>> lists{p.ops[k].members()};
        for (auto m : ms) lists.push_back(p.ops[m].members());
        for (std::size_t i = 0; i < total; ++i) lists.push_back(alg.carrier);
        std::optional<std::string> bad;
        forEachChoice(lists, [&](const std::vector<Term>& all) {
          std::vector<Term> qs = slice(all, 1, 1 + k);
          std::vector<Term> as = slice(all, 1 + k, all.size());
          Term flat = alg.act(p.compose(0, all[0], qs), as);
          if (!carrier.contains(flat)) {
            bad = "action leaves the carrier: " + flat.str();
            return false;
          }
          std::vector<Term> inner;
          std::size_t at = 0;
          for (std::size_t i = 0; i < k; ++i) {
            inner.push_back(alg.act(qs[i], slice(as, at, at + ms[i])));
            at += ms[i];
          }
          Term nested = alg.act(all[0], inner);
          if (!(nested == flat)) {
            bad = "action of " + showCall(all[0], qs) + " is not compatible with composition at " + showCall(all[0], as);
            return false;
          }
          return true;
        });
        if (bad) return bad;
      }
    }
  } catch (const std::out_of_range& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

WeakEnrichedCat one_object_category(const OperadAlgebra& alg) {
  WeakEnrichedCat c;
  Term pt = Term::atom("•");
  c.underlying = Obj::graph({pt}, {Obj::set(alg.carrier)}, 1, Obj::Kind::Set);
  c.operad = alg.operad;
  auto act = alg.act;
  c.gamma = [act](const std::vector<Term>&, const Term& p, const std::vector<Term>& fs) { return act(p, fs); };
  return c;
}

OperadAlgebra algebra_of(const WeakEnrichedCat& c) {
  if (c.underlying.members().size() != 1) throw std::invalid_argument("category has more than one object");
  OperadAlgebra alg;
  alg.operad = c.operad;
  Term pt = c.underlying.members()[0];
  alg.carrier = c.underlying.hom(pt, pt).members();
  auto gamma = c.gamma;
  alg.act = [gamma, pt](const Term& p, const std::vector<Term>& as) {
    return gamma(std::vector<Term>(as.size() + 1, pt), p, as);
  };
  return alg;
}

std::optional<std::string> one_object_algebra_check(const OperadAlgebra& alg) {
  auto asAlgebra = check_operad_algebra(alg);
  auto cat = one_object_category(alg);
  auto asCategory = check_weak_cat(cat, gcore::kUnbounded);
  auto back = check_operad_algebra(algebra_of(cat));
  if (asAlgebra.has_value() != asCategory.has_value() || asAlgebra.has_value() != back.has_value())
    return std::string("algebra and one-object category verdicts disagree");
  return asAlgebra;
}

}  // namespace omega::opweak
