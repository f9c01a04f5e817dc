#include "omega/gcore/ngraph.hpp"

#include <set>

namespace omega::gcore {

namespace {

std::string zeroSource(const GlobSet& g, std::size_t d, std::string c) {
  for (; d > 0; --d) c = g.source(d, c);
  return c;
}

std::string zeroTarget(const GlobSet& g, std::size_t d, std::string c) {
  for (; d > 0; --d) c = g.target(d, c);
  return c;
}

/// The (n-1)-globular set of cells running from x to y.
GlobSet homGlobset(const GlobSet& g, const std::string& x, const std::string& y) {
  GlobSet h = GlobSet::empty(g.n - 1);
  for (std::size_t d = 1; d <= g.n; ++d) {
    for (const auto& c : g.cells[d]) {
      if (zeroSource(g, d, c) != x || zeroTarget(g, d, c) != y) continue;
      if (d == 1)
        h.addCell(0, c);
      else
        h.addCell(d - 1, c, g.source(d, c), g.target(d, c));
    }
  }
  return h;
}

Obj toGraph(const GlobSet& g) {
  std::vector<Term> objs;
  for (const auto& c : g.cells[0]) objs.push_back(Term::atom(c));
  if (g.n == 0) return Obj::set(std::move(objs));
  std::vector<Obj> homs;
  for (const auto& x : g.cells[0])
    for (const auto& y : g.cells[0]) homs.push_back(toGraph(homGlobset(g, x, y)));
  return Obj::graph(std::move(objs), std::move(homs), g.n, Obj::Kind::Set);
}

}  // namespace

Obj globset_to_ngraph(const GlobSet& g) {
  if (auto v = validate_globset(g)) throw DimensionError("invalid globular set: " + v->message + " at " + v->cell);
  return toGraph(g);
}

GlobSet ngraph_to_globset(const Obj& h, std::size_t budget) {
  GlobSet g = GlobSet::empty(h.layers());
  for (std::size_t d = 0; d <= h.layers(); ++d) {
    for (const auto& c : cells(h, d, budget)) {
      if (d == 0)
        g.addCell(0, c.str());
      else
        g.addCell(d, c.str(), cellSource(d, c).str(), cellTarget(d, c).str());
    }
  }
  return g;
}

GlobMap roundtrip_witness(const GlobSet& g) {
  GlobMap f;
  f.cellMap.assign(g.n + 1, {});
  // Graph form of each cell, built from the graph form of its source.
  std::vector<std::map<std::string, Term>> form(g.n + 1);
  for (const auto& c : g.cells[0]) form[0].emplace(c, Term::atom(c));
  for (std::size_t d = 1; d <= g.n; ++d) {
    for (const auto& c : g.cells[d]) {
      // Wrap the atom c in the hom constructors of its boundary, outermost
      // first: {x>y:{f>g:...:c}}.
      std::vector<std::pair<std::string, std::string>> frames;
      std::string s = g.source(d, c), t = g.target(d, c);
      for (std::size_t k = d; k >= 1; --k) {
        frames.emplace_back(s, t);
        if (k == 1) break;
        std::string s2 = g.source(k - 1, s), t2 = g.target(k - 1, s);
        s = s2;
        t = t2;
      }
      Term term = Term::atom(c);
      for (const auto& [a, b] : frames) term = Term::hom(Term::atom(a), Term::atom(b), term);
      form[d].emplace(c, term);
    }
  }
  for (std::size_t d = 0; d <= g.n; ++d)
    for (const auto& [c, t] : form[d]) f.cellMap[d][c] = t.str();
  return f;
}

std::optional<std::string> check_isomorphism(const GlobSet& from, const GlobSet& to, const GlobMap& f) {
  if (from.n != to.n) return "dimensions differ";
  if (auto err = check_glob_map(from, to, f)) return err;
  for (std::size_t d = 0; d <= from.n; ++d) {
    std::set<std::string> image;
    for (const auto& c : from.cells[d]) image.insert(f.cellMap[d].at(c));
    if (image.size() != from.cells[d].size()) return "not injective in dimension " + std::to_string(d);
    if (image.size() != to.cells[d].size()) return "not surjective in dimension " + std::to_string(d);
  }
  return std::nullopt;
}

}  // namespace omega::gcore
