#include "omega/gcore/globset.hpp"

#include <set>
#include <utility>

namespace omega::gcore {

using nlohmann::json;

GlobSet GlobSet::empty(std::size_t n) {
  GlobSet g;
  g.n = n;
  g.cells.assign(n + 1, {});
  g.src.assign(n + 1, {});
  g.tgt.assign(n + 1, {});
  return g;
}

GlobSet GlobSet::terminal(std::size_t n) {
  GlobSet g = empty(n);
  g.addCell(0, "*");
  for (std::size_t d = 1; d <= n; ++d) g.addCell(d, "*", "*", "*");
  return g;
}

void GlobSet::addCell(std::size_t d, const std::string& id) {
  if (d > n) throw DimensionError("cell dimension " + std::to_string(d) + " exceeds " + std::to_string(n));
  cells[d].push_back(id);
}

void GlobSet::addCell(std::size_t d, const std::string& id, const std::string& s, const std::string& t) {
  if (d == 0) throw DimensionError("0-cells have no boundary");
  addCell(d, id);
  src[d][id] = s;
  tgt[d][id] = t;
}

bool GlobSet::contains(std::size_t d, const std::string& id) const {
  if (d > n) return false;
  for (const auto& c : cells[d])
    if (c == id) return true;
  return false;
}

const std::string& GlobSet::source(std::size_t d, const std::string& id) const {
  auto it = src.at(d).find(id);
  if (it == src.at(d).end()) throw DimensionError("no source for " + id + " in dimension " + std::to_string(d));
  return it->second;
}

const std::string& GlobSet::target(std::size_t d, const std::string& id) const {
  auto it = tgt.at(d).find(id);
  if (it == tgt.at(d).end()) throw DimensionError("no target for " + id + " in dimension " + std::to_string(d));
  return it->second;
}

bool same_cells(const GlobSet& a, const GlobSet& b) {
  if (a.n != b.n || a.src != b.src || a.tgt != b.tgt || a.cells.size() != b.cells.size()) return false;
  for (std::size_t d = 0; d < a.cells.size(); ++d) {
    std::set<std::string> x(a.cells[d].begin(), a.cells[d].end());
    std::set<std::string> y(b.cells[d].begin(), b.cells[d].end());
    if (x != y || x.size() != a.cells[d].size() || y.size() != b.cells[d].size()) return false;
  }
  return true;
}

std::optional<Violation> validate_globset(const GlobSet& g) {
  auto fail = [](std::size_t d, const std::string& c, std::string axiom, std::string msg) {
    return Violation{d, c, std::move(axiom), std::move(msg)};
  };
  if (g.cells.size() != g.n + 1 || g.src.size() != g.n + 1 || g.tgt.size() != g.n + 1)
    return fail(0, "", "shape", "cell/map lists do not cover dimensions 0..n");
  std::vector<std::set<std::string>> present(g.n + 1);
  for (std::size_t d = 0; d <= g.n; ++d)
    for (const auto& c : g.cells[d])
      if (!present[d].insert(c).second) return fail(d, c, "unique-id", "duplicate identifier");
  for (std::size_t d = 1; d <= g.n; ++d) {
    for (const auto& [c, _] : g.src[d])
      if (!present[d].contains(c)) return fail(d, c, "range", "source map mentions an undeclared cell");
    for (const auto& [c, _] : g.tgt[d])
      if (!present[d].contains(c)) return fail(d, c, "range", "target map mentions an undeclared cell");
    for (const auto& c : g.cells[d]) {
      auto s = g.src[d].find(c);
      auto t = g.tgt[d].find(c);
      if (s == g.src[d].end()) return fail(d, c, "total-src", "source undefined");
      if (t == g.tgt[d].end()) return fail(d, c, "total-tgt", "target undefined");
      if (!present[d - 1].contains(s->second))
        return fail(d, c, "range", "source " + s->second + " is not a " + std::to_string(d - 1) + "-cell");
      if (!present[d - 1].contains(t->second))
        return fail(d, c, "range", "target " + t->second + " is not a " + std::to_string(d - 1) + "-cell");
    }
  }
  for (std::size_t d = 2; d <= g.n; ++d) {
    for (const auto& c : g.cells[d]) {
      const auto& s = g.src[d].at(c);
      const auto& t = g.tgt[d].at(c);
      if (g.src[d - 1].at(s) != g.src[d - 1].at(t))
        return fail(d, c, "ss=st", "source of source differs from source of target");
      if (g.tgt[d - 1].at(s) != g.tgt[d - 1].at(t))
        return fail(d, c, "ts=tt", "target of source differs from target of target");
    }
  }
  return std::nullopt;
}

GlobSet truncate_globset(const GlobSet& g, std::size_t m) {
  if (m > g.n)
    throw DimensionError("cannot truncate a " + std::to_string(g.n) + "-globular set to dimension " +
                         std::to_string(m));
  GlobSet out;
  out.n = m;
  out.cells.assign(g.cells.begin(), g.cells.begin() + static_cast<std::ptrdiff_t>(m + 1));
  out.src.assign(g.src.begin(), g.src.begin() + static_cast<std::ptrdiff_t>(m + 1));
  out.tgt.assign(g.tgt.begin(), g.tgt.begin() + static_cast<std::ptrdiff_t>(m + 1));
  return out;
}

namespace {

std::string cellName(std::size_t d, std::size_t i) {
  static const char* prefix[] = {"x", "f", "a", "m", "q"};
  std::string p = d < 5 ? prefix[d] : "c" + std::to_string(d) + "_";
  return p + std::to_string(i);
}

}  // namespace

GlobSet random_globset(std::size_t n, std::size_t maxPerDim, Rng& rng) {
  GlobSet g = GlobSet::empty(n);
  std::size_t k0 = rng.between(0, maxPerDim);
  for (std::size_t i = 0; i < k0; ++i) g.addCell(0, cellName(0, i));
  for (std::size_t d = 1; d <= n; ++d) {
    std::vector<std::pair<std::string, std::string>> parallel;
    const auto& lower = g.cells[d - 1];
    for (const auto& a : lower)
      for (const auto& b : lower)
        if (d == 1 || (g.source(d - 1, a) == g.source(d - 1, b) && g.target(d - 1, a) == g.target(d - 1, b)))
          parallel.emplace_back(a, b);
    if (parallel.empty()) continue;
    std::size_t k = rng.between(0, maxPerDim);
    for (std::size_t i = 0; i < k; ++i) {
      const auto& [s, t] = parallel[rng.below(parallel.size())];
      g.addCell(d, cellName(d, i), s, t);
    }
  }
  return g;
}

std::optional<std::string> check_glob_map(const GlobSet& from, const GlobSet& to, const GlobMap& f) {
  if (f.cellMap.size() < from.n + 1) return "map does not cover every dimension";
  for (std::size_t d = 0; d <= from.n; ++d) {
    for (const auto& c : from.cells[d]) {
      auto it = f.cellMap[d].find(c);
      if (it == f.cellMap[d].end()) return "map undefined on " + c;
      if (!to.contains(d, it->second)) return "image of " + c + " is not a cell of the target";
      if (d == 0) continue;
      if (f.cellMap[d - 1].at(from.source(d, c)) != to.source(d, it->second)) return "source not preserved at " + c;
      if (f.cellMap[d - 1].at(from.target(d, c)) != to.target(d, it->second)) return "target not preserved at " + c;
    }
  }
  return std::nullopt;
}

GlobMap truncate_map(const GlobMap& f, std::size_t m) {
  GlobMap out;
  out.cellMap.assign(f.cellMap.begin(), f.cellMap.begin() + static_cast<std::ptrdiff_t>(std::min(m + 1, f.cellMap.size())));
  return out;
}

json to_json(const GlobSet& g) {
  json j;
  j["n"] = g.n;
  j["cells"] = g.cells;
  json s = json::object();
  json t = json::object();
  for (std::size_t d = 1; d <= g.n; ++d) {
    json sd = json::object();
    json td = json::object();
    for (const auto& c : g.cells[d]) {
      if (auto it = g.src[d].find(c); it != g.src[d].end()) sd[c] = it->second;
      if (auto it = g.tgt[d].find(c); it != g.tgt[d].end()) td[c] = it->second;
    }
    s[std::to_string(d)] = sd;
    t[std::to_string(d)] = td;
  }
  j["src"] = s;
  j["tgt"] = t;
  return j;
}

namespace {

std::size_t parseDimKey(const std::string& key, std::size_t n) {
  if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("dimension key '" + key + "' is not a decimal natural");
  std::size_t d = std::stoul(key);
  if (d == 0 || d > n) throw ParseError("dimension key " + key + " out of range 1.." + std::to_string(n));
  return d;
}

void readMaps(const json& j, const char* field, std::vector<std::map<std::string, std::string>>& out, std::size_t n) {
  if (!j.contains(field)) return;
  const auto& m = j.at(field);
  if (!m.is_object()) throw ParseError(std::string(field) + " must be an object");
  for (const auto& [key, val] : m.items()) {
    std::size_t d = parseDimKey(key, n);
    if (!val.is_object()) throw ParseError(std::string(field) + "." + key + " must be an object");
    for (const auto& [c, v] : val.items()) {
      if (!v.is_string()) throw ParseError(std::string(field) + "." + key + "." + c + " must be a string");
      out[d][c] = v.get<std::string>();
    }
  }
}

}  // namespace

GlobSet globset_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("globular set must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "n" && key != "cells" && key != "src" && key != "tgt") throw ParseError("unknown key '" + key + "'");
  if (!j.contains("n") || !j.at("n").is_number_unsigned()) throw ParseError("'n' must be a natural number");
  if (!j.contains("cells") || !j.at("cells").is_array()) throw ParseError("'cells' must be an array");
  std::size_t n = j.at("n").get<std::size_t>();
  const auto& cells = j.at("cells");
  if (cells.size() != n + 1)
    throw ParseError("'cells' has " + std::to_string(cells.size()) + " dimensions, expected " + std::to_string(n + 1));
  GlobSet g = GlobSet::empty(n);
  for (std::size_t d = 0; d <= n; ++d) {
    if (!cells[d].is_array()) throw ParseError("cells[" + std::to_string(d) + "] must be an array");
    for (const auto& c : cells[d]) {
      if (!c.is_string()) throw ParseError("cell identifiers must be strings");
      g.cells[d].push_back(c.get<std::string>());
    }
  }
  readMaps(j, "src", g.src, n);
  readMaps(j, "tgt", g.tgt, n);
  return g;
}

std::string violation_json(const Violation& v) {
  json j;
  j["ok"] = false;
  j["dim"] = v.dim;
  j["cell"] = v.cell;
  j["axiom"] = v.axiom;
  j["message"] = v.message;
  return j.dump();
}

}  // namespace omega::gcore
