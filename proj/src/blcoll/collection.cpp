#include "omega/blcoll/collection.hpp"

#include <set>

#include "omega/monads/pasting.hpp"

namespace omega::blcoll {

using gcore::ParseError;

std::string lift_key(std::size_t m, const std::string& a, const std::string& b, const std::string& y) {
  return "(" + std::to_string(m) + "|" + a + "|" + b + "|" + y + ")";
}

namespace {

Violation fail(std::size_t d, const std::string& cell, std::string axiom, std::string message) {
  return Violation{d, cell, std::move(axiom), std::move(message)};
}

bool parallel(const GlobSet& g, std::size_t m, const std::string& a, const std::string& b) {
  return m == 0 || (g.source(m, a) == g.source(m, b) && g.target(m, a) == g.target(m, b));
}

/// Calls fn(m, a, b, y) for every tuple a contraction must answer.
template <class Fn>
void forEachTuple(const Collection& c, std::size_t mMax, Fn fn) {
  if (c.n == 0) return;
  GlobSet t = monads::tn_terminal_globset(c.n, c.bound);
  for (std::size_t m = 0; m <= std::min(mMax, c.n - 1); ++m)
    for (const auto& a : c.a.cells[m])
      for (const auto& b : c.a.cells[m]) {
        if (!parallel(c.a, m, a, b)) continue;
        const auto& pa = c.p.at(a);
        const auto& pb = c.p.at(b);
        for (const auto& y : t.cells[m + 1])
          if (t.source(m + 1, y) == pa && t.target(m + 1, y) == pb) fn(m, a, b, y);
      }
}

bool fits(const Collection& c, std::size_t m, const std::string& x, const std::string& a, const std::string& b,
          const std::string& y, std::string* why) {
  if (!c.a.contains(m + 1, x)) {
    if (why) *why = "lift " + x + " is not an (m+1)-cell";
    return false;
  }
  if (c.a.source(m + 1, x) != a || c.a.target(m + 1, x) != b) {
    if (why) *why = "lift " + x + " has the wrong boundary";
    return false;
  }
  if (c.p.at(x) != y) {
    if (why) *why = "lift " + x + " lies over " + c.p.at(x);
    return false;
  }
  return true;
}

}  // namespace

std::optional<Violation> check_collection(const Collection& c) {
  if (c.a.n != c.n) return fail(0, "", "dimension", "A is not " + std::to_string(c.n) + "-dimensional");
  if (auto v = gcore::validate_globset(c.a)) return v;
  GlobSet t = monads::tn_terminal_globset(c.n, c.bound);
  std::set<std::string> seen;
  for (std::size_t d = 0; d <= c.n; ++d)
    for (const auto& x : c.a.cells[d]) {
      if (!seen.insert(x).second) return fail(d, x, "unique-id", "id used in two dimensions");
      auto it = c.p.find(x);
      if (it == c.p.end()) return fail(d, x, "p-total", "p is undefined on " + x);
      if (!t.contains(d, it->second))
        return fail(d, x, "p-range", it->second + " is not a " + std::to_string(d) + "-diagram within the bound");
      if (d == 0) continue;
      if (t.source(d, it->second) != c.p.at(c.a.source(d, x)))
        return fail(d, x, "p-src", "p does not commute with source at " + x);
      if (t.target(d, it->second) != c.p.at(c.a.target(d, x)))
        return fail(d, x, "p-tgt", "p does not commute with target at " + x);
    }
  for (const auto& [x, _] : c.p)
    if (!seen.contains(x)) return fail(0, x, "p-range", "p mentions a cell outside A");
  return std::nullopt;
}

Collection identity_collection(std::size_t n, std::size_t bound) {
  GlobSet t = monads::tn_terminal_globset(n, bound);
  Collection c;
  c.n = n;
  c.bound = bound;
  c.a = GlobSet::empty(n);
  auto name = [](std::size_t d, const std::string& tree) { return std::to_string(d) + ":" + tree; };
  for (std::size_t d = 0; d <= n; ++d)
    for (const auto& y : t.cells[d]) {
      if (d == 0)
        c.a.addCell(0, name(0, y));
      else
        c.a.addCell(d, name(d, y), name(d - 1, t.source(d, y)), name(d - 1, t.target(d, y)));
      c.p[name(d, y)] = y;
    }
  return c;
}

Collection random_collection(std::size_t n, std::size_t bound, std::size_t maxCopies, Rng& rng) {
  GlobSet t = monads::tn_terminal_globset(n, bound);
  Collection c;
  c.n = n;
  c.bound = bound;
  c.a = GlobSet::empty(n);
  for (std::size_t d = 0; d <= n; ++d) {
    std::size_t i = 0;
    for (const auto& y : t.cells[d]) {
      std::size_t copies = rng.between(d == 0 ? 1 : 0, std::max<std::size_t>(maxCopies, 1));
      for (std::size_t k = 0; k < copies; ++k) {
        std::string id = "c" + std::to_string(d) + "_" + std::to_string(i);
        if (d == 0) {
          c.a.addCell(0, id);
        } else {
          std::vector<std::pair<std::string, std::string>> pairs;
          for (const auto& s : c.a.cells[d - 1])
            for (const auto& u : c.a.cells[d - 1])
              if (c.p.at(s) == t.source(d, y) && c.p.at(u) == t.target(d, y) && parallel(c.a, d - 1, s, u))
                pairs.emplace_back(s, u);
          if (pairs.empty()) break;
          const auto& [s, u] = pairs[rng.below(pairs.size())];
          c.a.addCell(d, id, s, u);
        }
        c.p[id] = y;
        ++i;
      }
    }
  }
  return c;
}

std::vector<MissingLift> check_contraction(const Collection& c, const Lift& lift, std::size_t mMax) {
  std::vector<MissingLift> out;
  forEachTuple(c, mMax, [&](std::size_t m, const std::string& a, const std::string& b, const std::string& y) {
    auto it = lift.find(lift_key(m, a, b, y));
    std::string why;
    if (it == lift.end())
      out.push_back({m, a, b, y, "no lift"});
    else if (!fits(c, m, it->second, a, b, y, &why))
      out.push_back({m, a, b, y, why});
  });
  return out;
}

std::vector<MissingLift> check_incoherent_contraction(const Collection& c, const Lift& lift) {
  if (c.n == 0) return {};
  return check_contraction(c, lift, c.n - 1);
}

Lift search_lift(const Collection& c, std::size_t mMax) {
  Lift l;
  forEachTuple(c, mMax, [&](std::size_t m, const std::string& a, const std::string& b, const std::string& y) {
    for (const auto& x : c.a.cells[m + 1])
      if (fits(c, m, x, a, b, y, nullptr)) {
        l[lift_key(m, a, b, y)] = x;
        return;
      }
  });
  return l;
}

Collection truncate_collection(const Collection& c, std::size_t m) {
  if (m > c.n) throw gcore::DimensionError("cannot truncate upwards");
  Collection r;
  r.n = m;
  r.bound = c.bound;
  r.a = gcore::truncate_globset(c.a, m);
  for (std::size_t d = 0; d <= m; ++d)
    for (const auto& x : r.a.cells[d])
      if (auto it = c.p.find(x); it != c.p.end()) r.p[x] = it->second;
  return r;
}

Lift truncate_lift(const Lift& lift, std::size_t top) {
  Lift r;
  for (const auto& [k, v] : lift) {
    std::size_t m = std::stoul(k.substr(1, k.find('|') - 1));
    if (m < top) r[k] = v;
  }
  return r;
}

Collection delete_cell(const Collection& c, std::size_t d, const std::string& id) {
  if (d == 0 || d > c.n || !c.a.contains(d, id)) throw gcore::DimensionError("no cell " + id + " above dimension 0");
  std::vector<std::set<std::string>> gone(c.n + 1);
  gone[d].insert(id);
  Collection r;
  r.n = c.n;
  r.bound = c.bound;
  r.a = GlobSet::empty(c.n);
  for (std::size_t e = 0; e <= c.n; ++e)
    for (const auto& x : c.a.cells[e]) {
      if (e > d && (gone[e - 1].contains(c.a.source(e, x)) || gone[e - 1].contains(c.a.target(e, x))))
        gone[e].insert(x);
      if (gone[e].contains(x)) continue;
      if (e == 0)
        r.a.addCell(0, x);
      else
        r.a.addCell(e, x, c.a.source(e, x), c.a.target(e, x));
      r.p[x] = c.p.at(x);
    }
  return r;
}

Collection collection_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("collection must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "n" && key != "A" && key != "p" && key != "bound") throw ParseError("unknown collection key '" + key + "'");
  for (const char* key : {"n", "bound"})
    if (!j.contains(key) || !j.at(key).is_number_unsigned())
      throw ParseError(std::string("'") + key + "' must be a natural number");
  if (!j.contains("A")) throw ParseError("missing 'A'");
  if (!j.contains("p") || !j.at("p").is_object()) throw ParseError("'p' must be an object");
  Collection c;
  c.n = j.at("n").get<std::size_t>();
  c.bound = j.at("bound").get<std::size_t>();
  c.a = gcore::globset_from_json(j.at("A"));
  for (const auto& [k, v] : j.at("p").items()) {
    if (!v.is_string()) throw ParseError("p values must be strings");
    c.p[k] = v.get<std::string>();
  }
  return c;
}

nlohmann::json to_json(const Collection& c) {
  return {{"n", c.n}, {"A", gcore::to_json(c.a)}, {"p", c.p}, {"bound", c.bound}};
}

Lift lift_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("lift must be a JSON object");
  Lift l;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) throw ParseError("lift values must be strings");
    if (k.size() < 3 || k.front() != '(' || k.back() != ')' || k.find('|') == std::string::npos)
      throw ParseError("lift key '" + k + "' is not (m|a|b|y)");
    auto m = k.substr(1, k.find('|') - 1);
    if (m.empty() || m.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("lift key '" + k + "' has no dimension");
    l[k] = v.get<std::string>();
  }
  return l;
}

nlohmann::json to_json(const Lift& l) { return nlohmann::json(l); }

nlohmann::json to_json(const std::vector<MissingLift>& missing) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& x : missing) arr.push_back({{"m", x.m}, {"a", x.a}, {"b", x.b}, {"y", x.y}, {"reason", x.reason}});
  return arr;
}

}  // namespace omega::blcoll
