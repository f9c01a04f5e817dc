#include "omega/gcore/tower.hpp"

#include <mutex>
#include <set>

namespace omega::gcore {

struct OmegaTower::State {
  Generator gen;
  std::mutex mu;
  std::map<std::size_t, std::unique_ptr<GlobSet>> levels;
};

OmegaTower::OmegaTower(Generator gen) : state_(std::make_shared<State>()) { state_->gen = std::move(gen); }

const GlobSet& OmegaTower::level(std::size_t k) const {
  {
    std::lock_guard lock(state_->mu);
    if (auto it = state_->levels.find(k); it != state_->levels.end()) return *it->second;
  }
  // Generate outside the lock: generators may probe other towers.
  auto g = std::make_unique<GlobSet>(state_->gen(k));
  if (g->n != k) throw DimensionError("tower level " + std::to_string(k) + " has dimension " + std::to_string(g->n));
  std::lock_guard lock(state_->mu);
  auto [it, inserted] = state_->levels.emplace(k, std::move(g));
  return *it->second;
}

void OmegaTower::checkCompatible(std::size_t depth) const {
  for (std::size_t k = 1; k <= depth; ++k)
    if (!(truncate_globset(level(k), k - 1) == level(k - 1)))
      throw CompatibilityError(k, "level " + std::to_string(k) + " does not truncate to level " + std::to_string(k - 1));
}

bool OmegaTower::equalTo(const OmegaTower& other, std::size_t depth) const {
  for (std::size_t k = 0; k <= depth; ++k)
    if (!same_cells(level(k), other.level(k))) return false;
  return true;
}

namespace {

GlobSet pad(const GlobSet& g, std::size_t k) {
  if (k <= g.n) return truncate_globset(g, k);
  GlobSet out = g;
  out.n = k;
  out.cells.resize(k + 1);
  out.src.resize(k + 1);
  out.tgt.resize(k + 1);
  return out;
}

}  // namespace

OmegaTower tower_of(const GlobSet& g) {
  return OmegaTower([g](std::size_t k) { return pad(g, k); });
}

OmegaTower terminal_tower() {
  return OmegaTower([](std::size_t k) { return GlobSet::terminal(k); });
}

const OmegaTower& TowerGraph::hom(const std::string& a, const std::string& b) const {
  auto it = homs.find({a, b});
  if (it == homs.end()) throw std::out_of_range("no hom tower for (" + a + ", " + b + ")");
  return it->second;
}

bool TowerGraph::equalTo(const TowerGraph& other, std::size_t depth) const {
  if (objects != other.objects || homs.size() != other.homs.size()) return false;
  for (const auto& [key, t] : homs) {
    auto it = other.homs.find(key);
    if (it == other.homs.end() || !t.equalTo(it->second, depth)) return false;
  }
  return true;
}

namespace {

std::string zeroEnd(const GlobSet& g, std::size_t d, const std::string& c, bool target) {
  std::string x = target ? g.target(d, c) : g.source(d, c);
  for (std::size_t k = d - 1; k > 0; --k) x = g.source(k, x);
  return x;
}

}  // namespace

TowerGraph tower_unwrap(const OmegaTower& t, std::size_t depth) {
  t.checkCompatible(depth);
  TowerGraph out;
  out.objects = t.level(0).cells[0];
  for (const auto& a : out.objects) {
    for (const auto& b : out.objects) {
      out.homs.emplace(std::make_pair(a, b), OmegaTower([t, a, b](std::size_t m) {
                         const GlobSet& up = t.level(m + 1);
                         GlobSet h = GlobSet::empty(m);
                         for (std::size_t d = 1; d <= m + 1; ++d)
                           for (const auto& c : up.cells[d]) {
                             if (zeroEnd(up, d, c, false) != a || zeroEnd(up, d, c, true) != b) continue;
                             if (d == 1)
                               h.addCell(0, c);
                             else
                               h.addCell(d - 1, c, up.source(d, c), up.target(d, c));
                           }
                         return h;
                       }));
    }
  }
  return out;
}

OmegaTower tower_wrap(const TowerGraph& g) {
  return OmegaTower([g](std::size_t k) {
    GlobSet out = GlobSet::empty(k);
    for (const auto& x : g.objects) out.addCell(0, x);
    if (k == 0) return out;
    std::vector<std::set<std::string>> seen(k + 1);
    for (const auto& a : g.objects) {
      for (const auto& b : g.objects) {
        const GlobSet& h = g.hom(a, b).level(k - 1);
        for (std::size_t d = 0; d < k; ++d) {
          for (const auto& c : h.cells[d]) {
            if (!seen[d + 1].insert(c).second)
              throw CompatibilityError(k, "cell identifier " + c + " occurs in more than one hom at level " +
                                              std::to_string(k));
            if (d == 0)
              out.addCell(1, c, a, b);
            else
              out.addCell(d + 1, c, h.source(d, c), h.target(d, c));
          }
        }
      }
    }
    return out;
  });
}

}  // namespace omega::gcore
