#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "omega/gcore/globset.hpp"

namespace omega::gcore {

/// Raised when level k of a tower does not truncate to level k-1.
struct CompatibilityError : std::runtime_error {
  CompatibilityError(std::size_t level, const std::string& what)
      : std::runtime_error(what), level(level) {}
  std::size_t level;
};

/// A sequence (..., X_2, X_1, X_0) of globular sets, X_k at dimension k,
/// generated on demand.  Levels are memoised under a lock, so concurrent
/// probes see the same values.  Compatibility is checked only when asked.
class OmegaTower {
 public:
  using Generator = std::function<GlobSet(std::size_t level)>;

  explicit OmegaTower(Generator gen);

  /// Level k; throws DimensionError if the generator returns the wrong
  /// dimension.
  [[nodiscard]] const GlobSet& level(std::size_t k) const;

  /// Checks truncate(level(k), k-1) == level(k-1) for 1 <= k <= depth and
  /// throws CompatibilityError naming the first level that fails.
  void checkCompatible(std::size_t depth) const;

  /// Levels 0..depth have the same cells and maps.  Declaration order within
  /// a dimension is not compared: wrapping regroups cells by hom.
  [[nodiscard]] bool equalTo(const OmegaTower& other, std::size_t depth) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// Tower of truncations of g; above dimension g.n the levels carry no
/// further cells.
OmegaTower tower_of(const GlobSet& g);

/// Every level has one cell in each dimension.
OmegaTower terminal_tower();

/// A graph whose homs are towers: the unwrapped view of an ω-graph.
struct TowerGraph {
  std::vector<std::string> objects;
  std::map<std::pair<std::string, std::string>, OmegaTower> homs;

  [[nodiscard]] const OmegaTower& hom(const std::string& a, const std::string& b) const;
  [[nodiscard]] bool equalTo(const TowerGraph& other, std::size_t depth) const;
};

/// Objects are the 0-cells of level 0; the hom tower at (a, b) has as level
/// m the cells of level m+1 running from a to b, shifted down one dimension.
/// Cell identifiers are kept.  Compatibility is checked to `depth` first.
TowerGraph tower_unwrap(const OmegaTower& t, std::size_t depth);

/// Inverse of tower_unwrap.  Each generated level is checked for identifier
/// clashes between different homs.
OmegaTower tower_wrap(const TowerGraph& g);

}  // namespace omega::gcore
