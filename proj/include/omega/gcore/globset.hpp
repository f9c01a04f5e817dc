#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "omega/rng.hpp"

namespace omega::gcore {

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed external input (bad JSON shape, unknown keys, dangling ids).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite n-globular set.  cells[d] lists the d-cells in declaration order;
/// src[d] and tgt[d] (1 <= d <= n) map each d-cell to a (d-1)-cell.  Index 0 of
/// src/tgt is unused.
struct GlobSet {
  std::size_t n = 0;
  std::vector<std::vector<std::string>> cells{{}};
  std::vector<std::map<std::string, std::string>> src{{}};
  std::vector<std::map<std::string, std::string>> tgt{{}};

  static GlobSet empty(std::size_t n);
  /// One cell per dimension; the maps are forced.
  static GlobSet terminal(std::size_t n);

  void addCell(std::size_t d, const std::string& id);
  void addCell(std::size_t d, const std::string& id, const std::string& s, const std::string& t);

  [[nodiscard]] std::size_t count(std::size_t d) const { return d <= n ? cells[d].size() : 0; }
  [[nodiscard]] bool contains(std::size_t d, const std::string& id) const;
  [[nodiscard]] const std::string& source(std::size_t d, const std::string& id) const;
  [[nodiscard]] const std::string& target(std::size_t d, const std::string& id) const;

  friend bool operator==(const GlobSet&, const GlobSet&) = default;
};

/// Same cells and maps, ignoring declaration order within a dimension.
bool same_cells(const GlobSet& a, const GlobSet& b);

/// First failed axiom found by validate_globset.
struct Violation {
  std::size_t dim = 0;
  std::string cell;
  std::string axiom;  // "unique-id", "total-src", "total-tgt", "range", "ss=st", "ts=tt"
  std::string message;
};

/// Checks every GlobSet invariant; never throws.
std::optional<Violation> validate_globset(const GlobSet& g);

/// Keeps dimensions <= m verbatim.
GlobSet truncate_globset(const GlobSet& g, std::size_t m);

/// Random n-globular set with at most maxPerDim cells in each dimension; every
/// (d>=1)-cell is attached to a parallel pair of (d-1)-cells.
GlobSet random_globset(std::size_t n, std::size_t maxPerDim, Rng& rng);

/// Dimension-preserving cell map between globular sets.
struct GlobMap {
  std::vector<std::map<std::string, std::string>> cellMap;
};

/// Ok iff f is total on `from`, lands in `to` and commutes with src/tgt.
std::optional<std::string> check_glob_map(const GlobSet& from, const GlobSet& to, const GlobMap& f);
GlobMap truncate_map(const GlobMap& f, std::size_t m);

nlohmann::json to_json(const GlobSet& g);
/// Strict reader: unknown keys, missing dimensions and non-string ids are
/// rejected with ParseError.  Globularity is not checked here.
GlobSet globset_from_json(const nlohmann::json& j);
std::string violation_json(const Violation& v);

}  // namespace omega::gcore
