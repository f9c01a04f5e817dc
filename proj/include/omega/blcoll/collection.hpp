#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "omega/gcore/globset.hpp"
#include "omega/rng.hpp"

namespace omega::blcoll {

using gcore::GlobSet;
using gcore::Violation;

/// An n-globular set over T_n(1): p sends each d-cell of A to a pasting
/// diagram of dimension d, written in bracket form, with at most `bound`
/// edges.  Cell ids of A must be distinct across dimensions since p is keyed
/// by id alone.
struct Collection {
  std::size_t n = 0;
  GlobSet a;
  std::map<std::string, std::string> p;
  std::size_t bound = 0;
};

/// Lift choices keyed by lift_key(m, a, b, y); values are (m+1)-cells of A.
using Lift = std::map<std::string, std::string>;

std::string lift_key(std::size_t m, const std::string& a, const std::string& b, const std::string& y);

struct MissingLift {
  std::size_t m = 0;
  std::string a, b, y;
  std::string reason;
  friend bool operator==(const MissingLift&, const MissingLift&) = default;
};

/// A valid, p total and dimension-preserving into T_n(1) cut at the bound,
/// and p commuting with source and target.
std::optional<Violation> check_collection(const Collection& c);

/// A = T_n(1) cut at bound, cells named "<d>:<tree>", p the identity.
Collection identity_collection(std::size_t n, std::size_t bound);

/// Every diagram of T_n(1) gets between 0 and maxCopies cells over it
/// (at least one 0-cell), attached to random parallel pairs over its
/// boundary.  Ids "c<d>_<i>".
Collection random_collection(std::size_t n, std::size_t bound, std::size_t maxCopies, Rng& rng);

/// For each m <= min(mMax, n-1), parallel pair (a, b) in A_m and (m+1)-cell
/// y : p(a) → p(b) of T_n(1) within the bound, lift must name an
/// (m+1)-cell from a to b over y.  Returns the tuples that fail, in
/// enumeration order.
std::vector<MissingLift> check_contraction(const Collection& c, const Lift& lift, std::size_t mMax);
/// m ranges over 0..n-1 only; the top dimension is unconstrained.
std::vector<MissingLift> check_incoherent_contraction(const Collection& c, const Lift& lift);

/// First fitting cell for every tuple that has one: the tautological choice
/// on the identity collection.
Lift search_lift(const Collection& c, std::size_t mMax);

/// Keeps dimensions <= m of A and the matching part of p; diagrams of
/// dimension <= m are already diagrams of T_m(1).
Collection truncate_collection(const Collection& c, std::size_t m);
/// Keeps the entries with m < top.
Lift truncate_lift(const Lift& lift, std::size_t top);

/// Removes a cell of dimension >= 1 together with every cell above it that
/// mentions it, directly or through another removed cell.
Collection delete_cell(const Collection& c, std::size_t d, const std::string& id);

/// {"n":2,"A":<globset>,"p":{"cell":"tree"},"bound":3}.
Collection collection_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Collection& c);
Lift lift_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Lift& l);
nlohmann::json to_json(const std::vector<MissingLift>& missing);

}  // namespace omega::blcoll
