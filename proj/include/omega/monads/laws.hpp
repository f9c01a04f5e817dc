#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "omega/monads/monad.hpp"
#include "omega/rng.hpp"

namespace omega::monads {

struct LawFailure {
  std::size_t sample = 0;
  std::string law;  // "left-unit", "right-unit", "associativity", "well-typed"
  std::size_t dim = 0;
  std::string cell;
};

struct LawReport {
  std::string monad;
  std::size_t samples = 0;
  std::size_t bound = 0;
  std::size_t checked = 0;  // number of cell equations evaluated
  std::vector<LawFailure> failures;
  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Unit and associativity laws on every cell of T x, TT x and TTT x of size
/// <= bound, in every dimension of the base.
std::vector<LawFailure> check_monad_laws(const Monad& t, const Obj& x, std::size_t bound, std::size_t* checked = nullptr);

using ObjGenerator = std::function<Obj(Rng&)>;

/// One-layer graph over finite sets with 1..maxObjects objects and up to
/// maxEdges edges placed uniformly.
Obj random_graph(Rng& rng, std::size_t maxObjects, std::size_t maxEdges);
/// n-graph from a random n-globular set.
Obj random_ngraph(std::size_t n, std::size_t maxPerDim, Rng& rng);
/// Random finite set of atoms.
Obj random_set(Rng& rng, std::size_t maxSize);

/// Laws over `samples` objects drawn from gen with the given seed; reports
/// are ordered by sample index.
LawReport monad_law_report(const Monad& t, std::size_t samples, std::size_t bound, std::uint64_t seed,
                           const ObjGenerator& gen);

nlohmann::json to_json(const LawReport& r);

/// Eilenberg–Moore axioms for action: T(carrier) → carrier on cells of size
/// <= bound.  The message names the failing cell.
std::optional<std::string> check_algebra(const Monad& t, const Obj& carrier, const CellFn& action, std::size_t bound);

/// The four distributive-law axioms for T_* over fc (weighted by w when
/// given) on the cells of size <= bound built from x.
std::optional<std::string> check_dist_law(MonadPtr t, WeightingPtr w, const Obj& x, std::size_t bound);

/// Kelly's count of the hom (a, b) of fc(x): sum over paths a → b of length
/// <= bound of the products of hom sizes, by dynamic programming.
std::size_t kelly_count(const Obj& x, const Term& a, const Term& b, std::size_t bound);

}  // namespace omega::monads
