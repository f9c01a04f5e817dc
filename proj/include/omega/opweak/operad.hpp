#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "omega/gcore/base.hpp"
#include "omega/monads/monad.hpp"

namespace omega::opweak {

using gcore::BasePtr;
using gcore::Obj;
using monads::MonadPtr;
using monads::WeightingPtr;

/// An operad in a cartesian base, up to a maximal arity.  Composition and
/// unit act on cells of every dimension of the base.
struct FinOperad {
  std::string name;
  BasePtr base;
  std::size_t cap = 0;
  std::vector<Obj> ops;  // ops[k] = P(k), 0 <= k <= cap
  std::function<Term(std::size_t dim, const Term& p, const std::vector<Term>& qs)> compose;
  std::function<Term(std::size_t dim)> unit;
  /// Optional algebra structure T(P(k)) → P(k) for a monad on the base.
  std::function<Term(std::size_t k, std::size_t dim, const Term& cell)> action;

  [[nodiscard]] WeightingPtr weighting() const;
};

struct OperadViolation {
  std::string law;  // "left-unit", "right-unit", "associativity", "closure", "undefined"
  std::size_t dim = 0;
  std::string detail;
};

/// Unit and associativity laws on cells of every dimension, for all arity
/// combinations whose total stays within the cap.
std::optional<OperadViolation> check_operad_laws(const FinOperad& p);

FinOperad terminal_operad(BasePtr v, std::size_t cap);

/// Operad in finite sets with tabulated composition, keyed "p(q1,q2)".
FinOperad table_operad(std::string name, std::size_t cap, std::vector<std::vector<std::string>> ops,
                       std::map<std::string, std::string> comp, std::string unit);

/// {"cap":3,"ops":{"0":[...],...},"comp":{"p(q1,q2)":"r"},"unit":"u"}.
FinOperad operad_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FinOperad& p);

/// Free (V, P)-category monad: fc weighted by P(k).
MonadPtr vp_free_monad(const FinOperad& p);

/// Elements of the free (V, P)-category hom (a, b) of size <= bound.
std::vector<Term> vp_free_hom(const Obj& a, const FinOperad& p, const Term& from, const Term& to, std::size_t bound);

/// Drops the P(k) factor from a weighted free-category hom cell of the given
/// dimension.  With P terminal this is the comparison with plain fc.
Term drop_weight(const gcore::EnrichmentBase& v, std::size_t dim, const Term& cell);

/// Confirms drop_weight is a size-preserving bijection from the weighted
/// free category on x (terminal weights) onto fc(x), in every dimension.
std::optional<std::string> check_terminal_reduction(const Obj& x, std::size_t bound);

/// A graph with k-ary composition weighted by an operad:
/// gamma(objects a_0..a_k, p ∈ P(k), [f_1, ..., f_k]) with f_i ∈ A(a_{i-1}, a_i).
struct WeakEnrichedCat {
  Obj underlying;  // one-layer graph over finite sets
  FinOperad operad;
  std::function<Term(const std::vector<Term>& objects, const Term& p, const std::vector<Term>& fs)> gamma;
};

/// Endpoint typing, unit and the compatibility of nested composites with
/// operad composition, over composable strings of total arity <= cap whose
/// hom elements have size <= bound.
std::optional<std::string> check_weak_cat(const WeakEnrichedCat& c, std::size_t bound);

/// P-algebra on a finite set: action(p, [a_1..a_k]).
struct OperadAlgebra {
  FinOperad operad;
  std::vector<Term> carrier;
  std::function<Term(const Term& p, const std::vector<Term>& as)> act;
};

std::optional<std::string> check_operad_algebra(const OperadAlgebra& alg);
/// The one-object (Set, P)-category with hom the carrier.
WeakEnrichedCat one_object_category(const OperadAlgebra& alg);
/// The P-action read off a one-object (Set, P)-category.
OperadAlgebra algebra_of(const WeakEnrichedCat& c);
/// Both: the category axioms hold iff the algebra axioms do; reports
/// disagreement, otherwise the common verdict.
std::optional<std::string> one_object_algebra_check(const OperadAlgebra& alg);

}  // namespace omega::opweak
