#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "omega/gcore/base.hpp"

namespace omega::monads {

using gcore::BasePtr;
using gcore::CellFn;
using gcore::kUnbounded;
using gcore::Obj;

/// A monad on an enrichment base, given on cells.  apply(x, bound) is the
/// fragment of T(x) made of cells of size <= bound; unit, mult and fmap act
/// on single cells in graph form and do not need to know the object.
class Monad {
 public:
  virtual ~Monad() = default;

  [[nodiscard]] virtual std::string name() const = 0;
  [[nodiscard]] virtual const BasePtr& base() const = 0;
  [[nodiscard]] virtual Obj apply(const Obj& x, std::size_t bound = kUnbounded) const = 0;
  [[nodiscard]] virtual Term unit(std::size_t dim, const Term& cell) const = 0;
  [[nodiscard]] virtual Term mult(std::size_t dim, const Term& cell) const = 0;
  [[nodiscard]] virtual Term fmap(const CellFn& f, std::size_t dim, const Term& cell) const = 0;
  /// Coproduct preservation: a cell of T(∐ X_t) is T(inj_t) of exactly one
  /// cell of T(X_t).  Returns (t, that cell).
  [[nodiscard]] virtual std::pair<Term, Term> split(std::size_t dim, const Term& cell) const = 0;
};

using MonadPtr = std::shared_ptr<const Monad>;

CellFn unitFn(MonadPtr t);
CellFn multFn(MonadPtr t);
CellFn fmapFn(MonadPtr t, CellFn f);

/// Thrown when a weighted free category would need an operation of arity
/// above the operad's cap.
struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operad data as seen by the free-category construction: P(k) as base
/// objects, composition and unit on cells, and optionally the structure
/// T(P(k)) → P(k) of an algebra for the monad it is composed with.
struct Weighting {
  std::string name;
  std::size_t cap = 0;
  std::function<Obj(std::size_t k)> ops;
  /// p ∘ (q_1, ..., q_k) on cells of one dimension; q_i weights the i-th
  /// edge of the path, counted from the source end.
  std::function<Term(std::size_t dim, const Term& p, const std::vector<Term>& qs)> compose;
  std::function<Term(std::size_t dim)> unit;
  std::function<Term(std::size_t k, std::size_t dim, const Term& cell)> action;
};

using WeightingPtr = std::shared_ptr<const Weighting>;

/// Terminal operad over a base: every P(k) terminal, every structure map forced.
WeightingPtr terminal_weighting(BasePtr v, std::size_t cap);

MonadPtr identity_monad(BasePtr v);

/// X ↦ M × X on finite sets for a finite monoid M given by its multiplication
/// table; elements[0] is the unit.
MonadPtr writer_monad(std::vector<std::string> elements, std::vector<std::vector<std::size_t>> table);
/// The two-element group.
MonadPtr writer_z2();

/// T_*: same objects, T applied to each hom.
MonadPtr lift_monad(MonadPtr t);

/// Free V-category monad on V-graphs.  hom(a, b) is the coproduct over paths
/// a = a_0, ..., a_k = b of X(a_{k-1}, a_k) × ... × X(a_0, a_1), with an extra
/// leading factor P(k) when a weighting is given.  Summands are tagged with
/// the path.
MonadPtr fc_monad(BasePtr v, WeightingPtr w = nullptr);

/// The distributive law T_* fc → fc T_* on a single cell.  w must carry a
/// T-algebra action when present.
Term dist_law(const Monad& t, const gcore::EnrichmentBase& v, const Weighting* w, std::size_t dim, const Term& cell);
CellFn dist_law_fn(MonadPtr t, WeightingPtr w);

/// fc ∘ T_* with multiplication through the distributive law.
MonadPtr fm_step(MonadPtr t, WeightingPtr w = nullptr);

/// A cell of a graph's global element e, read in dimension dim.
Term globalCell(std::size_t depth, const Term& e, std::size_t dim);

/// Drops the top layer of an n-graph (n >= 1).
Obj truncate_obj(const Obj& x);

/// Functor and transformation data for a monad morphism (H, θ) with
/// θ_x : H(T x) → T'(H x).
struct MonadMorphism {
  MonadPtr source;
  MonadPtr target;
  gcore::BaseFunctor h;
  CellFn theta;
  bool weak = false;
};

/// Checks, at dimensions <= maxDim, that θ is a bijection from the cells of
/// H(T x) onto those of T'(H x) and that it commutes with units and
/// multiplications.  Returns the first failure.
std::optional<std::string> check_monad_morphism(const MonadMorphism& m, const Obj& x, std::size_t maxDim,
                                                std::size_t bound);

/// F_M on morphisms: (H, θ) ↦ (H_*, θ⁺) between the fm_step monads.
MonadMorphism fm_morphism(const MonadMorphism& m, MonadPtr source, MonadPtr target);

struct TowerLevel {
  BasePtr base;
  MonadPtr monad;
};

struct UnsupportedDepth : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxTowerDepth = 3;

/// T_0 = identity on sets, T_k = fm_step(T_{k-1}).  n > 3 is refused.
std::vector<TowerLevel> strict_tower(std::size_t n);
/// (U_k, γ_k) : T_k → T_{k-1}; γ_k is the identity on terms.
MonadMorphism truncation_morphism(const std::vector<TowerLevel>& tower, std::size_t k);

}  // namespace omega::monads
