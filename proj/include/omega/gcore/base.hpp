#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "omega/term.hpp"

namespace omega::gcore {

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max() / 4;

/// A materialised object of one of the finitary bases: the point of the
/// terminal category, a finite set, or an enriched graph whose homs are
/// objects one level down.  Values are immutable and share structure.
class Obj {
 public:
  enum class Kind { Point, Set, Graph };

  Obj();  // the empty set
  static Obj point();
  static Obj set(std::vector<Term> elements);
  /// homs[i * objects.size() + j] is the hom from objects[i] to objects[j].
  /// `layers` is the number of graph layers; it is recorded explicitly so that
  /// the empty graph still knows where it lives.
  static Obj graph(std::vector<Term> objects, std::vector<Obj> homs, std::size_t layers, Kind bottom);

  [[nodiscard]] Kind kind() const noexcept;
  /// Point or Set: the kind of the innermost level.
  [[nodiscard]] Kind bottom() const noexcept;
  /// Number of enrichment layers; also the top cell dimension.
  [[nodiscard]] std::size_t layers() const noexcept;

  /// Elements (Set), the single element (Point), or objects (Graph).
  [[nodiscard]] const std::vector<Term>& members() const noexcept;
  [[nodiscard]] std::optional<std::size_t> indexOf(const Term& t) const;
  [[nodiscard]] bool hasMember(const Term& t) const { return indexOf(t).has_value(); }
  /// Hom-object of a graph; an empty object one level down when either end is
  /// not an object.
  [[nodiscard]] const Obj& hom(const Term& a, const Term& b) const;
  [[nodiscard]] const Obj& homAt(std::size_t i, std::size_t j) const;

  friend bool operator==(const Obj& x, const Obj& y);

  struct Data;  // opaque

 private:
  explicit Obj(std::shared_ptr<const Data> d);
  std::shared_ptr<const Data> d_;
};

/// The single element of the point.
Term pointElement();

/// Empty object living at the given depth.
Obj emptyLike(std::size_t layers, Obj::Kind bottom);

// Cells in graph form (see Term).
std::vector<Term> cells(const Obj& x, std::size_t dim, std::size_t budget = kUnbounded);
std::size_t cellCount(const Obj& x, std::size_t dim, std::size_t budget = kUnbounded);
bool hasCell(const Obj& x, std::size_t dim, const Term& cell);
Term cellSource(std::size_t dim, const Term& cell);
Term cellTarget(std::size_t dim, const Term& cell);
/// Keeps the cells of size <= budget; closed under source/target because the
/// ends of a cell are never larger than the cell.
Obj restrict(const Obj& x, std::size_t budget);

/// Cell-level conventions for products and coproducts.
Term packProduct(std::size_t dim, std::span<const Term> cells);
std::vector<Term> unpackProduct(std::size_t dim, const Term& cell, std::size_t arity);
Term packInj(std::size_t dim, const Term& tag, const Term& cell);
std::pair<Term, Term> unpackInj(std::size_t dim, const Term& cell);
/// Unique cell of the terminal object in the given dimension.
Term terminalCell(std::size_t dim);

/// A dimension-preserving map on cells.
using CellFn = std::function<Term(std::size_t dim, const Term& cell)>;
CellFn identityCellFn();
CellFn compose(CellFn outer, CellFn inner);
/// The component of a graph morphism on the hom between a and b, read off
/// from its action on (dim+1)-cells.
CellFn homComponent(const CellFn& f, const Term& a, const Term& b);

/// A finitary category with terminal object, finite products and finite
/// coproducts, in which products distribute over coproducts.
class EnrichmentBase {
 public:
  virtual ~EnrichmentBase() = default;

  [[nodiscard]] virtual std::string objectKind() const = 0;
  /// Cells of objects of this base have dimensions 0..depth().
  [[nodiscard]] virtual std::size_t depth() const = 0;
  [[nodiscard]] virtual Obj::Kind bottom() const = 0;

  /// Global elements, i.e. maps from the terminal object.
  [[nodiscard]] virtual std::vector<Term> elements(const Obj& x) const = 0;
  [[nodiscard]] bool equalObj(const Obj& x, const Obj& y) const { return x == y; }
  [[nodiscard]] bool equalElem(const Term& x, const Term& y) const { return x == y; }

  [[nodiscard]] virtual Obj terminalObj() const = 0;
  [[nodiscard]] virtual Obj initialObj() const = 0;
  /// Product restricted to cells of size <= budget.
  [[nodiscard]] virtual Obj product(std::span<const Obj> xs, std::size_t budget = kUnbounded) const = 0;
  [[nodiscard]] virtual Obj coproduct(std::span<const std::pair<Term, Obj>> parts) const = 0;
  /// Coproduct with the injections tagged by component index.
  [[nodiscard]] Obj coproduct(std::span<const Obj> parts) const;

  [[nodiscard]] virtual Term productCell(std::size_t dim, std::span<const Term> cells) const;
  [[nodiscard]] virtual std::vector<Term> projectCell(std::size_t dim, const Term& cell, std::size_t arity) const;
  [[nodiscard]] virtual Term coproductCell(std::size_t dim, const Term& tag, const Term& cell) const;
  [[nodiscard]] virtual std::pair<Term, Term> splitCell(std::size_t dim, const Term& cell) const;

  /// x × (∐ ys) -> ∐ (x × y_i), cellwise.
  [[nodiscard]] Term distributeCell(std::size_t dim, const Term& cell) const;
  /// Enumerates both sides in every dimension and confirms distributeCell is
  /// a bijection between them; returns a description of the first failure.
  [[nodiscard]] std::optional<std::string> checkDistributive(const Obj& x, std::span<const Obj> ys) const;
  /// Cardinality invariants on the given objects.
  [[nodiscard]] std::optional<std::string> checkInvariants(std::span<const Obj> sample) const;
};

using BasePtr = std::shared_ptr<const EnrichmentBase>;

/// The one-object, one-arrow category.
BasePtr terminal_base();
BasePtr finset_base();
/// V-graphs over V.
BasePtr vgraph_base(BasePtr v);
/// n-Gph: Set for n = 0, then n-fold graph enrichment.
BasePtr ngraph_base(std::size_t n);

/// The hom-level base of a graph base, or nullptr.
BasePtr inner_base(const EnrichmentBase& b);

/// Graph with the given objects and homs computed by `hom`.
Obj make_graph(const EnrichmentBase& homBase, std::vector<Term> objects,
               const std::function<Obj(const Term&, const Term&)>& hom);

/// A functor between bases, given on objects and on cells.
struct BaseFunctor {
  std::string name;
  std::function<Obj(const Obj&)> onObject;
  CellFn onCell;
};

/// H_*: same objects, every hom sent through H.  `target` is the base H lands in.
Obj apply_locally(const BaseFunctor& h, const EnrichmentBase& target, const Obj& a);
/// H_* on cells.
CellFn apply_locally_cells(const BaseFunctor& h);
BaseFunctor compose(const BaseFunctor& outer, const BaseFunctor& inner);

}  // namespace omega::gcore
