#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "omega/gcore/base.hpp"
#include "omega/opweak/operad.hpp"

namespace omega::opweak {

/// Finite stand-in for a topological space: a directed graph whose vertices
/// are the points and whose edges generate the paths.  A space without edges
/// is discrete.  Paths are `mpath(x, e_1, ..., e_k, y)` terms graded by k.
struct Space {
  struct Edge {
    Term label, from, to;
  };
  std::vector<Term> points;
  std::vector<Edge> edges;
};

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Mode { Incoherent, Coherent };

Space discrete_space(std::vector<Term> points);
/// Validates that edge ends are points and labels are distinct.
Space graph_space(std::vector<Term> points, std::vector<Space::Edge> edges);
/// {"points":["u","v"],"edges":[["e","u","v"]]}.
Space space_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Space& x);

/// Walks from a to b with at most bound edges, shortest first.
std::vector<Term> paths(const Space& x, const Term& a, const Term& b, std::size_t bound);
/// The space of paths from a to b, up to bound edges.  It has no edges: the
/// model has no homotopies between paths.
Space path_space(const Space& x, const Term& a, const Term& b, std::size_t bound);
/// Concatenation of composable paths; throws ModelError on an endpoint
/// mismatch.  The empty concatenation at a is the constant path.
Term concat(const Term& a, const std::vector<Term>& ps);

/// Cartesian product of graphs: points are pairs, an edge moves one factor.
Space box_product(const Space& x, const Space& y);
/// Representative (least point) of the component of p.
Term component_of(const Space& x, const Term& p);

/// Π_m: points for m = 0 (their components in coherent mode), otherwise the
/// m-graph with the points as objects and Π_{m-1} of the path spaces as homs.
Obj pi_n(const Space& x, std::size_t m, Mode mode, std::size_t bound);

/// The identity j-cell on the point p of Π_m of a space.
Term id_cell(std::size_t m, std::size_t j, const Term& p, Mode mode);
/// The point underneath a cell of Π_m: the 0-source, without a component
/// wrapper.
Term base_point(const Term& cell);

/// The structure map T_m(Π_m x) → Π_m x of the strict model on cells:
/// every composable string of paths is sent to its concatenation, and higher
/// cells to identities, since path spaces are discrete.  It does not depend
/// on x.
gcore::CellFn fundamental_action(std::size_t m, Mode mode);

/// Π_m on a map of spaces given on points and edges; edges sent to nullopt
/// collapse to constant steps.  Components are renamed by their
/// representative in `to`.
gcore::CellFn pi_map(const Space& to, Mode mode, const std::function<Term(const Term&)>& onPoint,
                     const std::function<std::optional<Term>(const Term&)>& onEdge);

/// Π_m(x ⊡ y) → Π_m(x) × Π_m(y) through the projections is a bijection on
/// cells of every dimension.
std::optional<std::string> check_product_preservation(std::size_t m, Mode mode, const Space& x, const Space& y,
                                                      std::size_t bound);

/// The path graph of a space with composition by concatenation, weighted by
/// the terminal operad up to cap.
WeakEnrichedCat gamma_path_graph(const Space& x, std::size_t bound, std::size_t cap);

/// Π_m applied to an operad of discrete spaces given by its points: the
/// weighting operad of level m+1.  Cells above dimension 0 are identities;
/// the action is the fundamental one.
FinOperad apply_pi(const FinOperad& seed, std::size_t m, Mode mode);

/// One D_C step with Π = Π_0: objects the points of x, homs Π_0 of the path
/// spaces, composition Π_0 of concatenation weighted by Π_0(seed).  The
/// product preservation of Π_0 is checked on pairs of path spaces first.
WeakEnrichedCat dc_step(const Space& x, const FinOperad& seed, Mode mode, std::size_t bound);

}  // namespace omega::opweak
