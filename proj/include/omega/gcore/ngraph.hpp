#pragma once

#include <optional>
#include <string>

#include "omega/gcore/base.hpp"
#include "omega/gcore/globset.hpp"

namespace omega::gcore {

/// n-globular set as an n-fold enriched graph.  The 0-cells become objects;
/// the (d+1)-cells from x to y become the d-cells of hom(x, y).  Every cell
/// keeps its identifier as an atom.
Obj globset_to_ngraph(const GlobSet& g);

/// Cells of an n-graph with identifiers taken from the rendered graph form,
/// e.g. the 2-cell a : f => g between x and y becomes "{x>y:{f>g:a}}".  This
/// fixes the choice of coproduct the conversion needs.
GlobSet ngraph_to_globset(const Obj& h, std::size_t budget = kUnbounded);

/// The relabelling taking each cell of g to its identifier in
/// ngraph_to_globset(globset_to_ngraph(g)).
GlobMap roundtrip_witness(const GlobSet& g);

/// Ok iff f is a globular map that is bijective in every dimension.
std::optional<std::string> check_isomorphism(const GlobSet& from, const GlobSet& to, const GlobMap& f);

}  // namespace omega::gcore
