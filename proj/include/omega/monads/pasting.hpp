#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "omega/gcore/globset.hpp"

namespace omega::monads {

/// A planar rooted tree: a pasting-diagram shape.  A d-dimensional pasting
/// diagram is a tree of height <= d.
struct PlanarTree {
  std::vector<PlanarTree> children;

  [[nodiscard]] std::size_t edges() const;
  [[nodiscard]] std::size_t height() const;
  /// Bracket form: the leaf is "()", a root with two leaf children "(()())".
  [[nodiscard]] std::string str() const;
  /// Cuts every node above the given height.
  [[nodiscard]] PlanarTree truncated(std::size_t height) const;

  friend bool operator==(const PlanarTree&, const PlanarTree&) = default;
};

PlanarTree parse_tree(const std::string& brackets);

/// Trees of height <= height with at most maxEdges edges, in a fixed order.
std::vector<PlanarTree> enumerate_trees(std::size_t height, std::size_t maxEdges);

/// Number of globular maps from the d-dimensional globular set of the tree
/// into x.
std::size_t count_labellings(const PlanarTree& tree, std::size_t d, const gcore::GlobSet& x);

/// Number of d-cells of T_n(x) with at most `bound` edges, counted as
/// labelled trees.  Independent of the monad code.
std::size_t pasting_oracle(std::size_t n, const gcore::GlobSet& x, std::size_t d, std::size_t bound);

/// T_n(1) cut at `bound` edges: the d-cells are trees of height <= d,
/// identified by their bracket form; source and target both cut the tree to
/// height d-1.
gcore::GlobSet tn_terminal_globset(std::size_t n, std::size_t bound);

/// d-cells of T_n(x) of size <= bound, computed through the strict tower;
/// identifiers are the rendered graph-form cells.
std::vector<std::string> enumerate_tn_cells(std::size_t n, const gcore::GlobSet& x, std::size_t d, std::size_t bound);

}  // namespace omega::monads
