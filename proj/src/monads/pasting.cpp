#include "omega/monads/pasting.hpp"

#include <algorithm>
#include <functional>

#include "omega/gcore/ngraph.hpp"
#include "omega/monads/monad.hpp"

namespace omega::monads {

using gcore::GlobSet;

std::size_t PlanarTree::edges() const {
  std::size_t e = 0;
  for (const auto& c : children) e += 1 + c.edges();
  return e;
}

std::size_t PlanarTree::height() const {
  std::size_t h = 0;
  for (const auto& c : children) h = std::max(h, 1 + c.height());
  return h;
}

std::string PlanarTree::str() const {
  std::string s = "(";
  for (const auto& c : children) s += c.str();
  return s + ")";
}

PlanarTree PlanarTree::truncated(std::size_t height) const {
  PlanarTree t;
  if (height == 0) return t;
  for (const auto& c : children) t.children.push_back(c.truncated(height - 1));
  return t;
}

namespace {

PlanarTree parseAt(const std::string& s, std::size_t& i) {
  if (i >= s.size() || s[i] != '(') throw gcore::ParseError("malformed pasting diagram '" + s + "'");
  ++i;
  PlanarTree t;
  while (i < s.size() && s[i] == '(') t.children.push_back(parseAt(s, i));
  if (i >= s.size() || s[i] != ')') throw gcore::ParseError("malformed pasting diagram '" + s + "'");
  ++i;
  return t;
}

/// Forests (ordered child lists) of trees of height <= h using at most
/// maxEdges edges in total, counting the edge to each child.
void forests(std::size_t h, std::size_t maxEdges, std::vector<PlanarTree>& prefix, std::vector<PlanarTree>& out) {
  PlanarTree t;
  t.children = prefix;
  out.push_back(t);
  if (maxEdges == 0) return;
  for (auto& child : enumerate_trees(h, maxEdges - 1)) {
    std::size_t cost = 1 + child.edges();
    prefix.push_back(std::move(child));
    forests(h, maxEdges - cost, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

PlanarTree parse_tree(const std::string& brackets) {
  std::size_t i = 0;
  PlanarTree t = parseAt(brackets, i);
  if (i != brackets.size()) throw gcore::ParseError("trailing characters in '" + brackets + "'");
  return t;
}

std::vector<PlanarTree> enumerate_trees(std::size_t height, std::size_t maxEdges) {
  if (height == 0) return {PlanarTree{}};
  std::vector<PlanarTree> prefix, out;
  forests(height - 1, maxEdges, prefix, out);
  return out;
}

namespace {

struct ShapeCell {
  std::size_t dim;
  std::size_t src, tgt;  // indices into the cell list; unused in dimension 0
};

/// Cells of the globular set of a d-dimensional pasting diagram.  Below
/// dimension d, each node at height h contributes the gaps between its
/// children as h-cells; nodes at height d are the d-cells.  A gap of the
/// node sitting as child c of p runs from gap c to gap c+1 of p.
void shapeCells(const PlanarTree& node, std::size_t h, std::size_t d, std::size_t s, std::size_t t,
                std::vector<ShapeCell>& out) {
  if (h == d) {
    out.push_back({h, s, t});
    return;
  }
  std::size_t first = out.size();
  for (std::size_t g = 0; g <= node.children.size(); ++g) out.push_back({h, s, t});
  for (std::size_t c = 0; c < node.children.size(); ++c)
    shapeCells(node.children[c], h + 1, d, first + c, first + c + 1, out);
}

}  // namespace

std::size_t count_labellings(const PlanarTree& tree, std::size_t d, const GlobSet& x) {
  if (d > x.n) return 0;
  std::vector<ShapeCell> shape;
  shapeCells(tree, 0, d, 0, 0, shape);
  // Assign cells in order of dimension so boundaries are fixed first.
  std::vector<std::size_t> order(shape.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return shape[a].dim < shape[b].dim; });
  std::vector<const std::string*> image(shape.size(), nullptr);
  std::function<std::size_t(std::size_t)> go = [&](std::size_t pos) -> std::size_t {
    if (pos == order.size()) return 1;
    const auto& cell = shape[order[pos]];
    std::size_t total = 0;
    for (const auto& candidate : x.cells[cell.dim]) {
      if (cell.dim > 0 && (x.source(cell.dim, candidate) != *image[cell.src] ||
                           x.target(cell.dim, candidate) != *image[cell.tgt]))
        continue;
      image[order[pos]] = &candidate;
      total += go(pos + 1);
    }
    image[order[pos]] = nullptr;
    return total;
  };
  return go(0);
}

std::size_t pasting_oracle(std::size_t n, const GlobSet& x, std::size_t d, std::size_t bound) {
  if (n > kMaxTowerDepth) throw UnsupportedDepth("pasting oracle supports n <= 3");
  if (d > n || x.n < n) return 0;
  std::size_t total = 0;
  for (const auto& t : enumerate_trees(d, bound)) total += count_labellings(t, d, x);
  return total;
}

GlobSet tn_terminal_globset(std::size_t n, std::size_t bound) {
  GlobSet g = GlobSet::empty(n);
  for (std::size_t d = 0; d <= n; ++d) {
    for (const auto& t : enumerate_trees(d, bound)) {
      if (d == 0)
        g.addCell(0, t.str());
      else {
        auto b = t.truncated(d - 1).str();
        g.addCell(d, t.str(), b, b);
      }
    }
  }
  return g;
}

std::vector<std::string> enumerate_tn_cells(std::size_t n, const GlobSet& x, std::size_t d, std::size_t bound) {
  if (n > kMaxTowerDepth) throw UnsupportedDepth("strict tower depth " + std::to_string(n) + " exceeds 3");
  if (x.n != n) throw gcore::DimensionError("input is not " + std::to_string(n) + "-dimensional");
  if (d > n) throw gcore::DimensionError("cell dimension exceeds n");
  auto tower = strict_tower(n);
  Obj g = gcore::globset_to_ngraph(x);
  Obj tx = tower[n].monad->apply(g, bound);
  return renderAll(gcore::cells(tx, d, bound));
}

}  // namespace omega::monads
