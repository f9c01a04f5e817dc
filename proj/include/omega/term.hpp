#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace omega {

/// Immutable, structurally compared labelled tree.
///
/// Every cell, element and identifier that flows between the modules is a
/// Term.  Nodes are shared, so copies are cheap and values may be handed to
/// other threads freely.
///
/// Cells of an enriched graph are written in "graph form": a 0-cell is an
/// object term and a (j+1)-cell is `hom(a, b, c)` with `c` a j-cell of the
/// hom-object between `a` and `b`.  Products and coproducts only ever wrap
/// 0-cells of some level (`tuple(...)`, `inj(tag, x)`), so a cell has exactly
/// one spelling.
class Term {
 public:
  enum class Kind : unsigned char {
    Atom,   // named generator
    Hom,    // hom(a, b, c)
    Tuple,  // product element
    Inj,    // inj(tag, x): coproduct injection
    Path,   // path(a0, ..., ak): index of a free-category coproduct summand
    Seq,    // finite string (free monoid elements)
    Space,  // mpath(x, e1, ..., ek, y): a path in a space model
    Class,  // cls(rep): a path component, named by its representative
  };

  Term();  // the empty tuple
  static Term atom(std::string name);
  static Term hom(Term a, Term b, Term c);
  static Term tuple(std::vector<Term> parts);
  static Term inj(Term tag, Term x);
  static Term path(std::vector<Term> objects);
  static Term seq(std::vector<Term> parts);
  static Term mpath(std::vector<Term> parts);
  static Term cls(Term rep);

  [[nodiscard]] Kind kind() const noexcept;
  [[nodiscard]] const std::string& name() const noexcept;
  [[nodiscard]] const std::vector<Term>& args() const noexcept;
  [[nodiscard]] const Term& arg(std::size_t i) const;
  [[nodiscard]] std::size_t arity() const noexcept { return args().size(); }
  [[nodiscard]] bool is(Kind k) const noexcept { return kind() == k; }

  /// Number of generating cells used: the sum of the lengths of every
  /// free-category summand index reachable without entering the target side
  /// of a hom cell.  A model path counts its edges.
  [[nodiscard]] std::size_t size() const noexcept;
  [[nodiscard]] std::size_t hash() const noexcept;

  /// Deterministic rendering; used verbatim as a cell identifier.
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Term& x, const Term& y) noexcept;
  friend std::strong_ordering operator<=>(const Term& x, const Term& y) noexcept;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node);
  static Term make(Kind kind, std::string name, std::vector<Term> args);
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept { return t.hash(); }
};

/// Length of a free-category summand index (`path` term); 0 for anything else.
std::size_t pathLength(const Term& tag) noexcept;

std::vector<std::string> renderAll(const std::vector<Term>& terms);

}  // namespace omega
