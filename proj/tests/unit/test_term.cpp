#include <doctest.h>

#include "omega/term.hpp"

using omega::Term;

TEST_CASE("terms compare structurally and render deterministically") {
  Term a = Term::atom("a"), b = Term::atom("b");
  CHECK(Term::tuple({a, b}) == Term::tuple({a, b}));
  CHECK_FALSE(Term::tuple({a, b}) == Term::tuple({b, a}));
  CHECK(Term::hom(a, b, Term::atom("f")).str() == "{a>b:f}");
  CHECK(Term::tuple({a, b}).str() == "(a,b)");
  CHECK(Term::hom(a, b, Term::atom("f")).hash() == Term::hom(a, b, Term::atom("f")).hash());
}

TEST_CASE("size counts path lengths outside hom targets") {
  Term a = Term::atom("a");
  Term p = Term::path({a, a, a});
  CHECK(omega::pathLength(p) == 2);
  CHECK(Term::inj(p, Term::tuple({a, a})).size() == 2);
  CHECK(Term::mpath({a, Term::atom("e"), Term::atom("e"), a}).size() == 2);
  CHECK(Term::mpath({a, a}).size() == 0);
  CHECK(a.size() == 0);
}
