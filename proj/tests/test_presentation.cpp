#include <doctest.h>

#include "fusionlab/errors.hpp"
#include "fusionlab/finite_field.hpp"
#include "fusionlab/invariants.hpp"
#include "fusionlab/presentation.hpp"
#include "fusionlab/todd_coxeter.hpp"

using namespace fusionlab;

TEST_CASE("finite field axioms") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121}) {
    FiniteField f(q);
    CHECK(f.order() == q);
    std::uint64_t n = 1;
    for (auto x = f.primitive_element(); x != 1; x = f.mul(x, f.primitive_element())) ++n;
    CHECK_MESSAGE(n == q - 1, "q=" << q);
    for (std::uint32_t a = 0; a < q; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (std::uint32_t b = 0; b < q; b += 3) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (std::uint32_t c = 0; c < q; c += 5) {
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
  CHECK_THROWS_AS(FiniteField(6), InvalidArgument);
  CHECK(FiniteField(7).primitive_element() == 3);
}

TEST_CASE("presentation parsing") {
  auto p = parse_presentation("# dihedral\ngens: r s\nrels: r^4, s^2, (r s)^2\n");
  CHECK(p.generators == std::vector<std::string>{"r", "s"});
  CHECK(p.relators.size() == 3);
  CHECK(p.relators[2] == Word{0, 2, 0, 2});
  auto q = parse_presentation("gens: a b\nrels: b^-1 a b = a^-1\n");
  CHECK(q.relators[0] == Word{3, 0, 2, 0});
  CHECK(parse_presentation(p.to_string()).relators == p.relators);
}

TEST_CASE("presentation errors carry positions") {
  try {
    parse_presentation("gens: a\nrels: a^3, c\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 12);
  }
  CHECK_THROWS_AS(parse_presentation("gens: a\nrels: a^0\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a\nrels: a^x\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a a\nrels: a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a\nrels: a, ,a\n"), ParseError);
}

TEST_CASE("coset enumeration of G_m") {
  for (unsigned m = 1; m <= 6; ++m) {
    auto p = gm_presentation(m);
    auto r = todd_coxeter(p);
    CHECK(r.order == 3u << m);
    CHECK(r.table.is_consistent(p));
    CHECK(r.regular.order() == r.order);
    CHECK(commuting_degree(r.regular) == ExactRatio(1, 2));
  }
}

TEST_CASE("coset enumeration with coincidences") {
  // <a, b | a^2, b^3, (ab)^5> = A5
  auto a5 = todd_coxeter(parse_presentation("gens: a b\nrels: a^2, b^3, (a b)^5\n"));
  CHECK(a5.order == 60);
  // The relators force a = b = 1.
  auto trivial = todd_coxeter(parse_presentation("gens: a b\nrels: a b^-1, a^2 b^-3\n"));
  CHECK(trivial.order == 1);
  auto q8 = todd_coxeter(parse_presentation("gens: i j\nrels: i^4, i^2 = j^2, j^-1 i j i\n"));
  CHECK(q8.order == 8);
  CHECK_THROWS_AS(todd_coxeter(parse_presentation("gens: a b\nrels: a^2\n"), 1000), CapExceeded);
}
