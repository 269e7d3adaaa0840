#include <doctest.h>

#include "fusionlab/catalog.hpp"
#include "fusionlab/families.hpp"
#include "oracle/compare.hpp"

using namespace fusionlab;

TEST_CASE("oracle self-check on known groups") {
  auto G = oracle::closure(4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
  CHECK(G.el.size() == 24);
  CHECK(oracle::classes(G).size() == 5);
  CHECK(oracle::all_sylows(G, 2).size() == 3);
  CHECK(oracle::all_sylows(G, 3).size() == 4);
  CHECK(oracle::k_p(G, 2) == 4);
  CHECK(oracle::k_p_burnside(G, 2) == 4);
  CHECK_FALSE(oracle::p_nilpotent(G, 2));
  auto C6 = oracle::closure(6, {{1, 2, 3, 4, 5, 0}});
  CHECK(oracle::p_nilpotent(C6, 2));
}

TEST_CASE("engine equals the oracle on catalog groups of order at most 120") {
  for (const auto& e : builtin_catalog(120)) {
    CHECK_MESSAGE(oracle::compare_with_engine(e.name, e.group).empty(), oracle::compare_with_engine(e.name, e.group));
  }
}

TEST_CASE("engine equals the oracle on transitive groups outside the catalog") {
  CHECK(oracle::compare_with_engine("Frob(19,1,3)", construct("frobenius_affine:19:1:3")).empty());
  CHECK(oracle::compare_with_engine("D16", dihedral_group(16)).empty());
  CHECK(oracle::compare_with_engine("C2xA4", construct("cyclic:2 x alternating:4")).empty());
}
