#include <doctest.h>

#include "fusionlab/catalog.hpp"
#include "fusionlab/coset_action.hpp"
#include "fusionlab/families.hpp"
#include "fusionlab/invariants.hpp"
#include "fusionlab/structure.hpp"
#include "fusionlab/sylow_fusion.hpp"

using namespace fusionlab;

TEST_CASE("Sylow subgroups have full p-part order") {
  for (const auto& e : builtin_catalog(2000)) {
    for (auto p : prime_divisors(e.group.order())) {
      auto P = sylow_subgroup(e.group, p);
      CHECK_MESSAGE(P.order() == p_part(e.group.order(), p), e.name << " p=" << p);
      CHECK(P.is_subgroup_of(e.group));
    }
  }
  CHECK(sylow_subgroup(symmetric_group(4), 5).is_trivial());
}

TEST_CASE("fusion control") {
  auto a4 = alternating_group(4);
  auto P = sylow_subgroup(a4, 2);
  CHECK_FALSE(controls_fusion(a4, P, P));  // the three involutions fuse
  CHECK(controls_fusion(a4, normalizer(a4, P), P));
  CHECK(controls_p_fusion(a4, a4, 2));
  auto s3 = symmetric_group(3);
  CHECK(controls_fusion(s3, sylow_subgroup(s3, 2), sylow_subgroup(s3, 2)));
  auto d10 = dihedral_group(10);
  auto P5 = sylow_subgroup(d10, 5);
  CHECK_FALSE(controls_p_fusion(d10, P5, 5));
  CHECK(controls_p_fusion(d10, normalizer(d10, P5), 5));
  CHECK(class_intersect_sylow(d10, 5, P5.generators()[0], P5).size() == 2);
}

TEST_CASE("normal complements") {
  auto s4 = symmetric_group(4);
  CHECK_FALSE(has_normal_pi_complement(s4, PrimeSet{2}).exists);
  auto nc = has_normal_pi_complement(s4, PrimeSet{3});
  CHECK_FALSE(nc.exists);
  auto s3 = symmetric_group(3);
  auto two = has_normal_pi_complement(s3, PrimeSet{2});
  REQUIRE(two.exists);
  CHECK(two.complement->order() == 3);
  CHECK(*two.hall_quotient_abelian);
  auto a4 = has_normal_pi_complement(alternating_group(4), PrimeSet{3});
  REQUIRE(a4.exists);
  CHECK(a4.complement->order() == 4);
  auto mixed = has_normal_pi_complement(construct("cyclic:5 x symmetric:3"), PrimeSet{2, 5});
  REQUIRE(mixed.exists);
  CHECK(mixed.complement->order() == 3);
  // Abelian Hall {2,5}-subgroup: C2 x C5.
  CHECK(*mixed.hall_quotient_abelian);
}

TEST_CASE("three normal p-complement tests agree on the catalog") {
  // has_normal_pi_complement throws InternalError on disagreement.
  for (const auto& e : builtin_catalog(2000)) {
    for (auto p : prime_divisors(e.group.order())) {
      auto nc = has_normal_pi_complement(e.group, PrimeSet{p});
      auto P = sylow_subgroup(e.group, p);
      CHECK((k_p(e.group, p) == class_count(P)) == nc.exists);
      CHECK(controls_fusion(e.group, P, P) == nc.exists);
    }
  }
}

TEST_CASE("Z*_p matches the preimage of the center of G/O_p'") {
  for (const auto& e : builtin_catalog(400)) {
    for (auto p : prime_divisors(e.group.order())) {
      auto direct = z_p_star(e.group, p);
      auto core = o_pi_core(e.group, PrimeSet{p}.complement_in(e.group.order()));
      CosetAction action(e.group, core, true);
      auto zq = center(action.image());
      std::vector<Permutation> pre;
      for (const auto& x : e.group.elements()) {
        if (zq.contains(action.project(x))) pre.push_back(x);
      }
      CHECK_MESSAGE(direct.order() == pre.size(), e.name << " p=" << p);
      for (const auto& x : pre) CHECK(direct.contains(x));
    }
  }
  CHECK(z_p_star(alternating_group(5), 2).is_trivial());
  CHECK(z_p_star(quaternion_group(), 2).order() == 2);
  CHECK(z_p_star(symmetric_group(3), 2).order() == 6);
}

TEST_CASE("isolated involutions lie in Z*") {
  // In SL2(q) the central involution is the only involution and is isolated.
  auto g = construct("sl2:5");
  auto reports = glauberman_witnesses(g, 2);
  std::size_t isolated = 0;
  for (const auto& r : reports) {
    if (r.is_isolated) {
      ++isolated;
      CHECK(r.in_z_p_star);
      CHECK(r.element.order() == 2);
    }
  }
  CHECK(isolated == 1);
  for (const auto& r : glauberman_witnesses(alternating_group(5), 2)) CHECK_FALSE(r.is_isolated);
}

TEST_CASE("abelian Hall subgroups") {
  auto a5 = alternating_group(5);
  CHECK(abelian_hall_subgroup(a5, PrimeSet{2})->order() == 4);
  CHECK_FALSE(abelian_hall_subgroup(a5, PrimeSet{2, 3}).has_value());
  CHECK_FALSE(abelian_hall_subgroup(a5, PrimeSet{3, 5}).has_value());
  auto g = construct("cyclic:3 x dihedral:10");
  auto h = abelian_hall_subgroup(g, PrimeSet{3, 5});
  REQUIRE(h.has_value());
  CHECK(h->order() == 15);
  CHECK(h->is_abelian());
}
