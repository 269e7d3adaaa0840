#include <doctest.h>

#include <random>

#include "fusionlab/catalog.hpp"
#include "fusionlab/conjugacy.hpp"
#include "fusionlab/coset_action.hpp"
#include "fusionlab/families.hpp"
#include "fusionlab/invariants.hpp"
#include "fusionlab/structure.hpp"
#include "fusionlab/sylow_fusion.hpp"
#include "oracle/compare.hpp"

using namespace fusionlab;

namespace {
Permutation random_perm(std::mt19937_64& rng, std::size_t n) {
  std::vector<Point> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Point>(i);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

// Random subgroups of S7: two or three random generators, sometimes squared
// or cubed to land in smaller groups.
std::vector<PermGroup> random_groups(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<PermGroup> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<Permutation> gens;
    const int n = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n; ++i) gens.push_back(random_perm(rng, 7).pow(1 + static_cast<std::int64_t>(rng() % 4)));
    PermGroup g(7, gens);
    if (g.order() <= 2520) out.push_back(g);
  }
  return out;
}
}  // namespace

TEST_CASE("class equation and orbit-stabilizer on random groups") {
  for (const auto& g : random_groups(11, 40)) {
    std::uint64_t total = 0;
    for (const auto& c : conjugacy_classes(g)) {
      total += c.size;
      CHECK(c.size * centralizer(g, c.representative).order() == g.order());
      CHECK(c.members.front() == c.representative);
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("Lagrange and Sylow on random groups") {
  for (const auto& g : random_groups(12, 40)) {
    for (auto p : prime_divisors(g.order())) {
      auto P = sylow_subgroup(g, p);
      CHECK(P.order() == p_part(g.order(), p));
      auto n = normalizer(g, P);
      CHECK(g.order() % n.order() == 0);
      CHECK((g.order() / n.order()) % p == 1 % p);
      CHECK(is_normal(n, P));
    }
    for (const auto& n : normal_subgroups(g)) CHECK(g.order() % n.order() == 0);
  }
}

TEST_CASE("class counts on random groups") {
  for (const auto& g : random_groups(13, 30)) {
    for (auto p : prime_divisors(g.order())) {
      auto P = sylow_subgroup(g, p);
      const auto kp = k_p(g, p);
      const auto kP = class_count(P);
      CHECK(kp <= kP);
      CHECK((kp == kP) == has_normal_pi_complement(g, PrimeSet{p}).exists);
      const auto d = commuting_degree(g, PrimeSet{p});
      CHECK(d <= ExactRatio(1, 1));
      CHECK(commuting_degree(g) <= d);
    }
  }
}

TEST_CASE("coset projections are homomorphisms with kernel N") {
  for (const auto& g : random_groups(14, 15)) {
    for (const auto& n : normal_subgroups(g)) {
      CosetAction action(g, n, true);
      CHECK(action.image().order() * n.order() == g.order());
      for (const auto& x : g.generators()) {
        for (const auto& y : g.generators()) CHECK(action.project(x * y) == action.project(x) * action.project(y));
      }
      for (const auto& x : n.generators()) CHECK(action.project(x).is_identity());
    }
  }
}

TEST_CASE("random groups agree with the oracle") {
  for (const auto& g : random_groups(15, 25)) {
    if (g.order() > 200) continue;
    CHECK(oracle::compare_with_engine("random", g).empty());
  }
}

TEST_CASE("structure identities on random groups") {
  for (const auto& g : random_groups(16, 25)) {
    auto z = center(g);
    CHECK(is_normal(g, z));
    CHECK(z.is_abelian());
    auto d = derived_subgroup(g);
    CHECK(same_group(d, commutator_subgroup(g, g, g)));
    CHECK(coset_action(g, d).image().is_abelian());
    CHECK(fitting_subgroup(g).is_subgroup_of(solvable_radical(g)));
    CHECK((socle(g).order() > 1) == (g.order() > 1));
    for (auto p : prime_divisors(g.order())) {
      auto zs = z_p_star(g, p);
      CHECK(is_normal(g, zs));
      CHECK(z.is_subgroup_of(zs));
    }
  }
}
