#pragma once

// Engine results against the brute-force oracle for one group. Returns an
// empty string on full agreement, otherwise the first mismatch.

#include <string>

#include "brute_force.hpp"
#include "fusionlab/conjugacy.hpp"
#include "fusionlab/invariants.hpp"
#include "fusionlab/perm_group.hpp"
#include "fusionlab/primes.hpp"
#include "fusionlab/structure.hpp"
#include "fusionlab/sylow_fusion.hpp"

namespace oracle {

inline Subset to_subset(const Group& G, const fusionlab::PermGroup& h) {
  Subset s;
  for (const auto& x : h.elements()) {
    auto img = x.images();
    s.insert(G.index(Perm(img.begin(), img.end())));
  }
  return s;
}

inline std::string compare_with_engine(const std::string& name, const fusionlab::PermGroup& g) {
  using namespace fusionlab;
  std::vector<Perm> gens;
  for (const auto& x : g.generators()) gens.emplace_back(x.images().begin(), x.images().end());
  const Group G = closure(g.degree(), gens);
  if (G.el.size() != g.order()) return name + ": order " + std::to_string(g.order()) + " vs " + std::to_string(G.el.size());

  // Classes as a set of element sets.
  std::set<Subset> engine_classes;
  for (const auto& c : conjugacy_classes(g)) {
    Subset s;
    for (const auto& x : c.members) s.insert(G.index(Perm(x.images().begin(), x.images().end())));
    if (s.size() != c.size) return name + ": class size field disagrees with members";
    engine_classes.insert(std::move(s));
  }
  auto naive = classes(G);
  if (engine_classes != std::set<Subset>(naive.begin(), naive.end())) return name + ": conjugacy classes differ";

  // Centralizer of every element.
  for (std::uint32_t i = 0; i < G.el.size(); ++i) {
    Permutation x(G.el[i]);
    if (to_subset(G, centralizer(g, x)) != centralizer(G, i)) {
      return name + ": centralizer of " + x.to_cycle_string() + " differs";
    }
  }
  if (to_subset(G, center(g)) != [&] {
        Subset z;
        for (std::uint32_t i = 0; i < G.el.size(); ++i) {
          if (centralizer(G, i).size() == G.el.size()) z.insert(i);
        }
        return z;
      }()) {
    return name + ": center differs";
  }

  for (auto p : prime_divisors(g.order())) {
    const auto sylows = all_sylows(G, p);
    const auto P = to_subset(G, sylow_subgroup(g, p));
    if (!sylows.count(P)) return name + ": engine Sylow " + std::to_string(p) + "-subgroup is not a Sylow subgroup";
    if ((sylows.size() - 1) % p != 0) return name + ": oracle Sylow count not 1 mod p";
    if (sylows.size() != g.order() / normalizer(g, sylow_subgroup(g, p)).order()) {
      return name + ": Sylow count differs from |G:N(P)|";
    }
    const auto kp = k_p(G, p);
    if (kp != fusionlab::k_p(g, p) || kp != k_p_burnside(G, p)) return name + ": k_p differs";
    if (p_nilpotent(G, p) != has_normal_pi_complement(g, PrimeSet{p}).exists) {
      return name + ": p-nilpotence differs at p=" + std::to_string(p);
    }
  }
  return {};
}

}  // namespace oracle
