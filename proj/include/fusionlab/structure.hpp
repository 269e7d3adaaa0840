#pragma once

// Characteristic and relative subgroups. All subgroups live on the parent's
// degree; nothing is re-indexed.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fusionlab/perm_group.hpp"
#include "fusionlab/primes.hpp"

namespace fusionlab {

struct SubgroupChain {
  std::vector<PermGroup> terms;
  // Optional per-term annotation, e.g. "O_{2,2'}" for upper series terms.
  std::vector<std::string> labels;
};

struct DerivedSeries {
  SubgroupChain chain;  // G >= G' >= G'' >= ... ending at the first repeat
  bool is_perfect = false;
  bool is_solvable = false;
};

struct PGroupProfile {
  bool is_abelian = false;
  bool is_elementary_abelian = false;
  bool is_extraspecial = false;
  unsigned nilpotency_class = 0;
  PermGroup frattini;
  PermGroup center;
  PermGroup derived;
};

bool is_normal(const PermGroup& g, const PermGroup& h);
PermGroup join(const PermGroup& a, const PermGroup& b);
PermGroup intersection(const PermGroup& a, const PermGroup& b);

PermGroup centralizer(const PermGroup& g, const Permutation& x);
// C_G(H) for a subgroup H.
PermGroup centralizer(const PermGroup& g, const PermGroup& h);
PermGroup normalizer(const PermGroup& g, const PermGroup& h);
PermGroup center(const PermGroup& g);

PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> s);
PermGroup commutator_subgroup(const PermGroup& g, const PermGroup& a, const PermGroup& b);
PermGroup derived_subgroup(const PermGroup& g);
DerivedSeries derived_series(const PermGroup& g);
bool is_solvable(const PermGroup& g);
bool is_simple(const PermGroup& g);

// Largest normal pi-subgroup O_pi(G).
PermGroup o_pi_core(const PermGroup& g, const PrimeSet& pi);
// Preimage of O_pi(G/N) for a normal subgroup N.
PermGroup o_pi_core_over(const PermGroup& g, const PermGroup& n, const PrimeSet& pi);
// O^pi(G): the smallest normal subgroup with a pi-group quotient, generated by
// the pi'-elements.
PermGroup residual(const PermGroup& g, const PrimeSet& pi);

// 1 < O_p < O_{p,p'} < O_{p,p',p} < ... keeping only the terms where the
// series grows; stops once a p-step and the following p'-step both stall.
SubgroupChain upper_p_series(const PermGroup& g, std::uint64_t p);

// Every normal subgroup, sorted by order. Built as joins of class closures;
// throws CapExceeded once more than limits().lattice_cap subgroups appear.
std::vector<PermGroup> normal_subgroups(const PermGroup& g);
std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g);

PermGroup solvable_radical(const PermGroup& g);
PermGroup fitting_subgroup(const PermGroup& g);
PermGroup socle(const PermGroup& g);

bool is_p_group(const PermGroup& g, std::uint64_t p);
// Lower central series length; throws CapExceeded past `cap` steps.
unsigned nilpotency_class(const PermGroup& p, unsigned cap = 10);
// P' P^p, for p-groups only.
PermGroup frattini_subgroup(const PermGroup& p, std::uint64_t prime);
PGroupProfile p_group_profile(const PermGroup& p, std::uint64_t prime);

}  // namespace fusionlab
