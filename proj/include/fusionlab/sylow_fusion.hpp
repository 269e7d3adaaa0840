#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fusionlab/conjugacy.hpp"
#include "fusionlab/perm_group.hpp"
#include "fusionlab/primes.hpp"

namespace fusionlab {

bool is_p_element(const Permutation& x, std::uint64_t p);

// Sylow ascent from the lexicographically least p-element of largest order,
// adjoining at each step the least p-element of N_G(P) outside P. Returns the
// trivial group when p does not divide |G|.
PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p);

// x^G intersected with P, sorted.
std::vector<Permutation> class_intersect_sylow(const PermGroup& g, std::uint64_t p,
                                               const Permutation& x, const PermGroup& sylow);

// True iff any two G-conjugate elements of K are already H-conjugate.
// Requires K <= H <= G.
bool controls_fusion(const PermGroup& g, const PermGroup& h, const PermGroup& k);

// True iff H contains a Sylow p-subgroup of G and controls G-fusion in it.
bool controls_p_fusion(const PermGroup& g, const PermGroup& h, std::uint64_t p);

struct NormalComplement {
  bool exists = false;
  std::optional<PermGroup> complement;  // O_{pi'}(G) when it has full pi'-order
  std::optional<bool> hall_quotient_abelian;  // G/N abelian, i.e. G' <= N
};

// Normal pi-complement detection through the order of O_{pi'}(G). For a single
// prime the verdict is recomputed as k_p(G) == k(P) and as self-fusion control
// of P; any disagreement throws InternalError.
NormalComplement has_normal_pi_complement(const PermGroup& g, const PrimeSet& pi);

// Z_p^*(G): the preimage of Z(G/O_{p'}(G)), computed in G as the set of g whose
// commutators with every generator land in O_{p'}(G).
PermGroup z_p_star(const PermGroup& g, std::uint64_t p);

struct FusionReport {
  Permutation element;  // the least member of the class lying in P
  std::vector<Permutation> class_meet_sylow;
  bool is_isolated = false;  // |x^G meet P| == 1
  bool in_z_p_star = false;
};

// One report per nontrivial class of p-elements, against sylow_subgroup(g, p).
std::vector<FusionReport> glauberman_witnesses(const PermGroup& g, std::uint64_t p);

// An abelian Hall sigma-subgroup, if one exists: successive Sylow subgroups
// are chosen inside the centralizer of the ones already picked, which finds
// one whenever any exists.
std::optional<PermGroup> abelian_hall_subgroup(const PermGroup& g, const PrimeSet& sigma);

}  // namespace fusionlab
