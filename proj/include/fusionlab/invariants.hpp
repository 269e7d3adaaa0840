#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fusionlab/exact_ratio.hpp"
#include "fusionlab/perm_group.hpp"
#include "fusionlab/primes.hpp"

namespace fusionlab {

struct ClassCounts {
  std::uint64_t k = 0;     // all classes
  std::uint64_t k_pi = 0;  // classes of pi-elements, identity included
};

ClassCounts class_counts(const PermGroup& g, const PrimeSet& pi);
std::uint64_t class_count(const PermGroup& g);
std::uint64_t k_p(const PermGroup& g, std::uint64_t p);

// d(G) = k(G)/|G|.
ExactRatio commuting_degree(const PermGroup& g);
// d_pi(G) = k_pi(G)/|G|_pi. Primes not dividing |G| are ignored, so a
// pi'-group has d_pi = 1.
ExactRatio commuting_degree(const PermGroup& g, const PrimeSet& pi);

// Class counts of G/N for normal N, computed on cosets inside G without
// building the quotient group.
ClassCounts quotient_class_counts(const PermGroup& g, const PermGroup& n, const PrimeSet& pi);

struct PrimeInvariants {
  std::uint64_t prime = 0;
  std::uint64_t sylow_order = 1;
  std::uint64_t k_p = 1;
  std::uint64_t k_sylow = 1;  // k(P)
  ExactRatio d_p{1, 1};
  bool p_nilpotent = true;
  bool sylow_abelian = true;
};

struct InvariantRecord {
  std::string group;
  std::uint64_t order = 1;
  std::uint64_t k = 1;
  ExactRatio d{1, 1};
  std::vector<PrimeInvariants> primes;  // one per prime dividing |G|
};

InvariantRecord compute_invariants(const std::string& name, const PermGroup& g);

enum class LescotTag { Abelian, TwoCentralType, GmType, Below, Unclassifiable };

const char* to_string(LescotTag tag);

struct LescotType {
  LescotTag tag = LescotTag::Unclassifiable;
  ExactRatio d;
  // TwoCentralType: |G/Z(G)| = 4^m. GmType: the factor is G_m.
  unsigned m = 0;
  // Decomposition G = first x second when one was found (P x A or G_m x A).
  std::optional<PermGroup> first;
  std::optional<PermGroup> second;
  std::string reason;  // set for Unclassifiable
};

// Structural classification of groups with d(G) >= 1/2: abelian, P x A with
// |G'| = |P'| = 2 and G/Z(G) elementary abelian of order 4^m, or G_m x A
// with A abelian. Anything else with d >= 1/2 is reported Unclassifiable.
LescotType lescot_classify(const PermGroup& g);

// True iff h is generated by a of order 3 and b of order 2^m with
// b^-1 a b = a^-1, and |h| = 3 * 2^m.
bool is_gm_group(const PermGroup& h, unsigned* m_out = nullptr);

}  // namespace fusionlab
