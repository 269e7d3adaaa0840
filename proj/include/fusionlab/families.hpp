#pragma once

// Permutation representations of the named group families.

#include <cstdint>
#include <span>

#include "fusionlab/perm_group.hpp"

namespace fusionlab {

// n-cycle on n points.
PermGroup cyclic_group(std::uint64_t n);
// Dihedral group of the given order 2n: natural action on n points for n >= 3,
// C2 on 2 points for n = 1, V4 on 4 points for n = 2.
PermGroup dihedral_group(std::uint64_t order);
PermGroup symmetric_group(std::uint64_t n);
PermGroup alternating_group(std::uint64_t n);
// Factors act on disjoint blocks of points, in order.
PermGroup direct_product(std::span<const PermGroup> factors);
// <a, b | a^3, b^(2^m), a^b = a^-1>, regular action on its 3 * 2^m cosets.
PermGroup gm_group(unsigned m);
// Quaternion group of order 8, regular action.
PermGroup quaternion_group();
// Extraspecial 2-group of order 2^(1+2m). Plus type: central product of m
// copies of D8; minus type: the first copy replaced by Q8.
PermGroup extraspecial2_group(unsigned m, bool plus);
// PSL2(q) on the q+1 points of the projective line. (1:y) is point y and
// (0:1) is point q; matrices act on row vectors.
PermGroup psl2_group(std::uint64_t q);
// SL2(q) on the q^2-1 nonzero row vectors, (x, y) numbered x*q + y - 1.
PermGroup sl2_group(std::uint64_t q);
// GF(p^k) acted on by translations and by multiplication with an element of
// order r, for a prime r != p dividing p^k - 1.
PermGroup frobenius_affine_group(std::uint64_t p, unsigned k, std::uint64_t r);

}  // namespace fusionlab
