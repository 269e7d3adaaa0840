#pragma once

#include <cstdint>
#include <vector>

#include "fusionlab/perm_group.hpp"

namespace fusionlab {

// Action of G on the right cosets Ng, numbered in order of their least
// element. For normal N the image is G/N and project() is the quotient map.
class CosetAction {
 public:
  CosetAction(const PermGroup& g, const PermGroup& n, bool require_normal);

  const PermGroup& image() const noexcept { return image_; }
  std::size_t index() const noexcept { return representatives_.size(); }
  // Least element of each coset.
  const std::vector<Permutation>& representatives() const noexcept { return representatives_; }
  // Coset number of x; x must lie in G.
  std::uint32_t coset_of(const Permutation& x) const;
  // The permutation of the cosets induced by right multiplication by x.
  Permutation project(const Permutation& x) const;

 private:
  const ElementTable* elements_;
  PermGroup group_;
  std::vector<std::uint32_t> label_;  // element index -> coset number
  std::vector<Permutation> representatives_;
  PermGroup image_;
};

// Throws InvalidArgument when N is not a subgroup of G, or when require_normal
// is set and N is not normal.
CosetAction coset_action(const PermGroup& g, const PermGroup& n, bool require_normal = true);

}  // namespace fusionlab
