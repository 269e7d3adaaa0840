#pragma once

#include <cstdint>
#include <vector>

#include "fusionlab/perm_group.hpp"

namespace fusionlab {

struct ConjugacyClass {
  Permutation representative;  // lexicographically least member
  std::uint64_t size = 0;
  std::uint64_t element_order = 0;
  std::vector<Permutation> members;  // sorted
};

// Classes of a group together with the element -> class map, indexed by the
// group's ElementTable positions.
struct ClassTable {
  std::vector<ConjugacyClass> classes;  // ordered by (element_order, size, representative)
  std::vector<std::uint32_t> class_of;  // element index -> class index
  std::vector<std::vector<std::uint32_t>> member_indices;
};

// Enumeration-backed class computation, memoized on the group. Throws
// CapExceeded above the enumeration cap.
const ClassTable& class_table(const PermGroup& g);
const std::vector<ConjugacyClass>& conjugacy_classes(const PermGroup& g);

// Index into conjugacy_classes(g) of the class containing x (x must lie in g).
std::uint32_t class_index(const PermGroup& g, const Permutation& x);

}  // namespace fusionlab
