#pragma once

#include <cstdint>
#include <vector>

#include "fusionlab/perm_group.hpp"
#include "fusionlab/presentation.hpp"

namespace fusionlab {

// Completed coset table over the trivial subgroup. Row 0 is the subgroup
// itself; rows are numbered in order of first definition. Column 2i is
// generator i, column 2i+1 its inverse.
struct CosetTable {
  std::vector<std::vector<std::uint32_t>> rows;

  std::size_t size() const noexcept { return rows.size(); }
  // Every relator traces back to its starting row, and each generator column
  // is inverse to its partner.
  bool is_consistent(const Presentation& p) const;
};

struct EnumerationResult {
  std::uint64_t order = 0;
  CosetTable table;
  PermGroup regular;  // generators acting on the rows by right multiplication
};

// HLT coset enumeration with coincidence processing. Throws CapExceeded when
// more than max_cosets rows would be live at once; that outcome says nothing
// about whether the group is finite.
EnumerationResult todd_coxeter(const Presentation& p, std::size_t max_cosets = 100'000);

}  // namespace fusionlab
