#pragma once

// Group specifications, the built-in catalog, and the catalog file format.
//
// Spec grammar: factor (" x " factor)*, where factor is one of
//   cyclic:n  dihedral:2n  symmetric:n  alternating:n  gm:m
//   extraspecial2:m:plus|minus  psl2:q  sl2:q  frobenius_affine:p:k:r
//   presentation:PATH  file:PATH
//
// Catalog files are JSON: an array of records, or one record per line, each
//   {"name": ..., "degree": n, "generators": [[images...], ...], "expected_order": N}
// with expected_order optional. dump_catalog writes one record per line inside
// an array, and loading then dumping reproduces the file byte for byte.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fusionlab/perm_group.hpp"

namespace fusionlab {

struct GroupSpec {
  std::string family;
  std::vector<std::uint64_t> params;
  std::string argument;  // plus/minus, or a path
  std::vector<GroupSpec> factors;  // non-empty for products

  // Throws InvalidArgument on unknown families or bad parameters.
  static GroupSpec parse(std::string_view text);
  std::string to_string() const;
  // Short name such as "A5", "D10", "PSL2(11)", "A5xC2".
  std::string display_name() const;
};

PermGroup construct(const GroupSpec& spec);
inline PermGroup construct(std::string_view spec) { return construct(GroupSpec::parse(spec)); }

struct CatalogEntry {
  std::string name;
  std::size_t degree = 0;
  std::vector<std::vector<Point>> generators;
  std::optional<std::uint64_t> expected_order;
  PermGroup group = PermGroup::trivial(1);
};

// Every built-in group of order at most max_order, sorted by name.
std::vector<CatalogEntry> builtin_catalog(std::uint64_t max_order = 20'000);
// The spec strings behind builtin_catalog(), in catalog order.
std::vector<std::string> builtin_specs();

CatalogEntry make_entry(const std::string& name, const PermGroup& g);

// Throws ParseError with line/column for malformed text and InvalidArgument
// for bad records (non-bijective images name the duplicate point; an
// expected_order that disagrees with the computed order is fatal).
std::vector<CatalogEntry> parse_catalog(std::string_view text);
std::vector<CatalogEntry> load_catalog(const std::string& path);
std::string dump_catalog(const std::vector<CatalogEntry>& entries);
void write_catalog(const std::string& path, const std::vector<CatalogEntry>& entries);

}  // namespace fusionlab
