#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "fusionlab/permutation.hpp"

namespace fusionlab {

struct EngineLimits {
  // Largest group whose elements may be listed explicitly.
  std::uint64_t enumeration_cap = 200'000;
  // Largest order a stabilizer chain may certify.
  std::uint64_t order_cap = 100'000'000;
  // Largest normal-subgroup lattice that will be built.
  std::size_t lattice_cap = 4096;
};

// Sorted element list with O(1) lookup of an element's position.
class ElementTable {
 public:
  explicit ElementTable(std::vector<Permutation> sorted_elements);

  std::size_t size() const noexcept { return elements_.size(); }
  const Permutation& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  std::optional<std::uint32_t> find(const Permutation& x) const;
  // Like find() but throws InternalError when x is absent.
  std::uint32_t index_of(const Permutation& x) const;

 private:
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
};

struct ClassTable;  // conjugacy.hpp

namespace detail {

struct StabilizerLevel {
  Point base_point = 0;
  std::vector<std::size_t> generators;  // indices into Chain::strong
  std::vector<Point> orbit;
  std::vector<std::int32_t> orbit_position;  // by point, -1 when outside the orbit
  std::vector<Permutation> transversal;      // base_point^transversal[i] == orbit[i]
  std::vector<Permutation> transversal_inverse;
  std::vector<std::size_t> processed;  // per generator, orbit prefix already checked
};

struct Chain {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> strong;
  std::vector<StabilizerLevel> levels;
  std::uint64_t order = 1;
};

struct GroupCache {
  std::once_flag elements_once;
  std::shared_ptr<const ElementTable> elements;
  std::once_flag classes_once;
  std::shared_ptr<const ClassTable> classes;
};

}  // namespace detail

/// A permutation group given by generators, carrying a stabilizer chain
/// (base and strong generating set) that certifies its order and answers
/// membership. Values are immutable and cheap to copy; copies share the
/// chain and the lazily filled element/class caches, which are guarded by
/// std::call_once.
class PermGroup {
 public:
  // Throws DegreeMismatch, InvalidArgument (degree 0) or CapExceeded when the
  // order passes limits.order_cap.
  PermGroup(std::size_t degree, std::vector<Permutation> generators, EngineLimits limits = {});

  static PermGroup trivial(std::size_t degree, EngineLimits limits = {});

  std::size_t degree() const noexcept { return chain_->degree; }
  std::uint64_t order() const noexcept { return chain_->order; }
  const std::vector<Permutation>& generators() const noexcept { return chain_->generators; }
  const std::vector<Permutation>& strong_generators() const noexcept { return chain_->strong; }
  std::vector<Point> base() const;
  std::size_t base_length() const noexcept { return chain_->levels.size(); }
  std::span<const Point> fundamental_orbit(std::size_t level) const;
  const EngineLimits& limits() const noexcept { return limits_; }

  bool is_trivial() const noexcept { return order() == 1; }
  // Sifts x through the chain. Throws DegreeMismatch.
  bool contains(const Permutation& x) const;
  bool contains_all(std::span<const Permutation> xs) const;
  bool is_subgroup_of(const PermGroup& other) const;
  bool is_abelian() const;

  // The group generated by this one together with extra, extending the
  // existing chain rather than rebuilding it.
  PermGroup with_generators(std::span<const Permutation> extra) const;

  // Sorted lexicographically by image array. Throws CapExceeded above
  // limits.enumeration_cap.
  const ElementTable& element_table() const;
  const std::vector<Permutation>& elements() const { return element_table().elements(); }

  detail::GroupCache& cache() const { return *cache_; }

  // Same set of elements (generators may differ).
  friend bool same_group(const PermGroup& a, const PermGroup& b);

 private:
  PermGroup(std::shared_ptr<const detail::Chain> chain, EngineLimits limits);

  std::shared_ptr<const detail::Chain> chain_;
  EngineLimits limits_;
  std::shared_ptr<detail::GroupCache> cache_;
};

// membership_test from the module contract.
inline bool membership_test(const PermGroup& g, const Permutation& x) { return g.contains(x); }

// Builds the subgroup generated by the given elements, picking generators
// greedily (an element is kept only if it is not already generated).
PermGroup subgroup_from_elements(std::size_t degree, std::span<const Permutation> elements,
                                 EngineLimits limits = {});

}  // namespace fusionlab
