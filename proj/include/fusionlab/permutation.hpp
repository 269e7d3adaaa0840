#pragma once

// Permutations of {0, ..., n-1} stored as image arrays.
//
// Products are read left to right: (p * q)(i) = q(p(i)), so p acts first.
// Conjugation and commutators follow the same right-action convention:
// x^g = g^-1 x g and [a, b] = a^-1 b^-1 a b.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fusionlab {

using Point = std::uint32_t;

class Permutation {
 public:
  Permutation() = default;

  // Validates that images is a bijection; the error names the first point
  // hit twice.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  // Cycle notation, e.g. from_cycles(5, {{0, 1, 2}, {3, 4}}).
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  std::uint64_t order() const;
  Permutation pow(std::int64_t exponent) const;
  // Smallest point moved, or degree() for the identity.
  Point first_moved_point() const noexcept;

  // "(0 1 2)(3 4)", "()" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Lexicographic on the image array.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  friend Permutation compose(const Permutation& p, const Permutation& q);

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

// p first, then q. Throws DegreeMismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

// g^-1 x g
Permutation conjugate(const Permutation& x, const Permutation& g);
// a^-1 b^-1 a b
Permutation commutator(const Permutation& a, const Permutation& b);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace fusionlab
