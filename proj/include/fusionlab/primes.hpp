#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace fusionlab {

bool is_prime(std::uint64_t n);

// Prime factors of n in increasing order, without multiplicity.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

// If n = p^k for a prime p and k >= 1, returns {p, k}; otherwise {0, 0}.
struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
};
PrimePower as_prime_power(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exponent);

/// A finite set of primes, kept sorted and duplicate free.
class PrimeSet {
 public:
  PrimeSet() = default;
  PrimeSet(std::initializer_list<std::uint64_t> primes);
  explicit PrimeSet(std::vector<std::uint64_t> primes);

  // "2,3,5"; whitespace tolerated. Throws InvalidArgument on a non-prime.
  static PrimeSet parse(std::string_view text);

  bool contains(std::uint64_t p) const;
  bool empty() const noexcept { return primes_.empty(); }
  std::size_t size() const noexcept { return primes_.size(); }
  std::uint64_t smallest() const { return primes_.front(); }
  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
  auto begin() const noexcept { return primes_.begin(); }
  auto end() const noexcept { return primes_.end(); }

  // Primes dividing n that are not in this set.
  PrimeSet complement_in(std::uint64_t n) const;
  PrimeSet intersect_divisors(std::uint64_t n) const;

  // True iff every prime factor of n lies in the set (1 is a pi-number).
  bool is_pi_number(std::uint64_t n) const;
  // The pi-part |n|_pi.
  std::uint64_t part(std::uint64_t n) const;

  // "{2,3}"
  std::string to_string() const;

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;
  friend auto operator<=>(const PrimeSet&, const PrimeSet&) = default;

 private:
  std::vector<std::uint64_t> primes_;
};

}  // namespace fusionlab
