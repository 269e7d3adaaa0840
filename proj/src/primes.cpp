#include "fusionlab/primes.hpp"

#include <algorithm>
#include <charconv>

#include "fusionlab/errors.hpp"

namespace fusionlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  if (n == 0 || p < 2) return r;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

PrimePower as_prime_power(std::uint64_t n) {
  auto divs = prime_divisors(n);
  if (divs.size() != 1) return {};
  unsigned k = 0;
  while (n > 1) {
    n /= divs[0];
    ++k;
  }
  return {divs[0], k};
}

std::uint64_t ipow(std::uint64_t base, unsigned exponent) {
  std::uint64_t r = 1;
  while (exponent-- > 0) r *= base;
  return r;
}

PrimeSet::PrimeSet(std::initializer_list<std::uint64_t> primes)
    : PrimeSet(std::vector<std::uint64_t>(primes)) {}

PrimeSet::PrimeSet(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
  for (auto p : primes_) {
    if (!is_prime(p)) throw InvalidArgument("not a prime: " + std::to_string(p));
  }
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

PrimeSet PrimeSet::parse(std::string_view text) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '{' ||
                               text[i] == '}' || text[i] == '\t')) {
      ++i;
    }
    if (i >= text.size()) break;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{}) {
      throw InvalidArgument("malformed prime list: '" + std::string(text) + "'");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return PrimeSet(std::move(out));
}

bool PrimeSet::contains(std::uint64_t p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

PrimeSet PrimeSet::complement_in(std::uint64_t n) const {
  std::vector<std::uint64_t> out;
  for (auto p : prime_divisors(n)) {
    if (!contains(p)) out.push_back(p);
  }
  return PrimeSet(std::move(out));
}

PrimeSet PrimeSet::intersect_divisors(std::uint64_t n) const {
  std::vector<std::uint64_t> out;
  for (auto p : primes_) {
    if (n % p == 0) out.push_back(p);
  }
  return PrimeSet(std::move(out));
}

bool PrimeSet::is_pi_number(std::uint64_t n) const {
  for (auto p : prime_divisors(n)) {
    if (!contains(p)) return false;
  }
  return true;
}

std::uint64_t PrimeSet::part(std::uint64_t n) const {
  std::uint64_t r = 1;
  for (auto p : primes_) r *= p_part(n, p);
  return r;
}

std::string PrimeSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(primes_[i]);
  }
  return s + "}";
}

}  // namespace fusionlab
