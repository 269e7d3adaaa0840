#include "fusionlab/finite_field.hpp"

#include <map>
#include <utility>

#include "fusionlab/errors.hpp"
#include "fusionlab/primes.hpp"

namespace fusionlab {

namespace {

// Conway polynomials, coefficients of x^0..x^k.
const std::map<std::pair<std::uint32_t, unsigned>, std::vector<std::uint32_t>>& conway_table() {
  static const std::map<std::pair<std::uint32_t, unsigned>, std::vector<std::uint32_t>> table{
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{7, 2}, {3, 6, 1}},
      {{11, 2}, {2, 7, 1}},
      {{13, 2}, {2, 12, 1}},
  };
  return table;
}

std::uint32_t least_primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  const auto factors = prime_divisors(p - 1);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool primitive = true;
    for (auto f : factors) {
      std::uint64_t acc = 1;
      for (std::uint64_t i = 0; i < (p - 1) / f; ++i) acc = acc * g % p;
      if (acc == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw InternalError("no primitive root mod " + std::to_string(p));
}

}  // namespace

FiniteField::FiniteField(std::uint64_t q) {
  auto pp = as_prime_power(q);
  if (pp.prime == 0) throw InvalidArgument("field order " + std::to_string(q) + " is not a prime power");
  if (q > 65536) throw InvalidArgument("field order " + std::to_string(q) + " is too large");
  q_ = static_cast<std::uint32_t>(q);
  p_ = static_cast<std::uint32_t>(pp.prime);
  k_ = pp.exponent;

  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  if (k_ == 1) {
    const auto g = least_primitive_root(p_);
    modulus_ = {(p_ - g) % p_, 1};
    std::uint64_t acc = 1;
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
      exp_[i] = static_cast<std::uint32_t>(acc);
      acc = acc * g % p_;
    }
  } else {
    auto it = conway_table().find({p_, k_});
    if (it == conway_table().end()) {
      throw InvalidArgument("no Conway polynomial tabulated for GF(" + std::to_string(q) + ")");
    }
    modulus_ = it->second;
    // Multiply by x: shift digits up, then reduce x^k = -sum c_i x^i.
    std::vector<std::uint32_t> digits(k_, 0);
    digits[0] = 1;
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
      std::uint32_t code = 0;
      for (unsigned j = k_; j-- > 0;) code = code * p_ + digits[j];
      exp_[i] = code;
      const auto top = digits[k_ - 1];
      for (unsigned j = k_ - 1; j > 0; --j) digits[j] = digits[j - 1];
      digits[0] = 0;
      for (unsigned j = 0; j < k_; ++j) digits[j] = (digits[j] + (p_ - modulus_[j]) * top) % p_;
    }
  }
  std::vector<bool> seen(q_, false);
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    if (exp_[i] == 0 || seen[exp_[i]]) {
      throw InternalError("GF(" + std::to_string(q) + "): tabulated generator is not primitive");
    }
    seen[exp_[i]] = true;
    log_[exp_[i]] = i;
  }
}

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) return (a + b) % p_;
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  for (unsigned j = 0; j < k_; ++j) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

std::uint32_t FiniteField::neg(std::uint32_t a) const {
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  for (unsigned j = 0; j < k_; ++j) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

std::uint32_t FiniteField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0) throw InvalidArgument("inverse of zero in GF(" + std::to_string(q_) + ")");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t FiniteField::power_of_primitive(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }

}  // namespace fusionlab
