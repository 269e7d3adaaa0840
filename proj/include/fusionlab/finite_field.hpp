#pragma once

#include <cstdint>
#include <vector>

namespace fusionlab {

// GF(q) for small prime powers q. Elements are 0..q-1, read as base-p digit
// strings of polynomial coefficients (lowest degree first); for k > 1 the
// field is F_p[x] modulo a Conway polynomial, whose root x is primitive. For
// prime q the primitive element is the least primitive root.
class FiniteField {
 public:
  // Throws InvalidArgument when q is not a prime power or no polynomial is
  // tabulated for it.
  explicit FiniteField(std::uint64_t q);

  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::uint32_t primitive_element() const noexcept { return exp_.size() > 1 ? exp_[1] : 1; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  // primitive_element()^e, e taken mod q-1.
  std::uint32_t power_of_primitive(std::uint64_t e) const;

  // The tabulated modulus, coefficients lowest degree first (monic), or
  // {-a, 1} style linear modulus for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

 private:
  std::uint32_t q_ = 0;
  std::uint32_t p_ = 0;
  unsigned k_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // exp_[i] = w^i, length q-1
  std::vector<std::uint32_t> log_;  // log_[exp_[i]] = i
};

}  // namespace fusionlab
