#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace fusionlab {

// Reduced fraction of nonnegative integers. Comparisons cross-multiply in
// 128 bits, so they are exact for any representable pair.
class ExactRatio {
 public:
  ExactRatio() = default;
  ExactRatio(std::uint64_t numerator, std::uint64_t denominator);

  std::uint64_t numerator() const noexcept { return num_; }
  std::uint64_t denominator() const noexcept { return den_; }

  // "num/den"; integers still print their denominator ("1/1").
  std::string to_string() const;
  // Six-digit decimal rendering for human eyes only.
  std::string to_display_decimal() const;
  // Inverse of to_string(). Throws InvalidArgument.
  static ExactRatio parse(const std::string& text);

  friend ExactRatio operator*(const ExactRatio& a, const ExactRatio& b);
  friend bool operator==(const ExactRatio& a, const ExactRatio& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) noexcept {
    auto lhs = static_cast<unsigned __int128>(a.num_) * b.den_;
    auto rhs = static_cast<unsigned __int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

}  // namespace fusionlab
