#include "fusionlab/exact_ratio.hpp"

#include <charconv>
#include <cstdio>
#include <numeric>

#include "fusionlab/errors.hpp"

namespace fusionlab {

ExactRatio::ExactRatio(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) throw InvalidArgument("ExactRatio: zero denominator");
  auto g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::string ExactRatio::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::string ExactRatio::to_display_decimal() const {
  // Long division keeps this independent of floating-point formatting.
  std::string out = std::to_string(num_ / den_) + ".";
  unsigned __int128 rem = num_ % den_;
  for (int i = 0; i < 6; ++i) {
    rem *= 10;
    out += static_cast<char>('0' + static_cast<int>(rem / den_));
    rem %= den_;
  }
  return out;
}

ExactRatio ExactRatio::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) throw InvalidArgument("ratio without '/': " + text);
  std::uint64_t n = 0;
  std::uint64_t d = 0;
  auto r1 = std::from_chars(text.data(), text.data() + slash, n);
  auto r2 = std::from_chars(text.data() + slash + 1, text.data() + text.size(), d);
  if (r1.ec != std::errc{} || r1.ptr != text.data() + slash || r2.ec != std::errc{} ||
      r2.ptr != text.data() + text.size()) {
    throw InvalidArgument("malformed ratio: " + text);
  }
  return ExactRatio(n, d);
}

ExactRatio operator*(const ExactRatio& a, const ExactRatio& b) {
  // Cross-reduce first so the products stay small.
  auto g1 = std::gcd(a.num_, b.den_);
  auto g2 = std::gcd(b.num_, a.den_);
  auto n = static_cast<unsigned __int128>(a.num_ / g1) * (b.num_ / g2);
  auto d = static_cast<unsigned __int128>(a.den_ / g2) * (b.den_ / g1);
  if ((n >> 64) != 0 || (d >> 64) != 0) throw InvalidArgument("ExactRatio product overflows 64 bits");
  return ExactRatio(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d));
}

}  // namespace fusionlab
