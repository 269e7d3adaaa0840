#include "fusionlab/permutation.hpp"

#include <numeric>

#include "fusionlab/errors.hpp"

namespace fusionlab {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    Point v = images_[i];
    if (v >= images_.size()) {
      throw InvalidArgument("image " + std::to_string(v) + " at index " + std::to_string(i) +
                            " is out of range for degree " + std::to_string(images_.size()));
    }
    if (seen[v]) {
      throw InvalidArgument("not a bijection: point " + std::to_string(v) +
                            " appears twice (second time at index " + std::to_string(i) + ")");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<std::vector<Point>> v;
  for (auto c : cycles) v.emplace_back(c);
  return from_cycles(degree, v);
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point a = cycle[i];
      if (a >= degree) throw InvalidArgument("cycle point " + std::to_string(a) + " out of range");
      if (used[a]) throw InvalidArgument("point " + std::to_string(a) + " repeated in cycles");
      used[a] = true;
      images[a] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images), Unchecked{});
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), Unchecked{});
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation Permutation::pow(std::int64_t exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent)
                                 : static_cast<std::uint64_t>(exponent);
  Permutation result = identity(degree());
  while (e > 0) {
    if (e & 1U) result = compose(result, base);
    base = compose(base, base);
    e >>= 1U;
  }
  return result;
}

Point Permutation::first_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

std::string Permutation::to_cycle_string() const {
  std::string s;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    s += "(";
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) s += " ";
      s += std::to_string(j);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DegreeMismatch(p.degree(), q.degree());
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = q.images_[p.images_[i]];
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  return g.inverse() * x * g;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the images.
  std::uint64_t h = 1469598103934665603ULL;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace fusionlab
