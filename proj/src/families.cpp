#include "fusionlab/families.hpp"

#include <numeric>

#include "fusionlab/coset_action.hpp"
#include "fusionlab/errors.hpp"
#include "fusionlab/finite_field.hpp"
#include "fusionlab/primes.hpp"
#include "fusionlab/structure.hpp"
#include "fusionlab/todd_coxeter.hpp"

namespace fusionlab {

namespace {

Permutation cycle_on(std::size_t degree, std::size_t first, std::size_t last) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = first; i < last; ++i) images[i] = static_cast<Point>(i + 1);
  images[last] = static_cast<Point>(first);
  return Permutation(std::move(images));
}

PermGroup checked(PermGroup g, std::uint64_t expected, const std::string& what) {
  if (g.order() != expected) {
    throw InternalError(what + " came out with order " + std::to_string(g.order()) + ", expected " +
                        std::to_string(expected));
  }
  return g;
}

void require_range(std::uint64_t n, std::uint64_t lo, std::uint64_t hi, const char* what) {
  if (n < lo || n > hi) {
    throw InvalidArgument(std::string(what) + " parameter " + std::to_string(n) + " outside [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

struct Mat {
  std::uint32_t a, b, c, d;
};

}  // namespace

PermGroup cyclic_group(std::uint64_t n) {
  require_range(n, 1, 100'000, "cyclic");
  if (n == 1) return PermGroup::trivial(1);
  return checked(PermGroup(n, {cycle_on(n, 0, n - 1)}), n, "cyclic group");
}

PermGroup dihedral_group(std::uint64_t order) {
  if (order < 2 || order % 2 != 0) throw InvalidArgument("dihedral order must be even and >= 2");
  const auto n = order / 2;
  require_range(n, 1, 50'000, "dihedral");
  if (n == 1) return PermGroup(2, {Permutation::from_cycles(2, {{0, 1}})});
  if (n == 2) {
    return PermGroup(4, {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{2, 3}})});
  }
  std::vector<Point> flip(n);
  for (std::size_t i = 0; i < n; ++i) flip[i] = static_cast<Point>((n - i) % n);
  return checked(PermGroup(n, {cycle_on(n, 0, n - 1), Permutation(std::move(flip))}), order,
                 "dihedral group");
}

PermGroup symmetric_group(std::uint64_t n) {
  require_range(n, 1, 12, "symmetric");
  if (n == 1) return PermGroup::trivial(1);
  return checked(PermGroup(n, {cycle_on(n, 0, 1), cycle_on(n, 0, n - 1)}), factorial(n),
                 "symmetric group");
}

PermGroup alternating_group(std::uint64_t n) {
  require_range(n, 1, 12, "alternating");
  if (n <= 2) return PermGroup::trivial(n);
  auto long_cycle = n % 2 == 1 ? cycle_on(n, 0, n - 1) : cycle_on(n, 1, n - 1);
  return checked(PermGroup(n, {cycle_on(n, 0, 2), long_cycle}), factorial(n) / 2, "alternating group");
}

PermGroup direct_product(std::span<const PermGroup> factors) {
  if (factors.empty()) return PermGroup::trivial(1);
  std::size_t degree = 0;
  std::uint64_t order = 1;
  for (const auto& f : factors) {
    degree += f.degree();
    order *= f.order();
  }
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    for (const auto& s : f.generators()) {
      std::vector<Point> images(degree);
      std::iota(images.begin(), images.end(), Point{0});
      for (std::size_t i = 0; i < f.degree(); ++i) images[offset + i] = static_cast<Point>(offset + s(i));
      gens.emplace_back(std::move(images));
    }
    offset += f.degree();
  }
  return checked(PermGroup(degree, std::move(gens), factors.front().limits()), order, "direct product");
}

PermGroup gm_group(unsigned m) {
  require_range(m, 1, 12, "gm");
  return checked(todd_coxeter(gm_presentation(m)).regular, 3ull << m, "G_m");
}

PermGroup quaternion_group() {
  return checked(todd_coxeter(parse_presentation("gens: a b\nrels: a^4, a^2 = b^2, b^-1 a b a\n")).regular, 8,
                 "Q8");
}

PermGroup extraspecial2_group(unsigned m, bool plus) {
  require_range(m, 1, 4, "extraspecial2");
  std::vector<PermGroup> factors;
  for (unsigned i = 0; i < m; ++i) {
    factors.push_back(i == 0 && !plus ? quaternion_group() : dihedral_group(8));
  }
  if (m == 1) return factors.front();

  PermGroup product = direct_product(factors);
  // Identify the central involutions of all factors.
  std::vector<Permutation> z;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    PermGroup zf = center(f);
    const Permutation* inv = nullptr;
    for (const auto& x : zf.elements()) {
      if (!x.is_identity()) inv = &x;
    }
    std::vector<Point> images(product.degree());
    std::iota(images.begin(), images.end(), Point{0});
    for (std::size_t i = 0; i < f.degree(); ++i) images[offset + i] = static_cast<Point>(offset + (*inv)(i));
    z.emplace_back(std::move(images));
    offset += f.degree();
  }
  std::vector<Permutation> kernel_gens;
  for (unsigned i = 1; i < m; ++i) kernel_gens.push_back(z[0] * z[i]);
  PermGroup kernel(product.degree(), std::move(kernel_gens));
  auto quotient = coset_action(product, kernel).image();
  return checked(std::move(quotient), 2ull << (2 * m), "extraspecial 2-group");
}

PermGroup psl2_group(std::uint64_t q) {
  require_range(q, 2, 256, "psl2");
  FiniteField f(q);
  const auto n = f.order();
  auto act = [&](const Mat& mat) {
    std::vector<Point> images(n + 1);
    for (std::uint32_t y = 0; y <= n; ++y) {
      // Row vector (1, y), or (0, 1) for the point at infinity.
      std::uint32_t x0 = y == n ? 0 : 1;
      std::uint32_t y0 = y == n ? 1 : y;
      auto u = f.add(f.mul(x0, mat.a), f.mul(y0, mat.c));
      auto v = f.add(f.mul(x0, mat.b), f.mul(y0, mat.d));
      images[y] = u == 0 ? n : f.mul(v, f.inv(u));
    }
    return Permutation(std::move(images));
  };
  std::vector<Permutation> gens{act({1, 1, 0, 1}), act({0, f.neg(1), 1, 0})};
  // Over GF(p^k) the transvections by 1 only reach GF(p); add the others.
  for (unsigned i = 1; i < f.degree(); ++i) gens.push_back(act({1, f.power_of_primitive(i), 0, 1}));
  const std::uint64_t sl_order = static_cast<std::uint64_t>(n) * (n - 1) * (n + 1);
  return checked(PermGroup(n + 1, std::move(gens)), sl_order / std::gcd<std::uint64_t>(2, n - 1), "PSL2");
}

PermGroup sl2_group(std::uint64_t q) {
  require_range(q, 2, 64, "sl2");
  FiniteField f(q);
  const auto n = f.order();
  auto act = [&](const Mat& mat) {
    std::vector<Point> images(n * n - 1);
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        if (x == 0 && y == 0) continue;
        auto u = f.add(f.mul(x, mat.a), f.mul(y, mat.c));
        auto v = f.add(f.mul(x, mat.b), f.mul(y, mat.d));
        images[x * n + y - 1] = u * n + v - 1;
      }
    }
    return Permutation(std::move(images));
  };
  std::vector<Permutation> gens{act({1, 1, 0, 1}), act({0, f.neg(1), 1, 0})};
  for (unsigned i = 1; i < f.degree(); ++i) gens.push_back(act({1, f.power_of_primitive(i), 0, 1}));
  return checked(PermGroup(n * n - 1, std::move(gens)), static_cast<std::uint64_t>(n) * (n - 1) * (n + 1),
                 "SL2");
}

PermGroup frobenius_affine_group(std::uint64_t p, unsigned k, std::uint64_t r) {
  if (!is_prime(p) || !is_prime(r)) throw InvalidArgument("frobenius_affine: p and r must be prime");
  if (k < 1) throw InvalidArgument("frobenius_affine: k must be positive");
  const auto q = ipow(p, k);
  if (r == p || (q - 1) % r != 0) {
    throw InvalidArgument("frobenius_affine: r = " + std::to_string(r) + " must divide " +
                          std::to_string(q) + " - 1");
  }
  FiniteField f(q);
  std::vector<Permutation> gens;
  for (unsigned j = 0; j < k; ++j) {
    const auto b = static_cast<std::uint32_t>(ipow(p, j));  // the monomial x^j
    std::vector<Point> images(q);
    for (std::uint32_t v = 0; v < q; ++v) images[v] = f.add(v, b);
    gens.emplace_back(std::move(images));
  }
  const auto g = f.power_of_primitive((q - 1) / r);
  std::vector<Point> scale(q);
  for (std::uint32_t v = 0; v < q; ++v) scale[v] = f.mul(v, g);
  gens.emplace_back(std::move(scale));
  return checked(PermGroup(q, std::move(gens)), q * r, "Frobenius group");
}

}  // namespace fusionlab
