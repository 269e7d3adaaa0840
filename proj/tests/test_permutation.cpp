#include <doctest.h>

#include <random>

#include "fusionlab/errors.hpp"
#include "fusionlab/exact_ratio.hpp"
#include "fusionlab/permutation.hpp"
#include "fusionlab/primes.hpp"

using namespace fusionlab;

namespace {
Permutation random_perm(std::mt19937_64& rng, std::size_t n) {
  std::vector<Point> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Point>(i);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}
}  // namespace

TEST_CASE("products act left to right") {
  auto p = Permutation::from_cycles(3, {{0, 1}});
  auto q = Permutation::from_cycles(3, {{1, 2}});
  // 0 -p-> 1 -q-> 2
  CHECK((p * q)(0) == 2);
  CHECK((p * q).to_cycle_string() == "(0 2 1)");
  CHECK(conjugate(p, q) == q.inverse() * p * q);
  CHECK(commutator(p, q) == p.inverse() * q.inverse() * p * q);
}

TEST_CASE("construction validates bijections") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidArgument);
  CHECK_THROWS_AS(Permutation({0, 3}), InvalidArgument);
  CHECK_THROWS_AS(Permutation::identity(3) * Permutation::identity(4), DegreeMismatch);
  CHECK(Permutation::identity(4).is_identity());
  CHECK(Permutation::identity(4).to_cycle_string() == "()");
  CHECK(Permutation::identity(4).first_moved_point() == 4);
}

TEST_CASE("order and powers") {
  auto x = Permutation::from_cycles(7, {{0, 1, 2}, {3, 4, 5, 6}});
  CHECK(x.order() == 12);
  CHECK(x.pow(12).is_identity());
  CHECK(x.pow(-1) == x.inverse());
  CHECK(x.pow(5) == x * x * x * x * x);
  CHECK(x.first_moved_point() == 0);
}

TEST_CASE("random permutations satisfy the group axioms") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    auto a = random_perm(rng, 9), b = random_perm(rng, 9), c = random_perm(rng, 9);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * a.inverse()).is_identity());
    CHECK((a * b).inverse() == b.inverse() * a.inverse());
    CHECK(a.pow(static_cast<std::int64_t>(a.order())).is_identity());
    CHECK(conjugate(a * b, c) == conjugate(a, c) * conjugate(b, c));
  }
}

TEST_CASE("primes and prime sets") {
  CHECK(prime_divisors(12180) == std::vector<std::uint64_t>{2, 3, 5, 7, 29});
  CHECK(p_part(12180, 2) == 4);
  CHECK(as_prime_power(16).prime == 2);
  CHECK(as_prime_power(16).exponent == 4);
  CHECK(as_prime_power(12).prime == 0);
  CHECK(as_prime_power(1).prime == 0);
  auto pi = PrimeSet::parse("5, 3,3");
  CHECK(pi.to_string() == "{3,5}");
  CHECK(pi.part(360) == 45);
  CHECK(pi.complement_in(360).to_string() == "{2}");
  CHECK(pi.intersect_divisors(12).to_string() == "{3}");
  CHECK(pi.is_pi_number(1));
  CHECK_FALSE(pi.is_pi_number(6));
  CHECK_THROWS_AS(PrimeSet::parse("2,4"), InvalidArgument);
}

TEST_CASE("exact ratios") {
  CHECK(ExactRatio(6, 12).to_string() == "1/2");
  CHECK(ExactRatio(4, 4).to_string() == "1/1");
  CHECK(ExactRatio(0, 5).to_string() == "0/1");
  CHECK(ExactRatio(3, 8) < ExactRatio(1, 2));
  CHECK(ExactRatio(2, 3) * ExactRatio(3, 4) == ExactRatio(1, 2));
  CHECK(ExactRatio::parse("17/32") == ExactRatio(17, 32));
  CHECK(ExactRatio(4, 7).to_display_decimal() == "0.571428");
  CHECK_THROWS_AS(ExactRatio(1, 0), InvalidArgument);
  CHECK_THROWS_AS(ExactRatio::parse("1/"), InvalidArgument);
  CHECK_THROWS_AS(ExactRatio::parse("1.5"), InvalidArgument);
  // Cross-multiplication near the 64-bit edge stays exact.
  const std::uint64_t big = (1ull << 62) + 1;
  CHECK(ExactRatio(big, big + 2) < ExactRatio(big + 1, big + 3));
}
