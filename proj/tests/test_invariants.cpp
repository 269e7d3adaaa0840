#include <doctest.h>

#include "fusionlab/catalog.hpp"
#include "fusionlab/coset_action.hpp"
#include "fusionlab/families.hpp"
#include "fusionlab/invariants.hpp"
#include "fusionlab/structure.hpp"
#include "fusionlab/sylow_fusion.hpp"

using namespace fusionlab;

namespace {
ExactRatio dp(const PermGroup& g, std::uint64_t p) { return commuting_degree(g, PrimeSet{p}); }
}  // namespace

TEST_CASE("class counts of small groups") {
  auto a4 = alternating_group(4);
  CHECK(class_count(a4) == 4);
  CHECK(k_p(a4, 2) == 2);
  CHECK(dp(a4, 2) == ExactRatio(1, 2));
  CHECK(commuting_degree(a4) == ExactRatio(1, 3));
  CHECK(k_p(symmetric_group(4), 2) == 4);
  CHECK(class_counts(symmetric_group(4), PrimeSet{2, 3}).k_pi == 5);
}

TEST_CASE("published values") {
  auto a5 = alternating_group(5);
  CHECK(k_p(a5, 3) == 2);
  CHECK(dp(a5, 3) == ExactRatio(2, 3));
  CHECK(k_p(a5, 5) == 3);
  CHECK(dp(a5, 5) == ExactRatio(3, 5));
  CHECK(dp(construct("sl2:3"), 2) == ExactRatio(3, 8));
  auto a7 = alternating_group(7);
  CHECK(k_p(a7, 2) == 3);
  CHECK(dp(a7, 2) == ExactRatio(3, 8));
  for (std::uint64_t p : {3, 5, 7, 11, 13}) CHECK(dp(dihedral_group(2 * p), p) == ExactRatio(p + 1, 2 * p));
  CHECK(dp(psl2_group(8), 7) == ExactRatio(4, 7));
  CHECK(commuting_degree(dihedral_group(8)) == ExactRatio(5, 8));
  CHECK(commuting_degree(quaternion_group()) == ExactRatio(5, 8));
  for (unsigned m = 1; m <= 6; ++m) CHECK(commuting_degree(gm_group(m)) == ExactRatio(1, 2));
  for (std::uint64_t q : {5, 11, 13, 19, 29}) CHECK(dp(psl2_group(q), 2) == ExactRatio(1, 2));
}

TEST_CASE("d_pi of a pi'-group is 1 and d is k/|G|") {
  CHECK(commuting_degree(cyclic_group(9), PrimeSet{2}) == ExactRatio(1, 1));
  auto s5 = symmetric_group(5);
  CHECK(commuting_degree(s5) == ExactRatio(7, 120));
  CHECK(commuting_degree(s5, PrimeSet{2, 3, 5}) == commuting_degree(s5));
}

TEST_CASE("quotient class counts agree with the quotient image") {
  for (const auto& spec : {"symmetric:4", "sl2:3", "dihedral:12", "symmetric:3 x cyclic:3", "sl2:5"}) {
    auto g = construct(spec);
    for (const auto& n : normal_subgroups(g)) {
      auto image = coset_action(g, n).image();
      for (const auto& pi : {PrimeSet{2}, PrimeSet{3}, PrimeSet{2, 3}}) {
        auto counts = quotient_class_counts(g, n, pi);
        CHECK_MESSAGE(counts.k_pi == class_counts(image, pi).k_pi, spec << " |N|=" << n.order());
        CHECK(counts.k == class_count(image));
      }
    }
  }
}

TEST_CASE("invariant records") {
  auto rec = compute_invariants("PSL2(8)", psl2_group(8));
  CHECK(rec.order == 504);
  CHECK(rec.k == 9);
  REQUIRE(rec.primes.size() == 3);
  CHECK(rec.primes[2].prime == 7);
  CHECK(rec.primes[2].k_p == 4);
  CHECK(rec.primes[2].d_p == ExactRatio(4, 7));
  CHECK_FALSE(rec.primes[2].p_nilpotent);
  CHECK(rec.primes[2].sylow_abelian);
}

TEST_CASE("classification of groups with d >= 1/2") {
  CHECK(lescot_classify(cyclic_group(6)).tag == LescotTag::Abelian);
  auto d8 = lescot_classify(dihedral_group(8));
  CHECK(d8.tag == LescotTag::TwoCentralType);
  CHECK(d8.m == 1);
  auto q8c3 = lescot_classify(construct("extraspecial2:1:minus x cyclic:3"));
  CHECK(q8c3.tag == LescotTag::TwoCentralType);
  CHECK(q8c3.second->order() == 3);
  auto big = lescot_classify(extraspecial2_group(2, true));
  CHECK(big.tag == LescotTag::TwoCentralType);
  CHECK(big.m == 2);
  CHECK(big.d == ExactRatio(17, 32));
  for (unsigned m = 1; m <= 4; ++m) {
    auto t = lescot_classify(gm_group(m));
    CHECK(t.tag == LescotTag::GmType);
    CHECK(t.m == m);
  }
  auto s3c5 = lescot_classify(construct("symmetric:3 x cyclic:5"));
  CHECK(s3c5.tag == LescotTag::GmType);
  CHECK(s3c5.second->order() == 5);
  CHECK(lescot_classify(alternating_group(4)).tag == LescotTag::Below);
  unsigned m = 0;
  CHECK(is_gm_group(gm_group(3), &m));
  CHECK(m == 3);
  CHECK_FALSE(is_gm_group(dihedral_group(12)));
  CHECK(is_gm_group(symmetric_group(3)));
}
