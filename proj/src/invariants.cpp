#include "fusionlab/invariants.hpp"


#include "fusionlab/conjugacy.hpp"
#include "fusionlab/deadline.hpp"
#include "fusionlab/errors.hpp"
#include "fusionlab/structure.hpp"
#include "fusionlab/sylow_fusion.hpp"

namespace fusionlab {

ClassCounts class_counts(const PermGroup& g, const PrimeSet& pi) {
  ClassCounts out;
  for (const auto& cls : conjugacy_classes(g)) {
    ++out.k;
    if (pi.is_pi_number(cls.element_order)) ++out.k_pi;
  }
  return out;
}

std::uint64_t class_count(const PermGroup& g) { return conjugacy_classes(g).size(); }

std::uint64_t k_p(const PermGroup& g, std::uint64_t p) { return class_counts(g, PrimeSet{p}).k_pi; }

ExactRatio commuting_degree(const PermGroup& g) { return ExactRatio(class_count(g), g.order()); }

ExactRatio commuting_degree(const PermGroup& g, const PrimeSet& pi) {
  auto counts = class_counts(g, pi);
  return ExactRatio(counts.k_pi, pi.part(g.order()));
}

ClassCounts quotient_class_counts(const PermGroup& g, const PermGroup& n, const PrimeSet& pi) {
  if (!n.is_subgroup_of(g) || !is_normal(g, n)) {
    throw InvalidArgument("quotient_class_counts: N is not a normal subgroup of G");
  }
  const auto& table = g.element_table();
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  std::vector<std::uint32_t> coset(table.size(), unset);
  std::vector<std::uint32_t> rep;  // coset -> element index of its least element
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (coset[i] != unset) continue;
    const auto c = static_cast<std::uint32_t>(rep.size());
    rep.push_back(static_cast<std::uint32_t>(i));
    for (const auto& h : n.elements()) coset[table.index_of(h * table[i])] = c;
  }

  // Conjugation orbits on cosets under the generators of G.
  std::vector<Permutation> gens;
  std::vector<Permutation> inv;
  for (const auto& s : g.generators()) {
    gens.push_back(s);
    inv.push_back(s.inverse());
  }
  std::vector<std::uint32_t> orbit_of(rep.size(), unset);
  ClassCounts out;
  for (std::uint32_t c = 0; c < rep.size(); ++c) {
    if (orbit_of[c] != unset) continue;
    check_deadline();
    orbit_of[c] = c;
    std::vector<std::uint32_t> queue{c};
    for (std::size_t pos = 0; pos < queue.size(); ++pos) {
      const auto& x = table[rep[queue[pos]]];
      for (std::size_t j = 0; j < gens.size(); ++j) {
        auto d = coset[table.index_of(inv[j] * x * gens[j])];
        if (orbit_of[d] == unset) {
          orbit_of[d] = c;
          queue.push_back(d);
        }
      }
    }
    // Order of the coset Nx: least e with x^e in N.
    const auto& x = table[rep[c]];
    std::uint64_t e = 1;
    for (Permutation y = x; !n.contains(y); y = y * x) ++e;
    ++out.k;
    if (pi.is_pi_number(e)) ++out.k_pi;
  }
  return out;
}

InvariantRecord compute_invariants(const std::string& name, const PermGroup& g) {
  InvariantRecord rec;
  rec.group = name;
  rec.order = g.order();
  rec.k = class_count(g);
  rec.d = ExactRatio(rec.k, rec.order);
  for (auto p : prime_divisors(g.order())) {
    PrimeInvariants pr;
    pr.prime = p;
    PermGroup sylow = sylow_subgroup(g, p);
    pr.sylow_order = sylow.order();
    pr.k_p = k_p(g, p);
    pr.k_sylow = class_count(sylow);
    pr.d_p = ExactRatio(pr.k_p, pr.sylow_order);
    pr.p_nilpotent = has_normal_pi_complement(g, PrimeSet{p}).exists;
    pr.sylow_abelian = sylow.is_abelian();
    rec.primes.push_back(pr);
  }
  return rec;
}

const char* to_string(LescotTag tag) {
  switch (tag) {
    case LescotTag::Abelian: return "Abelian";
    case LescotTag::TwoCentralType: return "TwoCentralType";
    case LescotTag::GmType: return "GmType";
    case LescotTag::Below: return "Below";
    case LescotTag::Unclassifiable: return "Unclassifiable";
  }
  return "?";
}

bool is_gm_group(const PermGroup& h, unsigned* m_out) {
  const auto order = h.order();
  if (order % 3 != 0) return false;
  const auto two = order / 3;
  auto pp = as_prime_power(two);
  if (two < 2 || pp.prime != 2) return false;
  const Permutation* a = nullptr;
  for (const auto& x : h.elements()) {
    if (x.order() == 3) {
      a = &x;
      break;
    }
  }
  if (a == nullptr) return false;
  const Permutation a_inv = a->inverse();
  for (const auto& b : h.elements()) {
    if (b.order() != two || conjugate(*a, b) != a_inv) continue;
    std::vector<Permutation> gens{*a, b};
    if (PermGroup(h.degree(), gens, h.limits()).order() == order) {
      if (m_out) *m_out = pp.exponent;
      return true;
    }
  }
  return false;
}

namespace {

std::optional<LescotType> two_central_split(const PermGroup& g, const ExactRatio& d) {
  PermGroup p = o_pi_core(g, PrimeSet{2});
  PermGroup a = o_pi_core(g, PrimeSet{2}.complement_in(g.order()));
  if (p.order() * a.order() != g.order() || !a.is_abelian()) return std::nullopt;
  PermGroup gd = derived_subgroup(g);
  if (gd.order() != 2 || derived_subgroup(p).order() != 2) return std::nullopt;
  PermGroup z = center(g);
  if (!gd.is_subgroup_of(z)) return std::nullopt;
  for (const auto& s : g.generators()) {
    if (!z.contains(s * s)) return std::nullopt;
  }
  const auto index = g.order() / z.order();
  unsigned m = 0;
  for (std::uint64_t v = 1; v < index; v *= 4) ++m;
  if (ipow(4, m) != index) {
    throw InternalError("Lescot case ii: |G/Z(G)| = " + std::to_string(index) + " is not a power of 4");
  }
  const ExactRatio expected(ipow(4, m) + 1, 2 * ipow(4, m));
  if (d != expected) {
    throw InternalError("Lescot case ii: d(G) = " + d.to_string() + " but (1+4^-m)/2 = " +
                        expected.to_string());
  }
  LescotType out;
  out.tag = LescotTag::TwoCentralType;
  out.d = d;
  out.m = m;
  out.first = std::move(p);
  out.second = std::move(a);
  return out;
}

std::optional<LescotType> gm_split(const PermGroup& g, const ExactRatio& d) {
  const auto lattice = normal_subgroups(g);
  for (const auto& m : lattice) {
    check_deadline();
    if (m.order() % 6 != 0) continue;
    unsigned exponent = 0;
    bool checked = false;
    bool gm = false;
    for (const auto& a : lattice) {
      if (m.order() * a.order() != g.order() || !a.is_abelian()) continue;
      if (intersection(m, a).order() != 1) continue;
      if (!checked) {
        gm = is_gm_group(m, &exponent);
        checked = true;
      }
      if (!gm) break;
      LescotType out;
      out.tag = LescotTag::GmType;
      out.d = d;
      out.m = exponent;
      out.first = m;
      out.second = a;
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace

LescotType lescot_classify(const PermGroup& g) {
  const ExactRatio d = commuting_degree(g);
  LescotType out;
  out.d = d;
  if (d < ExactRatio(1, 2)) {
    out.tag = LescotTag::Below;
    return out;
  }
  if (g.is_abelian()) {
    out.tag = LescotTag::Abelian;
    out.first = g;
    return out;
  }
  if (auto two = two_central_split(g, d)) return *two;
  if (auto gm = gm_split(g, d)) return *gm;
  out.tag = LescotTag::Unclassifiable;
  out.reason = "d(G) = " + d.to_string() + " but no abelian, P x A or G_m x A decomposition";
  return out;
}

}  // namespace fusionlab
