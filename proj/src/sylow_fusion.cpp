#include "fusionlab/sylow_fusion.hpp"

#include <algorithm>

#include "fusionlab/deadline.hpp"
#include "fusionlab/errors.hpp"
#include "fusionlab/structure.hpp"

namespace fusionlab {

bool is_p_element(const Permutation& x, std::uint64_t p) {
  auto o = x.order();
  return p_part(o, p) == o;
}

PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument("sylow_subgroup: " + std::to_string(p) + " is not prime");
  const std::uint64_t target = p_part(g.order(), p);
  PermGroup out = PermGroup::trivial(g.degree(), g.limits());
  if (target == 1) return out;

  const Permutation* start = nullptr;
  std::uint64_t best = 1;
  for (const auto& x : g.elements()) {
    auto o = x.order();
    if (o > best && p_part(o, p) == o) {
      best = o;
      start = &x;
    }
  }
  out = out.with_generators(std::span<const Permutation>(start, 1));
  while (out.order() < target) {
    PermGroup n = normalizer(g, out);
    const Permutation* next = nullptr;
    for (const auto& x : n.elements()) {
      check_deadline();
      if (is_p_element(x, p) && !out.contains(x)) {
        next = &x;
        break;
      }
    }
    if (next == nullptr) throw InternalError("Sylow ascent stalled below |G|_p");
    out = out.with_generators(std::span<const Permutation>(next, 1));
  }
  if (out.order() != target) throw InternalError("Sylow ascent overshot |G|_p");
  return out;
}

std::vector<Permutation> class_intersect_sylow(const PermGroup& g, std::uint64_t p,
                                               const Permutation& x, const PermGroup& sylow) {
  if (!g.contains(x)) throw InvalidArgument("class_intersect_sylow: element not in G");
  if (!is_p_element(x, p)) throw InvalidArgument("class_intersect_sylow: not a p-element");
  if (sylow.order() != p_part(g.order(), p) || !sylow.is_subgroup_of(g)) {
    throw InvalidArgument("class_intersect_sylow: not a Sylow p-subgroup");
  }
  const auto& table = class_table(g);
  const auto& elements = g.element_table();
  const auto target = table.class_of[elements.index_of(x)];
  std::vector<Permutation> out;
  for (const auto& y : sylow.elements()) {
    if (table.class_of[elements.index_of(y)] == target) out.push_back(y);
  }
  return out;
}

bool controls_fusion(const PermGroup& g, const PermGroup& h, const PermGroup& k) {
  if (!k.is_subgroup_of(h) || !h.is_subgroup_of(g)) {
    throw InvalidArgument("controls_fusion: need K <= H <= G");
  }
  const auto& table = class_table(g);
  const auto& elements = g.element_table();

  // Bucket K by G-class; every bucket must sit inside a single H-orbit.
  std::vector<std::vector<std::uint32_t>> buckets(table.classes.size());
  for (const auto& y : k.elements()) {
    auto idx = elements.index_of(y);
    buckets[table.class_of[idx]].push_back(idx);
  }
  std::vector<Permutation> gens;
  std::vector<Permutation> gens_inv;
  for (const auto& s : h.generators()) {
    if (s.is_identity()) continue;
    gens.push_back(s);
    gens_inv.push_back(s.inverse());
  }
  std::vector<std::uint32_t> mark(elements.size(), 0);
  std::uint32_t stamp = 0;
  for (const auto& bucket : buckets) {
    if (bucket.size() < 2) continue;
    ++stamp;
    std::vector<std::uint32_t> orbit{bucket.front()};
    mark[bucket.front()] = stamp;
    for (std::size_t pos = 0; pos < orbit.size(); ++pos) {
      check_deadline();
      const Permutation& y = elements[orbit[pos]];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        auto z = elements.index_of(gens_inv[i] * y * gens[i]);
        if (mark[z] != stamp) {
          mark[z] = stamp;
          orbit.push_back(z);
        }
      }
    }
    for (auto idx : bucket) {
      if (mark[idx] != stamp) return false;
    }
  }
  return true;
}

bool controls_p_fusion(const PermGroup& g, const PermGroup& h, std::uint64_t p) {
  if (p_part(h.order(), p) != p_part(g.order(), p)) return false;
  return controls_fusion(g, h, sylow_subgroup(h, p));
}

NormalComplement has_normal_pi_complement(const PermGroup& g, const PrimeSet& pi) {
  const PrimeSet relevant = pi.intersect_divisors(g.order());
  const PrimeSet pi_prime = relevant.complement_in(g.order());
  PermGroup core = o_pi_core(g, pi_prime);
  NormalComplement out;
  out.exists = core.order() == pi_prime.part(g.order());

  if (pi.size() == 1) {
    const std::uint64_t p = pi.smallest();
    PermGroup sylow = sylow_subgroup(g, p);
    std::size_t k_p = 0;
    for (const auto& cls : conjugacy_classes(g)) {
      if (is_p_element(cls.representative, p)) ++k_p;
    }
    const bool by_count = k_p == conjugacy_classes(sylow).size();
    const bool by_fusion = controls_fusion(g, sylow, sylow);
    if (by_count != out.exists || by_fusion != out.exists) {
      throw InternalError("normal p-complement detections disagree for p=" + std::to_string(p) +
                          ": core=" + std::to_string(out.exists) +
                          " count=" + std::to_string(by_count) +
                          " fusion=" + std::to_string(by_fusion));
    }
  }
  if (out.exists) {
    out.hall_quotient_abelian = derived_subgroup(g).is_subgroup_of(core);
    out.complement = std::move(core);
  }
  return out;
}

PermGroup z_p_star(const PermGroup& g, std::uint64_t p) {
  PermGroup core = o_pi_core(g, PrimeSet{p}.complement_in(g.order()));
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    if (!s.is_identity()) gens.push_back(s);
  }
  std::vector<Permutation> kept;
  for (const auto& x : g.elements()) {
    check_deadline();
    bool central = std::all_of(gens.begin(), gens.end(),
                               [&](const Permutation& s) { return core.contains(commutator(x, s)); });
    if (central) kept.push_back(x);
  }
  return subgroup_from_elements(g.degree(), kept, g.limits());
}

std::vector<FusionReport> glauberman_witnesses(const PermGroup& g, std::uint64_t p) {
  PermGroup sylow = sylow_subgroup(g, p);
  PermGroup zstar = z_p_star(g, p);
  const auto& table = class_table(g);
  const auto& elements = g.element_table();
  std::vector<std::vector<Permutation>> meets(table.classes.size());
  for (const auto& y : sylow.elements()) {
    meets[table.class_of[elements.index_of(y)]].push_back(y);
  }
  std::vector<FusionReport> out;
  for (std::size_t i = 0; i < table.classes.size(); ++i) {
    const auto& cls = table.classes[i];
    if (cls.element_order == 1 || !is_p_element(cls.representative, p)) continue;
    if (meets[i].empty()) throw InternalError("p-element class misses the Sylow subgroup");
    FusionReport r{meets[i].front(), meets[i], meets[i].size() == 1, false};
    r.in_z_p_star = zstar.contains(r.element);
    out.push_back(std::move(r));
  }
  return out;
}

std::optional<PermGroup> abelian_hall_subgroup(const PermGroup& g, const PrimeSet& sigma) {
  PermGroup hall = PermGroup::trivial(g.degree(), g.limits());
  PermGroup ambient = g;
  for (auto r : sigma) {
    const std::uint64_t want = p_part(g.order(), r);
    if (want == 1) continue;
    PermGroup s = sylow_subgroup(ambient, r);
    if (s.order() != want || !s.is_abelian()) return std::nullopt;
    hall = join(hall, s);
    ambient = centralizer(ambient, s);
  }
  if (!hall.is_abelian()) throw InternalError("Hall subgroup built from commuting Sylows is not abelian");
  return hall;
}

}  // namespace fusionlab
