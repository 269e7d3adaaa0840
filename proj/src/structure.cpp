#include "fusionlab/structure.hpp"

#include <algorithm>
#include <map>

#include "fusionlab/conjugacy.hpp"
#include "fusionlab/deadline.hpp"
#include "fusionlab/errors.hpp"

namespace fusionlab {

namespace {

void require_subgroup(const PermGroup& g, const PermGroup& h, const char* what) {
  if (h.degree() != g.degree()) throw DegreeMismatch(g.degree(), h.degree());
  if (!h.is_subgroup_of(g)) throw InvalidArgument(std::string(what) + ": not a subgroup");
}

void require_member(const PermGroup& g, const Permutation& x, const char* what) {
  if (!g.contains(x)) {
    throw InvalidArgument(std::string(what) + ": " + x.to_cycle_string() + " is not in the group");
  }
}

std::vector<Permutation> nontrivial_generators(const PermGroup& g) {
  std::vector<Permutation> out;
  for (const auto& s : g.strong_generators()) {
    if (!s.is_identity()) out.push_back(s);
  }
  return out;
}

template <typename Pred>
PermGroup filter_subgroup(const PermGroup& g, Pred pred) {
  std::vector<Permutation> kept;
  for (const auto& x : g.elements()) {
    check_deadline();
    if (pred(x)) kept.push_back(x);
  }
  return subgroup_from_elements(g.degree(), kept, g.limits());
}

// Bitset over class indices.
using ClassSet = std::vector<std::uint64_t>;

ClassSet class_set_of(const PermGroup& g, const PermGroup& n) {
  const auto& classes = conjugacy_classes(g);
  ClassSet bits((classes.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (n.contains(classes[i].representative)) bits[i / 64] |= 1ULL << (i % 64);
  }
  return bits;
}

bool includes(const ClassSet& big, const ClassSet& small) {
  for (std::size_t i = 0; i < big.size(); ++i) {
    if ((small[i] & ~big[i]) != 0) return false;
  }
  return true;
}

}  // namespace

bool is_normal(const PermGroup& g, const PermGroup& h) {
  for (const auto& s : g.generators()) {
    for (const auto& x : h.strong_generators()) {
      if (!h.contains(conjugate(x, s))) return false;
    }
  }
  return true;
}

PermGroup join(const PermGroup& a, const PermGroup& b) {
  return a.with_generators(b.strong_generators());
}

PermGroup intersection(const PermGroup& a, const PermGroup& b) {
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& big = a.order() <= b.order() ? b : a;
  return filter_subgroup(small, [&](const Permutation& x) { return big.contains(x); });
}

PermGroup centralizer(const PermGroup& g, const Permutation& x) {
  require_member(g, x, "centralizer");
  return filter_subgroup(g, [&](const Permutation& y) { return x * y == y * x; });
}

PermGroup centralizer(const PermGroup& g, const PermGroup& h) {
  require_subgroup(g, h, "centralizer");
  auto gens = nontrivial_generators(h);
  return filter_subgroup(g, [&](const Permutation& y) {
    return std::all_of(gens.begin(), gens.end(),
                       [&](const Permutation& x) { return x * y == y * x; });
  });
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h) {
  require_subgroup(g, h, "normalizer");
  auto gens = nontrivial_generators(h);
  return filter_subgroup(g, [&](const Permutation& y) {
    return std::all_of(gens.begin(), gens.end(),
                       [&](const Permutation& x) { return h.contains(conjugate(x, y)); });
  });
}

PermGroup center(const PermGroup& g) { return centralizer(g, g); }

PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> s) {
  for (const auto& x : s) require_member(g, x, "normal_closure");
  PermGroup h = subgroup_from_elements(g.degree(), s, g.limits());
  bool grew = true;
  while (grew) {
    grew = false;
    auto current = nontrivial_generators(h);
    for (const auto& x : current) {
      for (const auto& t : g.generators()) {
        check_deadline();
        Permutation y = conjugate(x, t);
        if (!h.contains(y)) {
          h = h.with_generators(std::span<const Permutation>(&y, 1));
          grew = true;
        }
      }
    }
  }
  return h;
}

PermGroup commutator_subgroup(const PermGroup& g, const PermGroup& a, const PermGroup& b) {
  require_subgroup(g, a, "commutator_subgroup");
  require_subgroup(g, b, "commutator_subgroup");
  std::vector<Permutation> comms;
  for (const auto& x : nontrivial_generators(a)) {
    for (const auto& y : nontrivial_generators(b)) {
      Permutation c = commutator(x, y);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  }
  return normal_closure(join(a, b), comms);
}

PermGroup derived_subgroup(const PermGroup& g) { return commutator_subgroup(g, g, g); }

DerivedSeries derived_series(const PermGroup& g) {
  DerivedSeries out;
  out.chain.terms.push_back(g);
  while (true) {
    const PermGroup& last = out.chain.terms.back();
    if (last.is_trivial()) break;
    PermGroup next = derived_subgroup(last);
    if (next.order() == last.order()) {
      out.chain.terms.push_back(next);  // terminal repeat: perfect term
      break;
    }
    out.chain.terms.push_back(std::move(next));
  }
  out.is_solvable = out.chain.terms.back().is_trivial();
  out.is_perfect = out.chain.terms.size() >= 2 && out.chain.terms[1].order() == g.order();
  if (g.is_trivial()) out.is_perfect = true;
  return out;
}

bool is_solvable(const PermGroup& g) { return derived_series(g).is_solvable; }

bool is_simple(const PermGroup& g) {
  if (g.is_trivial()) return false;
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.element_order == 1) continue;
    PermGroup closure = subgroup_from_elements(g.degree(), cls.members, g.limits());
    if (closure.order() != g.order()) return false;
  }
  return true;
}

PermGroup o_pi_core_over(const PermGroup& g, const PermGroup& n, const PrimeSet& pi) {
  const auto& classes = conjugacy_classes(g);
  const bool from_trivial = n.is_trivial();
  PermGroup current = n;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& cls : classes) {
      check_deadline();
      // Over the trivial subgroup only pi-element classes can contribute.
      if (from_trivial && !pi.is_pi_number(cls.element_order)) continue;
      if (current.contains(cls.representative)) continue;
      PermGroup candidate = current.with_generators(cls.members);
      if (pi.is_pi_number(candidate.order() / n.order())) {
        current = std::move(candidate);
        grew = true;
        break;  // restart the scan on growth
      }
    }
  }
  return current;
}

PermGroup o_pi_core(const PermGroup& g, const PrimeSet& pi) {
  return o_pi_core_over(g, PermGroup::trivial(g.degree(), g.limits()), pi);
}

PermGroup residual(const PermGroup& g, const PrimeSet& pi) {
  std::vector<Permutation> gens;
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.element_order == 1) continue;
    bool coprime = std::none_of(pi.begin(), pi.end(),
                                [&](std::uint64_t p) { return cls.element_order % p == 0; });
    if (coprime) gens.insert(gens.end(), cls.members.begin(), cls.members.end());
  }
  return subgroup_from_elements(g.degree(), gens, g.limits());
}

SubgroupChain upper_p_series(const PermGroup& g, std::uint64_t p) {
  const PrimeSet p_set{p};
  const PrimeSet p_prime = p_set.complement_in(g.order());
  const std::string ps = std::to_string(p);
  SubgroupChain out;
  out.terms.push_back(PermGroup::trivial(g.degree(), g.limits()));
  out.labels.push_back("1");
  std::string label = "O_{";
  bool p_step = true;
  unsigned stalls = 0;
  while (stalls < 2) {
    PermGroup next = o_pi_core_over(g, out.terms.back(), p_step ? p_set : p_prime);
    label += (label.size() > 3 ? "," : "") + ps + (p_step ? "" : "'");
    if (next.order() > out.terms.back().order()) {
      out.terms.push_back(std::move(next));
      out.labels.push_back(label + "}");
      stalls = 0;
    } else {
      ++stalls;
    }
    p_step = !p_step;
  }
  return out;
}

std::vector<PermGroup> normal_subgroups(const PermGroup& g) {
  const auto& classes = conjugacy_classes(g);
  struct Node {
    PermGroup group;
    ClassSet classes;
  };
  std::vector<Node> closures;
  for (const auto& cls : classes) {
    if (cls.element_order == 1) continue;
    PermGroup c = subgroup_from_elements(g.degree(), cls.members, g.limits());
    closures.push_back({c, class_set_of(g, c)});
  }

  std::vector<Node> lattice;
  std::map<ClassSet, std::size_t> seen;
  PermGroup trivial = PermGroup::trivial(g.degree(), g.limits());
  lattice.push_back({trivial, class_set_of(g, trivial)});
  seen.emplace(lattice.back().classes, 0);
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (const auto& c : closures) {
      check_deadline();
      if (includes(lattice[i].classes, c.classes)) continue;
      PermGroup k = join(lattice[i].group, c.group);
      ClassSet bits = class_set_of(g, k);
      if (seen.count(bits)) continue;
      if (lattice.size() >= g.limits().lattice_cap) {
        throw CapExceeded("normal subgroup lattice exceeds the cap of " +
                          std::to_string(g.limits().lattice_cap));
      }
      seen.emplace(bits, lattice.size());
      lattice.push_back({std::move(k), std::move(bits)});
    }
  }
  std::stable_sort(lattice.begin(), lattice.end(), [](const Node& a, const Node& b) {
    if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
    return a.classes < b.classes;
  });
  std::vector<PermGroup> out;
  out.reserve(lattice.size());
  for (auto& node : lattice) out.push_back(std::move(node.group));
  return out;
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g) {
  auto all = normal_subgroups(g);
  std::vector<PermGroup> out;
  for (std::size_t i = 1; i < all.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 1; j < all.size() && minimal; ++j) {
      if (j == i || all[j].order() >= all[i].order()) continue;
      if (all[j].is_subgroup_of(all[i])) minimal = false;
    }
    if (minimal) out.push_back(all[i]);
  }
  return out;
}

PermGroup solvable_radical(const PermGroup& g) {
  auto all = normal_subgroups(g);
  std::vector<const PermGroup*> solvable;
  for (const auto& n : all) {
    if (is_solvable(n)) solvable.push_back(&n);
  }
  const PermGroup* best = solvable.back();  // sorted by order
  for (const auto* n : solvable) {
    if (!n->is_subgroup_of(*best)) {
      throw InternalError("solvable normal subgroups without a unique maximum");
    }
  }
  return *best;
}

PermGroup fitting_subgroup(const PermGroup& g) {
  PermGroup out = PermGroup::trivial(g.degree(), g.limits());
  for (auto p : prime_divisors(g.order())) out = join(out, o_pi_core(g, PrimeSet{p}));
  return out;
}

PermGroup socle(const PermGroup& g) {
  PermGroup out = PermGroup::trivial(g.degree(), g.limits());
  for (const auto& m : minimal_normal_subgroups(g)) out = join(out, m);
  return out;
}

bool is_p_group(const PermGroup& g, std::uint64_t p) { return p_part(g.order(), p) == g.order(); }

unsigned nilpotency_class(const PermGroup& p, unsigned cap) {
  if (p.is_trivial()) return 0;
  PermGroup term = p;
  for (unsigned c = 1; c <= cap; ++c) {
    term = commutator_subgroup(p, term, p);
    if (term.is_trivial()) return c;
  }
  throw CapExceeded("nilpotency class exceeds " + std::to_string(cap));
}

PermGroup frattini_subgroup(const PermGroup& p, std::uint64_t prime) {
  if (!is_p_group(p, prime)) throw InvalidArgument("frattini_subgroup: not a p-group");
  std::vector<Permutation> gens = derived_subgroup(p).strong_generators();
  for (const auto& x : p.elements()) {
    Permutation y = x.pow(static_cast<std::int64_t>(prime));
    if (!y.is_identity()) gens.push_back(std::move(y));
  }
  return subgroup_from_elements(p.degree(), gens, p.limits());
}

PGroupProfile p_group_profile(const PermGroup& p, std::uint64_t prime) {
  if (!is_p_group(p, prime)) throw InvalidArgument("p_group_profile: not a p-group");
  PermGroup z = center(p);
  PermGroup d = derived_subgroup(p);
  PermGroup phi = frattini_subgroup(p, prime);
  const bool abelian = p.is_abelian();
  const bool extraspecial = !abelian && z.order() == prime && same_group(d, phi) &&
                            same_group(d, z);
  return PGroupProfile{
      .is_abelian = abelian,
      .is_elementary_abelian = abelian && phi.is_trivial() && !p.is_trivial(),
      .is_extraspecial = extraspecial,
      .nilpotency_class = nilpotency_class(p),
      .frattini = std::move(phi),
      .center = std::move(z),
      .derived = std::move(d),
  };
}

}  // namespace fusionlab
