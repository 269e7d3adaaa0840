#include "fusionlab/conjugacy.hpp"

#include <algorithm>
#include <tuple>

#include "fusionlab/deadline.hpp"
#include "fusionlab/errors.hpp"

namespace fusionlab {

namespace {

std::shared_ptr<const ClassTable> compute_classes(const PermGroup& g) {
  const ElementTable& table = g.element_table();
  const std::size_t n = table.size();

  std::vector<Permutation> gens;
  std::vector<Permutation> gens_inv;
  for (const auto& s : g.generators()) {
    if (s.is_identity()) continue;
    gens.push_back(s);
    gens_inv.push_back(s.inverse());
  }

  constexpr std::uint32_t kUnassigned = UINT32_MAX;
  std::vector<std::uint32_t> orbit_of(n, kUnassigned);
  std::vector<std::vector<std::uint32_t>> orbits;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (orbit_of[start] != kUnassigned) continue;
    auto id = static_cast<std::uint32_t>(orbits.size());
    std::vector<std::uint32_t> orbit{start};
    orbit_of[start] = id;
    for (std::size_t pos = 0; pos < orbit.size(); ++pos) {
      check_deadline();
      const Permutation& x = table[orbit[pos]];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        std::uint32_t y = table.index_of(gens_inv[k] * x * gens[k]);
        if (orbit_of[y] == kUnassigned) {
          orbit_of[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }

  // The representative is the smallest index, i.e. the lexicographically least member.
  std::vector<std::size_t> order(orbits.size());
  std::vector<std::uint64_t> elt_order(orbits.size());
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    order[i] = i;
    elt_order[i] = table[orbits[i].front()].order();
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::make_tuple(elt_order[a], orbits[a].size(), orbits[a].front()) <
           std::make_tuple(elt_order[b], orbits[b].size(), orbits[b].front());
  });

  auto out = std::make_shared<ClassTable>();
  out->class_of.assign(n, 0);
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    auto& orbit = orbits[order[rank]];
    ConjugacyClass cls;
    cls.representative = table[orbit.front()];
    cls.size = orbit.size();
    cls.element_order = elt_order[order[rank]];
    cls.members.reserve(orbit.size());
    for (auto idx : orbit) {
      cls.members.push_back(table[idx]);
      out->class_of[idx] = static_cast<std::uint32_t>(rank);
    }
    if (g.order() % cls.size != 0) throw InternalError("class size does not divide |G|");
    out->classes.push_back(std::move(cls));
    out->member_indices.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace

const ClassTable& class_table(const PermGroup& g) {
  g.element_table();  // surfaces CapExceeded before entering call_once
  auto& cache = g.cache();
  std::call_once(cache.classes_once, [&] { cache.classes = compute_classes(g); });
  return *cache.classes;
}

const std::vector<ConjugacyClass>& conjugacy_classes(const PermGroup& g) {
  return class_table(g).classes;
}

std::uint32_t class_index(const PermGroup& g, const Permutation& x) {
  const auto& table = class_table(g);
  auto idx = g.element_table().find(x);
  if (!idx) throw InvalidArgument("element " + x.to_cycle_string() + " is not in the group");
  return table.class_of[*idx];
}

}  // namespace fusionlab
