#include "fusionlab/coset_action.hpp"

#include "fusionlab/deadline.hpp"
#include "fusionlab/errors.hpp"
#include "fusionlab/structure.hpp"

namespace fusionlab {

namespace {

PermGroup checked_parent(const PermGroup& g, const PermGroup& n, bool require_normal) {
  if (!n.is_subgroup_of(g)) throw InvalidArgument("coset_action: N is not a subgroup of G");
  if (require_normal && !is_normal(g, n)) {
    throw InvalidArgument("coset_action: N is not normal, so the coset action is not a quotient");
  }
  return g;
}

}  // namespace

CosetAction::CosetAction(const PermGroup& g, const PermGroup& n, bool require_normal)
    : elements_(&checked_parent(g, n, require_normal).element_table()),
      group_(g),
      image_(PermGroup::trivial(1)) {
  const auto& table = *elements_;
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  label_.assign(table.size(), unset);
  const auto& nel = n.elements();
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (label_[i] != unset) continue;
    check_deadline();
    const auto c = static_cast<std::uint32_t>(representatives_.size());
    representatives_.push_back(table[i]);
    for (const auto& h : nel) label_[table.index_of(h * table[i])] = c;
  }
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) gens.push_back(project(s));
  image_ = PermGroup(representatives_.size(), std::move(gens), g.limits());
}

std::uint32_t CosetAction::coset_of(const Permutation& x) const {
  auto idx = elements_->find(x);
  if (!idx) throw InvalidArgument("coset_action: element not in G");
  return label_[*idx];
}

Permutation CosetAction::project(const Permutation& x) const {
  std::vector<Point> images(representatives_.size());
  for (std::size_t c = 0; c < representatives_.size(); ++c) {
    images[c] = coset_of(representatives_[c] * x);
  }
  return Permutation(std::move(images));
}

CosetAction coset_action(const PermGroup& g, const PermGroup& n, bool require_normal) {
  return CosetAction(g, n, require_normal);
}

}  // namespace fusionlab
