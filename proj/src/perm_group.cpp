#include "fusionlab/perm_group.hpp"

#include <algorithm>

#include "fusionlab/deadline.hpp"
#include "fusionlab/errors.hpp"

namespace fusionlab {

ElementTable::ElementTable(std::vector<Permutation> sorted_elements)
    : elements_(std::move(sorted_elements)) {
  index_.reserve(elements_.size() * 2);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    index_.emplace(elements_[i], static_cast<std::uint32_t>(i));
  }
}

std::optional<std::uint32_t> ElementTable::find(const Permutation& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t ElementTable::index_of(const Permutation& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) throw InternalError("element " + x.to_cycle_string() + " not in table");
  return it->second;
}

namespace {

using detail::Chain;
using detail::StabilizerLevel;

// Schreier-Sims in the form of Holt's SCHREIERSIMS: a new strong generator is
// attached to every level whose base prefix it fixes, then processing resumes
// at the deepest such level. Schreier generators are visited in
// (generator index, orbit position) order so chains are reproducible.
class ChainBuilder {
 public:
  ChainBuilder(Chain chain, const EngineLimits& limits) : c_(std::move(chain)), limits_(limits) {}

  Chain take() && { return std::move(c_); }

  void add_generator(const Permutation& g) {
    if (g.degree() != c_.degree) throw DegreeMismatch(c_.degree, g.degree());
    c_.generators.push_back(g);
    if (g.is_identity()) return;
    auto [residue, depth] = strip(g, 0);
    if (depth == c_.levels.size() && residue.is_identity()) return;
    attach(residue, 0, depth);
    run(depth);
  }

 private:
  std::pair<Permutation, std::size_t> strip(Permutation h, std::size_t from) const {
    for (std::size_t l = from; l < c_.levels.size(); ++l) {
      const auto& level = c_.levels[l];
      Point b = h(level.base_point);
      auto pos = level.orbit_position[b];
      if (pos < 0) return {std::move(h), l};
      h = h * level.transversal_inverse[static_cast<std::size_t>(pos)];
    }
    return {std::move(h), c_.levels.size()};
  }

  // Adds y to levels [first, last]; creates a new level when last is one past
  // the current chain.
  void attach(const Permutation& y, std::size_t first, std::size_t last) {
    if (last == c_.levels.size()) {
      StabilizerLevel level;
      level.base_point = y.first_moved_point();
      level.orbit_position.assign(c_.degree, -1);
      level.orbit.push_back(level.base_point);
      level.orbit_position[level.base_point] = 0;
      level.transversal.push_back(Permutation::identity(c_.degree));
      level.transversal_inverse.push_back(Permutation::identity(c_.degree));
      c_.levels.push_back(std::move(level));
    }
    c_.strong.push_back(y);
    std::size_t index = c_.strong.size() - 1;
    for (std::size_t l = first; l <= last; ++l) {
      auto& level = c_.levels[l];
      level.generators.push_back(index);
      level.processed.push_back(0);
      extend_orbit(level);
    }
    update_order();
  }

  void extend_orbit(StabilizerLevel& level) {
    for (std::size_t pos = 0; pos < level.orbit.size(); ++pos) {
      check_deadline();
      for (std::size_t gi : level.generators) {
        const Permutation& s = c_.strong[gi];
        Point image = s(level.orbit[pos]);
        if (level.orbit_position[image] >= 0) continue;
        level.orbit_position[image] = static_cast<std::int32_t>(level.orbit.size());
        level.orbit.push_back(image);
        Permutation u = level.transversal[pos] * s;
        level.transversal_inverse.push_back(u.inverse());
        level.transversal.push_back(std::move(u));
      }
    }
  }

  void update_order() {
    unsigned __int128 order = 1;
    for (const auto& level : c_.levels) {
      order *= level.orbit.size();
      if (order > limits_.order_cap) {
        throw CapExceeded("group order exceeds the safety cap of " +
                          std::to_string(limits_.order_cap));
      }
    }
    c_.order = static_cast<std::uint64_t>(order);
  }

  void run(std::size_t start) {
    std::size_t i = start;
    while (true) {
      bool jumped = false;
      if (i < c_.levels.size()) {
        auto& level = c_.levels[i];
        for (std::size_t g = 0; g < level.generators.size() && !jumped; ++g) {
          while (level.processed[g] < level.orbit.size()) {
            check_deadline();
            std::size_t pos = level.processed[g]++;
            const Permutation& s = c_.strong[level.generators[g]];
            Point image = s(level.orbit[pos]);
            auto target = static_cast<std::size_t>(level.orbit_position[image]);
            Permutation h = level.transversal[pos] * s * level.transversal_inverse[target];
            if (h.is_identity()) continue;
            auto [y, j] = strip(std::move(h), i + 1);
            if (j == c_.levels.size() && y.is_identity()) continue;
            attach(y, i + 1, j);
            i = j;
            jumped = true;
            break;
          }
        }
      }
      if (jumped) continue;
      if (i == 0) break;
      --i;
    }
  }

  Chain c_;
  const EngineLimits& limits_;
};

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, EngineLimits limits)
    : limits_(limits), cache_(std::make_shared<detail::GroupCache>()) {
  if (degree == 0) throw InvalidArgument("permutation groups need a positive degree");
  Chain chain;
  chain.degree = degree;
  ChainBuilder builder(std::move(chain), limits_);
  for (const auto& g : generators) builder.add_generator(g);
  chain_ = std::make_shared<const Chain>(std::move(builder).take());
}

PermGroup::PermGroup(std::shared_ptr<const detail::Chain> chain, EngineLimits limits)
    : chain_(std::move(chain)), limits_(limits), cache_(std::make_shared<detail::GroupCache>()) {}

PermGroup PermGroup::trivial(std::size_t degree, EngineLimits limits) {
  return PermGroup(degree, {}, limits);
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> out;
  for (const auto& level : chain_->levels) out.push_back(level.base_point);
  return out;
}

std::span<const Point> PermGroup::fundamental_orbit(std::size_t level) const {
  return chain_->levels.at(level).orbit;
}

bool PermGroup::contains(const Permutation& x) const {
  if (x.degree() != degree()) throw DegreeMismatch(degree(), x.degree());
  Permutation h = x;
  for (const auto& level : chain_->levels) {
    auto pos = level.orbit_position[h(level.base_point)];
    if (pos < 0) return false;
    h = h * level.transversal_inverse[static_cast<std::size_t>(pos)];
  }
  return h.is_identity();
}

bool PermGroup::contains_all(std::span<const Permutation> xs) const {
  return std::all_of(xs.begin(), xs.end(), [this](const Permutation& x) { return contains(x); });
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree() != other.degree()) return false;
  if (other.order() % order() != 0) return false;
  return other.contains_all(strong_generators());
}

bool PermGroup::is_abelian() const {
  const auto& gens = strong_generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    }
  }
  return true;
}

PermGroup PermGroup::with_generators(std::span<const Permutation> extra) const {
  ChainBuilder builder(*chain_, limits_);
  for (const auto& g : extra) builder.add_generator(g);
  return PermGroup(std::make_shared<const Chain>(std::move(builder).take()), limits_);
}

const ElementTable& PermGroup::element_table() const {
  if (order() > limits_.enumeration_cap) {
    throw CapExceeded("group of order " + std::to_string(order()) +
                      " exceeds the enumeration cap of " +
                      std::to_string(limits_.enumeration_cap));
  }
  std::call_once(cache_->elements_once, [this] {
    const auto& levels = chain_->levels;
    // Every element is u_{k-1} ... u_1 u_0 with u_l from level l's transversal.
    std::vector<Permutation> current{Permutation::identity(degree())};
    for (std::size_t l = levels.size(); l-- > 0;) {
      std::vector<Permutation> next;
      next.reserve(current.size() * levels[l].transversal.size());
      for (const auto& prefix : current) {
        check_deadline();
        for (const auto& u : levels[l].transversal) next.push_back(prefix * u);
      }
      current = std::move(next);
    }
    std::sort(current.begin(), current.end());
    cache_->elements = std::make_shared<const ElementTable>(std::move(current));
  });
  return *cache_->elements;
}

bool same_group(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() &&
         b.contains_all(a.strong_generators());
}

PermGroup subgroup_from_elements(std::size_t degree, std::span<const Permutation> elements,
                                 EngineLimits limits) {
  PermGroup h = PermGroup::trivial(degree, limits);
  for (const auto& x : elements) {
    if (!h.contains(x)) h = h.with_generators(std::span<const Permutation>(&x, 1));
  }
  return h;
}

}  // namespace fusionlab
