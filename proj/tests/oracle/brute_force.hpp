#pragma once

// Naive reference implementations over a full multiplication table. They
// share nothing with the engine beyond reading the generator image arrays,
// so agreement between the two is meaningful.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<std::uint32_t>;

inline Perm mul(const Perm& a, const Perm& b) {  // a first, then b
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

inline Perm inv(const Perm& a) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<std::uint32_t>(i);
  return out;
}

struct Group {
  std::vector<Perm> el;  // sorted
  std::vector<std::vector<std::uint32_t>> table;
  std::vector<std::uint32_t> inverse;
  std::uint32_t identity = 0;

  std::uint32_t index(const Perm& x) const {
    return static_cast<std::uint32_t>(std::lower_bound(el.begin(), el.end(), x) - el.begin());
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table[a][b]; }
  std::uint32_t conj(std::uint32_t x, std::uint32_t g) const { return mul(mul(inverse[g], x), g); }
  std::uint64_t order_of(std::uint32_t x) const {
    std::uint64_t n = 1;
    for (std::uint32_t y = x; y != identity; y = mul(y, x)) ++n;
    return n;
  }
};

// Closure of the generators by repeated right multiplication.
inline Group closure(std::size_t degree, const std::vector<Perm>& gens) {
  Perm id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        auto y = mul(x, g);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  Group G;
  G.el.assign(seen.begin(), seen.end());
  const auto n = G.el.size();
  G.table.assign(n, std::vector<std::uint32_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) G.table[a][b] = G.index(mul(G.el[a], G.el[b]));
  }
  G.identity = G.index(id);
  G.inverse.resize(n);
  for (std::size_t a = 0; a < n; ++a) G.inverse[a] = G.index(inv(G.el[a]));
  return G;
}

using Subset = std::set<std::uint32_t>;

// Subgroup generated by a set of element indices, by table closure.
inline Subset generated(const Group& G, const Subset& s) {
  Subset h{G.identity};
  std::vector<std::uint32_t> frontier{G.identity};
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (auto x : frontier) {
      for (auto g : s) {
        auto y = G.mul(x, g);
        if (h.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return h;
}

inline std::vector<Subset> classes(const Group& G) {
  std::vector<Subset> out;
  std::vector<bool> done(G.el.size(), false);
  for (std::uint32_t x = 0; x < G.el.size(); ++x) {
    if (done[x]) continue;
    Subset c;
    for (std::uint32_t g = 0; g < G.el.size(); ++g) c.insert(G.conj(x, g));
    for (auto y : c) done[y] = true;
    out.push_back(std::move(c));
  }
  return out;
}

inline Subset centralizer(const Group& G, std::uint32_t x) {
  Subset c;
  for (std::uint32_t g = 0; g < G.el.size(); ++g) {
    if (G.mul(x, g) == G.mul(g, x)) c.insert(g);
  }
  return c;
}

inline bool is_p_power(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

// Greedy growth of a p-subgroup until no p-element can be added; a maximal
// p-subgroup is a Sylow subgroup.
inline Subset some_sylow(const Group& G, std::uint64_t p) {
  Subset h{G.identity};
  bool grown = true;
  while (grown) {
    grown = false;
    for (std::uint32_t x = 0; x < G.el.size(); ++x) {
      if (h.count(x) || !is_p_power(G.order_of(x), p)) continue;
      Subset gens = h;
      gens.insert(x);
      auto k = generated(G, gens);
      if (is_p_power(k.size(), p)) {
        h = std::move(k);
        grown = true;
      }
    }
  }
  return h;
}

inline std::set<Subset> all_sylows(const Group& G, std::uint64_t p) {
  const auto P = some_sylow(G, p);
  std::set<Subset> out;
  for (std::uint32_t g = 0; g < G.el.size(); ++g) {
    Subset c;
    for (auto x : P) c.insert(G.conj(x, g));
    out.insert(std::move(c));
  }
  return out;
}

// Number of classes of p-elements (identity included).
inline std::uint64_t k_p(const Group& G, std::uint64_t p) {
  std::uint64_t n = 0;
  for (const auto& c : classes(G)) n += is_p_power(G.order_of(*c.begin()), p);
  return n;
}

// p-nilpotent iff the p'-elements form a subgroup.
inline bool p_nilpotent(const Group& G, std::uint64_t p) {
  std::vector<std::uint32_t> pprime;
  for (std::uint32_t x = 0; x < G.el.size(); ++x) {
    if (G.order_of(x) % p != 0) pprime.push_back(x);
  }
  std::set<std::uint32_t> s(pprime.begin(), pprime.end());
  for (auto a : pprime) {
    for (auto b : pprime) {
      if (!s.count(G.mul(a, b))) return false;
    }
  }
  return true;
}

inline bool is_abelian(const Group& G, const Subset& h) {
  for (auto a : h) {
    for (auto b : h) {
      if (G.mul(a, b) != G.mul(b, a)) return false;
    }
  }
  return true;
}

// k_p(G) again, as the number of conjugation orbits on p-elements counted by
// the orbit-counting lemma: the average over g of the p-elements g fixes.
inline std::uint64_t k_p_burnside(const Group& G, std::uint64_t p) {
  std::uint64_t fixed = 0;
  std::vector<bool> pel(G.el.size());
  for (std::uint32_t x = 0; x < G.el.size(); ++x) pel[x] = is_p_power(G.order_of(x), p);
  for (std::uint32_t g = 0; g < G.el.size(); ++g) {
    for (std::uint32_t x = 0; x < G.el.size(); ++x) fixed += pel[x] && G.mul(x, g) == G.mul(g, x);
  }
  return fixed / G.el.size();
}

}  // namespace oracle
