#include "fusionlab/todd_coxeter.hpp"

#include <deque>

#include "fusionlab/deadline.hpp"
#include "fusionlab/errors.hpp"

namespace fusionlab {

namespace {

constexpr std::uint32_t kUndefined = ~std::uint32_t{0};

class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t max_cosets)
      : pres_(p), columns_(2 * p.generators.size()), max_cosets_(max_cosets) {
    if (max_cosets < 1) throw InvalidArgument("max_cosets must be at least 1");
    new_row();
  }

  CosetTable run() {
    for (std::uint32_t alpha = 0; alpha < table_.size(); ++alpha) {
      check_deadline();
      for (const auto& r : pres_.relators) {
        if (!live(alpha)) break;
        scan_and_fill(alpha, r);
      }
      for (std::size_t x = 0; x < columns_ && live(alpha); ++x) {
        if (table_[alpha][x] == kUndefined) define(alpha, x);
      }
    }
    return compact();
  }

 private:
  bool live(std::uint32_t c) const { return parent_[c] == c; }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      auto next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  std::uint32_t new_row() {
    if (live_count_ >= max_cosets_) {
      throw CapExceeded("coset enumeration exceeded " + std::to_string(max_cosets_) + " cosets");
    }
    auto c = static_cast<std::uint32_t>(table_.size());
    table_.emplace_back(columns_, kUndefined);
    parent_.push_back(c);
    ++live_count_;
    return c;
  }

  void define(std::uint32_t c, std::size_t x) {
    auto d = new_row();
    table_[c][x] = d;
    table_[d][x ^ 1u] = c;
  }

  void scan_and_fill(std::uint32_t alpha, const Word& w) {
    std::uint32_t f = alpha;
    std::uint32_t b = alpha;
    std::size_t i = 0;
    std::size_t j = w.size();  // one past the last unscanned letter from the right
    while (true) {
      while (i < j && table_[f][w[i]] != kUndefined) f = table_[f][w[i++]];
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && table_[b][w[j - 1] ^ 1u] != kUndefined) b = table_[b][w[--j] ^ 1u];
      if (i == j) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        table_[f][w[i]] = b;
        table_[b][w[i] ^ 1u] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  void merge(std::uint32_t k, std::uint32_t l, std::deque<std::uint32_t>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    auto mu = std::min(k, l);
    auto nu = std::max(k, l);
    parent_[nu] = mu;
    --live_count_;
    queue.push_back(nu);
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    std::deque<std::uint32_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      auto gamma = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < columns_; ++x) {
        auto delta = table_[gamma][x];
        if (delta == kUndefined) continue;
        table_[delta][x ^ 1u] = kUndefined;
        auto mu = rep(gamma);
        auto nu = rep(delta);
        if (table_[mu][x] != kUndefined) {
          merge(nu, table_[mu][x], queue);
        } else if (table_[nu][x ^ 1u] != kUndefined) {
          merge(mu, table_[nu][x ^ 1u], queue);
        } else {
          table_[mu][x] = nu;
          table_[nu][x ^ 1u] = mu;
        }
      }
    }
  }

  CosetTable compact() {
    std::vector<std::uint32_t> index(table_.size(), kUndefined);
    std::uint32_t next = 0;
    for (std::uint32_t c = 0; c < table_.size(); ++c) {
      if (live(c)) index[c] = next++;
    }
    CosetTable out;
    out.rows.reserve(next);
    for (std::uint32_t c = 0; c < table_.size(); ++c) {
      if (!live(c)) continue;
      std::vector<std::uint32_t> row(columns_);
      for (std::size_t x = 0; x < columns_; ++x) {
        auto t = table_[c][x];
        if (t == kUndefined) throw InternalError("coset table incomplete after enumeration");
        row[x] = index[rep(t)];
      }
      out.rows.push_back(std::move(row));
    }
    return out;
  }

  const Presentation& pres_;
  std::size_t columns_;
  std::size_t max_cosets_;
  std::size_t live_count_ = 0;
  std::vector<std::vector<std::uint32_t>> table_;
  std::vector<std::uint32_t> parent_;
};

}  // namespace

bool CosetTable::is_consistent(const Presentation& p) const {
  const std::size_t columns = 2 * p.generators.size();
  for (std::size_t c = 0; c < rows.size(); ++c) {
    if (rows[c].size() != columns) return false;
    for (std::size_t x = 0; x < columns; ++x) {
      auto t = rows[c][x];
      if (t >= rows.size() || rows[t][x ^ 1u] != c) return false;
    }
    for (const auto& w : p.relators) {
      std::size_t f = c;
      for (auto letter : w) f = rows[f][letter];
      if (f != c) return false;
    }
  }
  return true;
}

EnumerationResult todd_coxeter(const Presentation& p, std::size_t max_cosets) {
  Enumerator e(p, max_cosets);
  CosetTable table = e.run();
  if (!table.is_consistent(p)) throw InternalError("completed coset table fails its own relators");
  const std::size_t n = table.size();
  std::vector<Permutation> gens;
  for (std::size_t g = 0; g < p.generators.size(); ++g) {
    std::vector<Point> images(n);
    for (std::size_t c = 0; c < n; ++c) images[c] = table.rows[c][2 * g];
    gens.emplace_back(std::move(images));
  }
  PermGroup regular(n, std::move(gens));
  if (regular.order() != n) {
    throw InternalError("regular representation has order " + std::to_string(regular.order()) +
                        " on " + std::to_string(n) + " cosets");
  }
  return EnumerationResult{n, std::move(table), std::move(regular)};
}

}  // namespace fusionlab
