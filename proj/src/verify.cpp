#include "fusionlab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <thread>

#include "fusionlab/conjugacy.hpp"
#include "fusionlab/coset_action.hpp"
#include "fusionlab/deadline.hpp"
#include "fusionlab/errors.hpp"
#include "fusionlab/invariants.hpp"
#include "fusionlab/structure.hpp"
#include "fusionlab/sylow_fusion.hpp"

namespace fusionlab {

const char* to_string(Status s) {
  switch (s) {
    case Status::Confirmed: return "confirmed";
    case Status::Vacuous: return "vacuous";
    case Status::Refuted: return "refuted";
    case Status::Skipped: return "skipped";
    case Status::Error: return "error";
  }
  return "?";
}

Status parse_status(const std::string& text) {
  for (auto s : {Status::Confirmed, Status::Vacuous, Status::Refuted, Status::Skipped, Status::Error}) {
    if (text == to_string(s)) return s;
  }
  throw InvalidArgument("unknown status '" + text + "'");
}

namespace {

std::string p_param(std::uint64_t p) { return "p=" + std::to_string(p); }
std::string pi_param(const PrimeSet& pi) { return "pi=" + pi.to_string(); }
std::string yes(bool b) { return b ? "true" : "false"; }

// Per-group memo of the quantities most suites share. Lives inside one task,
// so nothing here needs locking.
class Context {
 public:
  Context(std::string name, const PermGroup& g, const SuiteConfig& config)
      : name_(std::move(name)), g_(g), config_(config) {}

  const std::string& name() const { return name_; }
  const PermGroup& g() const { return g_; }
  const SuiteConfig& config() const { return config_; }
  std::uint64_t order() const { return g_.order(); }

  std::vector<std::uint64_t> primes() const {
    auto all = prime_divisors(order());
    if (config_.primes.empty()) return all;
    std::vector<std::uint64_t> out;
    for (auto p : all) {
      if (std::find(config_.primes.begin(), config_.primes.end(), p) != config_.primes.end()) out.push_back(p);
    }
    return out;
  }
  std::vector<std::uint64_t> odd_primes() const {
    auto all = primes();
    std::erase(all, 2);
    return all;
  }

  // Configured pi-sets cut down to primes dividing |G|, deduplicated.
  std::vector<PrimeSet> pi_sets() const {
    std::vector<PrimeSet> out;
    for (const auto& pi : config_.pi_sets) {
      auto cut = pi.intersect_divisors(order());
      if (cut.empty() || std::find(out.begin(), out.end(), cut) != out.end()) continue;
      out.push_back(cut);
    }
    return out;
  }

  const PermGroup& sylow(std::uint64_t p) {
    auto it = sylow_.find(p);
    if (it == sylow_.end()) it = sylow_.emplace(p, sylow_subgroup(g_, p)).first;
    return it->second;
  }
  std::uint64_t kp(std::uint64_t p) { return class_counts(g_, PrimeSet{p}).k_pi; }
  std::uint64_t k_sylow(std::uint64_t p) { return class_count(sylow(p)); }
  ExactRatio dp(std::uint64_t p) { return ExactRatio(kp(p), sylow(p).order()); }
  ExactRatio d_pi(const PrimeSet& pi) { return commuting_degree(g_, pi); }
  std::uint64_t k() { return class_count(g_); }
  ExactRatio d() { return commuting_degree(g_); }

  bool nilpotent(std::uint64_t p) {
    auto it = nilpotent_.find(p);
    if (it == nilpotent_.end()) it = nilpotent_.emplace(p, has_normal_pi_complement(g_, PrimeSet{p}).exists).first;
    return it->second;
  }
  const PermGroup& o_p_prime(std::uint64_t p) {
    auto it = o_p_prime_.find(p);
    if (it == o_p_prime_.end()) {
      it = o_p_prime_.emplace(p, o_pi_core(g_, PrimeSet{p}.complement_in(order()))).first;
    }
    return it->second;
  }
  const PermGroup& center() {
    if (!center_) center_ = fusionlab::center(g_);
    return *center_;
  }
  const std::vector<PermGroup>& lattice() {
    if (!lattice_) lattice_ = normal_subgroups(g_);
    return *lattice_;
  }
  bool solvable() {
    if (!solvable_) solvable_ = is_solvable(g_);
    return *solvable_;
  }
  bool simple() {
    if (!simple_) simple_ = is_simple(g_);
    return *simple_;
  }

  // |x^G meet P| for every element x of P, in P's element order.
  const std::vector<std::size_t>& meet_sizes(std::uint64_t p) {
    auto it = meets_.find(p);
    if (it != meets_.end()) return it->second;
    const auto& table = class_table(g_);
    const auto& elements = g_.element_table();
    const auto& pel = sylow(p).elements();
    std::vector<std::uint32_t> cls(pel.size());
    std::map<std::uint32_t, std::size_t> count;
    for (std::size_t i = 0; i < pel.size(); ++i) {
      cls[i] = table.class_of[elements.index_of(pel[i])];
      ++count[cls[i]];
    }
    std::vector<std::size_t> sizes(pel.size());
    for (std::size_t i = 0; i < pel.size(); ++i) sizes[i] = count[cls[i]];
    return meets_.emplace(p, std::move(sizes)).first->second;
  }

  Verdict row(const std::string& suite, std::string params, bool hypothesis,
              std::optional<bool> conclusion) const {
    Verdict v;
    v.suite = suite;
    v.group = name_;
    v.order = order();
    v.params = std::move(params);
    v.hypothesis = hypothesis;
    v.conclusion = conclusion;
    if (!hypothesis) {
      v.status = Status::Vacuous;
    } else if (!conclusion) {
      throw InternalError("suite " + suite + " evaluated no conclusion under a true hypothesis");
    } else {
      v.status = *conclusion ? Status::Confirmed : Status::Refuted;
    }
    return v;
  }

  Verdict p_row(const std::string& suite, std::uint64_t p, bool hypothesis, std::optional<bool> conclusion) {
    Verdict v = row(suite, p_param(p), hypothesis, conclusion);
    v.k_p = kp(p);
    v.sylow_order = sylow(p).order();
    v.d_value = dp(p);
    return v;
  }

 private:
  std::string name_;
  const PermGroup& g_;
  const SuiteConfig& config_;
  std::map<std::uint64_t, PermGroup> sylow_;
  std::map<std::uint64_t, bool> nilpotent_;
  std::map<std::uint64_t, PermGroup> o_p_prime_;
  std::map<std::uint64_t, std::vector<std::size_t>> meets_;
  std::optional<PermGroup> center_;
  std::optional<std::vector<PermGroup>> lattice_;
  std::optional<bool> solvable_;
  std::optional<bool> simple_;
};

using Out = std::vector<Verdict>;

PermGroup quotient(const PermGroup& g, const PermGroup& n) {
  if (n.is_trivial()) return g;
  return coset_action(g, n).image();
}

// q with |S| = q(q^2-1)/2, q = 3,5 mod 8, q > 3, when S also has a Sylow
// 2-subgroup that is elementary abelian of order 4.
std::optional<std::uint64_t> psl2_odd_type(const PermGroup& s) {
  std::optional<std::uint64_t> q_found;
  for (std::uint64_t q = 5;; ++q) {
    const auto size = q * (q * q - 1) / 2;
    if (size > s.order()) break;
    if (size == s.order() && (q % 8 == 3 || q % 8 == 5) && as_prime_power(q).prime != 0) q_found = q;
  }
  if (!q_found) return std::nullopt;
  PermGroup sylow = sylow_subgroup(s, 2);
  if (sylow.order() != 4 || !p_group_profile(sylow, 2).is_elementary_abelian) return std::nullopt;
  return q_found;
}

// Nonabelian simple socle S with C_A(S) = 1.
std::optional<PermGroup> almost_simple_socle(const PermGroup& a) {
  if (a.is_trivial()) return std::nullopt;
  PermGroup soc = socle(a);
  if (soc.is_abelian() || !is_simple(soc)) return std::nullopt;
  if (!centralizer(a, soc).is_trivial()) return std::nullopt;
  return soc;
}

bool is_a4(const PermGroup& q) { return q.order() == 12 && center(q).is_trivial(); }
bool is_s4(const PermGroup& q) { return q.order() == 24 && center(q).is_trivial(); }

// ---------------------------------------------------------------- theorems

void suite_a(Context& c, const std::string& id, Out& out) {
  const std::uint64_t p = 2;
  const auto k2 = c.kp(p);
  const auto sp = c.sylow(p).order();
  const auto kP = c.k_sylow(p);
  const bool many = 2 * k2 > sp;
  const bool structure = c.nilpotent(p) && 2 * kP > sp;
  Verdict v = id == "A.fwd" ? c.p_row(id, p, many, structure) : c.p_row(id, p, structure, many);
  v.witness = "k(P)=" + std::to_string(kP) + ";2-nilpotent=" + yes(c.nilpotent(p));
  out.push_back(std::move(v));
}

void suite_b(Context& c, const std::string& id, Out& out) {
  const std::uint64_t p = 2;
  const bool hyp = c.o_p_prime(p).is_trivial() && 2 * c.kp(p) == c.sylow(p).order();
  std::optional<bool> concl;
  std::string witness;
  if (hyp) {
    PermGroup q = quotient(c.g(), c.center());
    if (is_a4(q)) {
      concl = true;
      witness = "G/Z=A4";
    } else if (is_s4(q)) {
      concl = true;
      witness = "G/Z=S4";
    } else if (auto soc = almost_simple_socle(q)) {
      auto type = psl2_odd_type(*soc);
      concl = type.has_value() && solvable_radical(q).is_trivial();
      witness = "G/Z almost simple;|soc|=" + std::to_string(soc->order()) +
                (type ? ";soc=PSL2(" + std::to_string(*type) + ")" : ";soc not PSL2(q) with q=3,5 mod 8") +
                ";|G/Z:soc|=" + std::to_string(q.order() / soc->order());
    } else {
      concl = false;
      witness = "|G/Z|=" + std::to_string(q.order()) + " is neither A4, S4 nor almost simple";
    }
  }
  Verdict v = c.p_row(id, p, hyp, concl);
  v.witness = witness;
  out.push_back(std::move(v));
}

// Abelian Hall sigma-subgroup of G, found both in G and, when a normal
// pi-complement N exists, in G/N; the two searches must agree.
bool abelian_hall_checked(Context& c, const PrimeSet& sigma, const NormalComplement& nc) {
  const bool in_g = abelian_hall_subgroup(c.g(), sigma).has_value();
  if (nc.exists) {
    PermGroup q = quotient(c.g(), *nc.complement);
    const bool in_q = abelian_hall_subgroup(q, sigma).has_value();
    if (in_q != in_g) throw InternalError("abelian Hall subgroup search disagrees between G and G/N");
  }
  return in_g;
}

void suite_c(Context& c, const std::string& id, Out& out) {
  for (const auto& pi : c.pi_sets()) {
    if (!pi.contains(2)) continue;
    std::vector<std::uint64_t> rest;
    for (auto r : pi) {
      if (r != 2) rest.push_back(r);
    }
    const PrimeSet sigma(rest);
    const auto d = c.d_pi(pi);
    const bool hyp = d > ExactRatio(1, 2);
    auto nc = has_normal_pi_complement(c.g(), pi);
    const bool hall = abelian_hall_checked(c, sigma, nc);
    Verdict v = c.row(id, pi_param(pi), hyp, nc.exists && hall);
    v.d_value = d;
    v.k_p = class_counts(c.g(), pi).k_pi;
    v.sylow_order = pi.part(c.order());
    v.witness = "normal-complement=" + yes(nc.exists) + ";abelian-Hall-sigma=" + yes(hall);
    out.push_back(std::move(v));
  }
}

ExactRatio boundary(std::uint64_t p) { return ExactRatio(p + 1, 2 * p); }

void suite_d(Context& c, const std::string& id, Out& out) {
  for (auto p : c.odd_primes()) {
    const auto d = c.dp(p);
    const bool above = d > boundary(p);
    const bool structure = c.nilpotent(p) && c.sylow(p).is_abelian();
    Verdict v;
    if (id == "D.fwd") {
      v = c.p_row(id, p, above, structure);
    } else if (id == "D.rev") {
      v = c.p_row(id, p, structure, above);
    } else {
      v = c.p_row(id, p, d == boundary(p), !c.nilpotent(p));
    }
    v.witness = "p-nilpotent=" + yes(c.nilpotent(p)) + ";P-abelian=" + yes(c.sylow(p).is_abelian());
    out.push_back(std::move(v));
  }
}

void suite_e(Context& c, const std::string& id, Out& out) {
  for (const auto& pi : c.pi_sets()) {
    if (pi.contains(2)) continue;
    const auto p = pi.smallest();
    const auto d = c.d_pi(pi);
    const bool hyp = d > boundary(p);
    auto nc = has_normal_pi_complement(c.g(), pi);
    const bool via_quotient = nc.exists && *nc.hall_quotient_abelian;
    if (nc.exists && via_quotient != abelian_hall_subgroup(c.g(), pi).has_value()) {
      throw InternalError("G/N abelian disagrees with the abelian Hall subgroup search");
    }
    Verdict v = c.row(id, pi_param(pi), hyp, via_quotient);
    v.d_value = d;
    v.k_p = class_counts(c.g(), pi).k_pi;
    v.sylow_order = pi.part(c.order());
    v.witness = "normal-complement=" + yes(nc.exists) + ";G/N-abelian=" +
                (nc.exists ? yes(*nc.hall_quotient_abelian) : std::string("n/a"));
    out.push_back(std::move(v));
  }
}

void suite_f(Context& c, const std::string& id, Out& out) {
  for (auto p : c.odd_primes()) {
    const bool hyp = c.o_p_prime(p).is_trivial() && c.dp(p) == boundary(p);
    std::optional<bool> concl;
    std::string witness;
    if (hyp) {
      const auto& P = c.sylow(p);
      PermGroup n = normalizer(c.g(), P);
      PermGroup cen = centralizer(c.g(), P);
      PermGroup comm = commutator_subgroup(c.g(), P, n);
      const bool abelian = P.is_abelian();
      const auto nc_index = n.order() / cen.order();
      std::string factor = "none";
      for (const auto& b : c.lattice()) {
        if (!b.is_abelian() || !is_p_group(b, p)) continue;
        for (const auto& a : c.lattice()) {
          if (a.order() * b.order() != c.order() || !intersection(a, b).is_trivial()) continue;
          if (a.order() == 2 * p && !a.is_abelian()) {
            factor = "A=D" + std::to_string(2 * p) + ";|B|=" + std::to_string(b.order());
          } else if (p_part(a.order(), p) == p) {
            auto soc = almost_simple_socle(a);
            if (soc && p_part(soc->order(), p) == p && center(a).is_trivial()) {
              factor = "A almost simple;|A|=" + std::to_string(a.order()) + ";|soc(A)|=" +
                       std::to_string(soc->order()) + ";|B|=" + std::to_string(b.order());
            }
          }
          if (factor != "none") break;
        }
        if (factor != "none") break;
      }
      concl = abelian && nc_index == 2 && comm.order() == p && factor != "none";
      witness = "P-abelian=" + yes(abelian) + ";|N/C|=" + std::to_string(nc_index) +
                ";|[P,N]|=" + std::to_string(comm.order()) + ";" + factor;
    }
    Verdict v = c.p_row(id, p, hyp, concl);
    v.witness = witness;
    out.push_back(std::move(v));
  }
}

// ------------------------------------------------------------------ lemmas

void suite_burnside_fusion(Context& c, const std::string& id, Out& out) {
  for (auto p : c.primes()) {
    const auto& P = c.sylow(p);
    PermGroup n = normalizer(c.g(), P);
    PermGroup cen = centralizer(c.g(), P);
    Verdict v = c.p_row(id, p, true, controls_fusion(c.g(), n, cen));
    v.witness = "|N(P)|=" + std::to_string(n.order()) + ";|C(P)|=" + std::to_string(cen.order());
    out.push_back(std::move(v));
  }
}

void suite_burnside_complement(Context& c, const std::string& id, Out& out) {
  for (auto p : c.primes()) {
    const auto& P = c.sylow(p);
    PermGroup n = normalizer(c.g(), P);
    const bool central = n.is_subgroup_of(centralizer(c.g(), P));
    out.push_back(c.p_row(id, p, central, c.nilpotent(p)));
  }
}

void suite_self_fusion(Context& c, const std::string& id, Out& out) {
  for (auto p : c.primes()) {
    const auto& P = c.sylow(p);
    const bool controls = controls_fusion(c.g(), P, P);
    const bool nil = c.nilpotent(p);
    out.push_back(id == "self-fusion.fwd" ? c.p_row(id, p, nil, controls) : c.p_row(id, p, controls, nil));
  }
}

void suite_complement_count(Context& c, const std::string& id, Out& out) {
  for (auto p : c.primes()) {
    const auto kp = c.kp(p);
    const auto kP = c.k_sylow(p);
    Verdict v = c.p_row(id, p, true, kp <= kP && (kp == kP) == c.nilpotent(p));
    v.witness = "k(P)=" + std::to_string(kP) + ";p-nilpotent=" + yes(c.nilpotent(p));
    out.push_back(std::move(v));
  }
}

void suite_full_count(Context& c, const std::string& id, Out& out) {
  for (auto p : c.primes()) {
    const bool full = c.dp(p) == ExactRatio(1, 1);
    const bool structure = c.nilpotent(p) && c.sylow(p).is_abelian();
    Verdict v = c.p_row(id, p, true, full == structure);
    v.witness = "d_p=1:" + yes(full) + ";p-nilpotent-and-P-abelian=" + yes(structure);
    out.push_back(std::move(v));
  }
}

void suite_isolated_centralizer(Context& c, const std::string& id, Out& out) {
  for (auto p : c.primes()) {
    const auto& P = c.sylow(p);
    const auto& meets = c.meet_sizes(p);
    bool ok = true;
    std::string witness;
    std::size_t isolated = 0;
    for (std::size_t i = 0; i < P.elements().size(); ++i) {
      const auto& x = P.elements()[i];
      const bool iso = meets[i] == 1;
      isolated += iso;
      const bool controls = controls_p_fusion(c.g(), centralizer(c.g(), x), p);
      if (iso != controls) {
        ok = false;
        witness = "x=" + x.to_cycle_string() + ";isolated=" + yes(iso) + ";C(x)-controls=" + yes(controls);
        break;
      }
    }
    Verdict v = c.p_row(id, p, true, ok);
    v.witness = ok ? "isolated-in-P=" + std::to_string(isolated) : witness;
    out.push_back(std::move(v));
  }
}

void suite_zstar(Context& c, const std::string& id, Out& out) {
  for (auto p : c.primes()) {
    const auto reports = glauberman_witnesses(c.g(), p);
    PermGroup zstar = z_p_star(c.g(), p);
    const auto& P = c.sylow(p);
    PermGroup zp = center(P);
    bool any = false;
    bool ok = true;
    std::string witness;
    // Isolated elements of P: every one for p = 2, order-p ones for odd p.
    const auto& meets = c.meet_sizes(p);
    for (std::size_t i = 0; i < P.elements().size(); ++i) {
      const auto& x = P.elements()[i];
      if (x.is_identity() || meets[i] != 1) continue;
      if (p != 2 && x.order() != p) continue;
      any = true;
      if (!zstar.contains(x) || !zp.contains(x)) {
        ok = false;
        witness = "x=" + x.to_cycle_string() + " isolated but outside Z*_p or Z(P)";
        break;
      }
    }
    for (const auto& r : reports) {
      if (r.is_isolated && !zp.contains(r.element)) ok = false;
    }
    Verdict v = c.p_row(id, p, any, any ? std::optional<bool>(ok) : std::nullopt);
    v.witness = ok ? "|Z*_p|=" + std::to_string(zstar.order()) : witness;
    out.push_back(std::move(v));
  }
}

void suite_isolated_powers(Context& c, const std::string& id, Out& out) {
  for (auto p : c.primes()) {
    const auto& P = c.sylow(p);
    const auto& meets = c.meet_sizes(p);
    const auto& pel = P.elements();
    bool any = false;
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < pel.size() && ok; ++i) {
      if (pel[i].is_identity() || meets[i] != 1) continue;
      any = true;
      Permutation y = pel[i];
      for (std::uint64_t e = 1; e < pel[i].order(); ++e, y = y * pel[i]) {
        auto pos = std::lower_bound(pel.begin(), pel.end(), y) - pel.begin();
        if (meets[pos] != 1) {
          ok = false;
          witness = "x=" + pel[i].to_cycle_string() + ";power " + std::to_string(e) + " not isolated";
          break;
        }
      }
    }
    Verdict v = c.p_row(id, p, any, any ? std::optional<bool>(ok) : std::nullopt);
    v.witness = witness;
    out.push_back(std::move(v));
  }
}

void suite_degree_monotone(Context& c, const std::string& id, Out& out) {
  for (const auto& pi : c.pi_sets()) {
    if (pi.size() < 2) continue;
    const auto d = c.d_pi(pi);
    const auto& ps = pi.primes();
    bool ok = true;
    std::string witness;
    for (std::uint32_t mask = 1; mask < (1u << ps.size()); ++mask) {
      std::vector<std::uint64_t> sub;
      for (std::size_t i = 0; i < ps.size(); ++i) {
        if (mask & (1u << i)) sub.push_back(ps[i]);
      }
      const PrimeSet mu(sub);
      const auto dm = c.d_pi(mu);
      if (!(d <= dm && dm <= ExactRatio(1, 1))) {
        ok = false;
        witness = "mu=" + mu.to_string() + ";d_mu=" + dm.to_string();
        break;
      }
    }
    Verdict v = c.row(id, pi_param(pi), true, ok);
    v.d_value = d;
    v.witness = witness;
    out.push_back(std::move(v));
  }
}

void suite_degree_quotient(Context& c, const std::string& id, Out& out) {
  std::vector<PrimeSet> sets;
  for (auto p : c.primes()) sets.push_back(PrimeSet{p});
  for (const auto& pi : c.pi_sets()) {
    if (std::find(sets.begin(), sets.end(), pi) == sets.end()) sets.push_back(pi);
  }
  for (const auto& pi : sets) {
    const auto d = c.d_pi(pi);
    bool ok = true;
    std::string witness;
    for (const auto& n : c.lattice()) {
      check_deadline();
      const auto qc = quotient_class_counts(c.g(), n, pi);
      const ExactRatio dq(qc.k_pi, pi.part(c.order() / n.order()));
      const ExactRatio dn(class_counts(n, pi).k_pi, pi.part(n.order()));
      if (!(d <= dq * dn)) {
        ok = false;
        witness = "|N|=" + std::to_string(n.order()) + ";d(G/N)=" + dq.to_string() + ";d(N)=" + dn.to_string();
        break;
      }
    }
    Verdict v = c.row(id, pi.size() == 1 ? p_param(pi.smallest()) : pi_param(pi), true, ok);
    v.d_value = d;
    v.witness = ok ? "normal-subgroups=" + std::to_string(c.lattice().size()) : witness;
    out.push_back(std::move(v));
  }
}

void suite_pgroup_degree(Context& c, const std::string& id, Out& out) {
  for (auto p : c.primes()) {
    const bool hyp = is_p_group(c.g(), p) && !c.g().is_abelian();
    Verdict v = c.row(id, p_param(p), hyp, c.d() < ExactRatio(p + 1, p * p));
    v.d_value = c.d();
    out.push_back(std::move(v));
  }
}

void suite_no_normal_sylow(Context& c, const std::string& id, Out& out) {
  for (auto p : c.primes()) {
    const bool hyp = !is_normal(c.g(), c.sylow(p));
    Verdict v = c.row(id, p_param(p), hyp, c.d() <= ExactRatio(1, p));
    v.d_value = c.d();
    v.sylow_order = c.sylow(p).order();
    out.push_back(std::move(v));
  }
}

void suite_lescot(Context& c, const std::string& id, Out& out) {
  const auto d = c.d();
  const bool hyp = d >= ExactRatio(1, 2);
  std::optional<bool> concl;
  std::string witness;
  if (hyp) {
    auto type = lescot_classify(c.g());
    witness = std::string(to_string(type.tag));
    switch (type.tag) {
      case LescotTag::Abelian:
        concl = d == ExactRatio(1, 1);
        break;
      case LescotTag::TwoCentralType:
        concl = ExactRatio(1, 2) < d && d <= ExactRatio(5, 8);
        witness += ";m=" + std::to_string(type.m) + ";|P|=" + std::to_string(type.first->order()) +
                   ";|A|=" + std::to_string(type.second->order());
        break;
      case LescotTag::GmType:
        concl = d == ExactRatio(1, 2);
        witness += ";m=" + std::to_string(type.m) + ";|A|=" + std::to_string(type.second->order());
        break;
      default:
        concl = false;
        witness += ";" + type.reason;
    }
  }
  Verdict v = c.row(id, "", hyp, concl);
  v.d_value = d;
  v.witness = witness;
  out.push_back(std::move(v));
}

void suite_lescot_corollary(Context& c, const std::string& id, Out& out) {
  const auto d = c.d();
  const bool two_group = c.order() > 1 && is_p_group(c.g(), 2);
  const bool odd = c.order() % 2 == 1;
  bool ok = true;
  if (two_group) ok = d != ExactRatio(1, 2);
  if (odd && d >= ExactRatio(1, 2)) ok = c.g().is_abelian();
  Verdict v = c.row(id, "", two_group || odd, ok);
  v.d_value = d;
  out.push_back(std::move(v));
}

void suite_pprime_quotient(Context& c, const std::string& id, Out& out) {
  for (auto p : c.primes()) {
    const auto kp = c.kp(p);
    bool any = false;
    bool ok = true;
    std::string witness;
    std::mt19937_64 rng(c.config().seed ^ (std::hash<std::string>{}(c.name()) + p));
    for (const auto& n : c.lattice()) {
      if (n.is_trivial() || n.order() % p == 0) continue;
      any = true;
      const auto via_cosets = quotient_class_counts(c.g(), n, PrimeSet{p}).k_pi;
      if (via_cosets != kp) {
        ok = false;
        witness = "|N|=" + std::to_string(n.order()) + ";k_p(G/N)=" + std::to_string(via_cosets);
        break;
      }
      // Second route through the permutation image of G/N, plus sampled
      // checks that the projection is a homomorphism.
      if (c.order() / n.order() <= 2000) {
        CosetAction action(c.g(), n, true);
        const auto via_image = class_counts(action.image(), PrimeSet{p}).k_pi;
        if (via_image != via_cosets) throw InternalError("k_p(G/N) differs between coset and image routes");
        const auto& el = c.g().elements();
        std::uniform_int_distribution<std::size_t> pick(0, el.size() - 1);
        for (int t = 0; t < 16; ++t) {
          const auto& x = el[pick(rng)];
          const auto& y = el[pick(rng)];
          if (action.project(x) * action.project(y) != action.project(x * y)) {
            throw InternalError("coset projection is not a homomorphism");
          }
        }
      }
    }
    Verdict v = c.p_row(id, p, any, any ? std::optional<bool>(ok) : std::nullopt);
    v.witness = witness;
    out.push_back(std::move(v));
  }
}

void suite_two_local_bound(Context& c, const std::string& id, Out& out) {
  const std::uint64_t p = 2;
  const auto& P = c.sylow(p);
  const bool hyp = c.o_p_prime(p).is_trivial() && c.center().is_trivial() && P.order() > 1;
  std::optional<bool> concl;
  std::string witness;
  if (hyp) {
    const auto k2 = c.kp(p);
    concl = 2 * k2 <= P.order();
    if (*concl && 2 * k2 == P.order()) {
      auto profile = p_group_profile(P, p);
      if (k2 == 2) {
        concl = P.order() == 4 && profile.is_elementary_abelian;
        witness = "case=elementary-abelian-4";
      } else {
        bool ok = profile.is_extraspecial;
        witness = "case=extraspecial;|P|=" + std::to_string(P.order());
        if (ok) {
          const auto& table = class_table(c.g());
          const auto& elements = c.g().element_table();
          const Permutation* z = nullptr;
          for (const auto& x : profile.center.elements()) {
            if (!x.is_identity()) z = &x;
          }
          const auto zc = table.class_of[elements.index_of(*z)];
          const auto& meets = c.meet_sizes(p);
          const auto& pel = P.elements();
          for (std::size_t i = 0; i < pel.size(); ++i) {
            if (pel[i].is_identity()) continue;
            const bool in_z_class = table.class_of[elements.index_of(pel[i])] == zc;
            if (meets[i] != (in_z_class ? 3u : 2u)) {
              ok = false;
              witness += ";y=" + pel[i].to_cycle_string() + " meets P in " + std::to_string(meets[i]);
              break;
            }
          }
        }
        concl = ok;
      }
    }
  }
  Verdict v = c.p_row(id, p, hyp, concl);
  v.witness = witness;
  out.push_back(std::move(v));
}

void suite_abelian_sylow(Context& c, const std::string& id, Out& out) {
  for (auto p : c.odd_primes()) {
    out.push_back(c.p_row(id, p, c.dp(p) >= boundary(p), c.sylow(p).is_abelian()));
  }
}

bool is_a4_group(const PermGroup& g) { return is_a4(g); }

void suite_solvable_a4(Context& c, const std::string& id, Out& out) {
  const std::uint64_t p = 2;
  const bool hyp = c.solvable() && c.o_p_prime(p).is_trivial() && same_group(residual(c.g(), PrimeSet{p}), c.g());
  std::optional<bool> concl;
  if (hyp) concl = (c.dp(p) == ExactRatio(1, 2)) == is_a4_group(c.g());
  out.push_back(c.p_row(id, p, hyp, concl));
}

void suite_solvable_quotient(Context& c, const std::string& id, Out& out) {
  const std::uint64_t p = 2;
  const bool hyp = c.solvable() && c.o_p_prime(p).is_trivial() && c.dp(p) == ExactRatio(1, 2);
  std::optional<bool> concl;
  std::string witness;
  if (hyp) {
    PermGroup q = quotient(c.g(), c.center());
    concl = is_a4(q) || is_s4(q);
    witness = "|G/Z|=" + std::to_string(q.order());
  }
  Verdict v = c.p_row(id, p, hyp, concl);
  v.witness = witness;
  out.push_back(std::move(v));
}

void suite_simple_psl2(Context& c, const std::string& id, Out& out) {
  const std::uint64_t p = 2;
  const bool hyp = !c.g().is_abelian() && c.simple();
  std::optional<bool> concl;
  std::string witness;
  if (hyp) {
    auto type = psl2_odd_type(c.g());
    concl = (c.dp(p) == ExactRatio(1, 2)) == type.has_value();
    if (type) witness = "PSL2(" + std::to_string(*type) + ")";
  }
  Verdict v = c.p_row(id, p, hyp, concl);
  v.witness = witness;
  out.push_back(std::move(v));
}

void suite_almost_simple(Context& c, const std::string& id, Out& out) {
  const std::uint64_t p = 2;
  const bool hyp = !c.g().is_trivial() && c.dp(p) == ExactRatio(1, 2) && solvable_radical(c.g()).is_trivial();
  std::optional<bool> concl;
  std::string witness;
  if (hyp) {
    auto soc = almost_simple_socle(c.g());
    concl = soc.has_value();
    if (soc) witness = "|soc|=" + std::to_string(soc->order());
  }
  Verdict v = c.p_row(id, p, hyp, concl);
  v.witness = witness;
  out.push_back(std::move(v));
}

void suite_perfect_reduction(Context& c, const std::string& id, Out& out) {
  const std::uint64_t p = 2;
  const bool perfect = !c.g().is_trivial() && derived_series(c.g()).is_perfect;
  const bool hyp = perfect && c.o_p_prime(p).is_trivial() && c.dp(p) == ExactRatio(1, 2);
  std::optional<bool> concl;
  std::string witness;
  if (hyp) {
    auto type = psl2_odd_type(c.g());
    concl = c.simple() && type.has_value();
    if (type) witness = "PSL2(" + std::to_string(*type) + ")";
  }
  Verdict v = c.p_row(id, p, hyp, concl);
  v.witness = witness;
  out.push_back(std::move(v));
}

void suite_odd_order_hall(Context& c, const std::string& id, Out& out) {
  if (c.order() % 2 == 0) return;
  std::vector<PrimeSet> sets;
  for (auto p : c.primes()) sets.push_back(PrimeSet{p});
  for (const auto& pi : c.pi_sets()) {
    if (std::find(sets.begin(), sets.end(), pi) == sets.end()) sets.push_back(pi);
  }
  for (const auto& sigma : sets) {
    const auto d = c.d_pi(sigma);
    auto nc = has_normal_pi_complement(c.g(), sigma);
    const bool concl = nc.exists && *nc.hall_quotient_abelian;
    Verdict v = c.row(id, sigma.size() == 1 ? p_param(sigma.smallest()) : pi_param(sigma), d >= ExactRatio(1, 2),
                      concl);
    v.d_value = d;
    out.push_back(std::move(v));
  }
}

void suite_frobenius_count(Context& c, const std::string& id, Out& out) {
  for (auto p : c.primes()) {
    const auto& P = c.sylow(p);
    const auto index = c.order() / P.order();
    bool hyp = index > 1 && is_prime(index) && is_normal(c.g(), P) &&
               p_group_profile(P, p).is_elementary_abelian;
    if (hyp) {
      // Frobenius kernel P: every nontrivial x in P has centralizer P.
      for (const auto& cls : conjugacy_classes(c.g())) {
        if (cls.element_order == p && cls.size != index) hyp = false;
      }
    }
    std::optional<bool> concl;
    if (hyp) concl = c.kp(p) == (P.order() - 1) / index + 1;
    Verdict v = c.p_row(id, p, hyp, concl);
    if (hyp) v.witness = "r=" + std::to_string(index) + ";(p^k-1)/r+1=" + std::to_string((P.order() - 1) / index + 1);
    out.push_back(std::move(v));
  }
}

void suite_simple_bound(Context& c, const std::string& id, Out& out) {
  for (auto p : c.primes()) {
    const auto& T = c.sylow(p);
    const bool hyp = !c.g().is_abelian() && c.simple() && T.is_abelian();
    std::optional<bool> concl;
    if (hyp) concl = 2 * c.kp(p) <= T.order() + 1;
    Verdict v = c.p_row(id, p, hyp, concl);
    if (hyp) v.witness = "(|T|+1)/2=" + std::to_string((T.order() + 1) / 2);
    out.push_back(std::move(v));
  }
}

using SuiteFn = void (*)(Context&, const std::string&, Out&);

struct SuiteDef {
  const char* id;
  SuiteFn fn;
  bool theorem;
};

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> defs{
      {"A.fwd", suite_a, true},
      {"A.rev", suite_a, true},
      {"B", suite_b, true},
      {"C", suite_c, true},
      {"D.fwd", suite_d, true},
      {"D.rev", suite_d, true},
      {"D.boundary", suite_d, true},
      {"E", suite_e, true},
      {"F", suite_f, true},
      {"burnside-fusion", suite_burnside_fusion, false},
      {"burnside-complement", suite_burnside_complement, false},
      {"self-fusion.fwd", suite_self_fusion, false},
      {"self-fusion.rev", suite_self_fusion, false},
      {"complement-count", suite_complement_count, false},
      {"full-count", suite_full_count, false},
      {"isolated-centralizer", suite_isolated_centralizer, false},
      {"zstar", suite_zstar, false},
      {"isolated-powers", suite_isolated_powers, false},
      {"degree-monotone", suite_degree_monotone, false},
      {"degree-quotient", suite_degree_quotient, false},
      {"pgroup-degree", suite_pgroup_degree, false},
      {"no-normal-sylow", suite_no_normal_sylow, false},
      {"lescot", suite_lescot, false},
      {"lescot-corollary", suite_lescot_corollary, false},
      {"pprime-quotient", suite_pprime_quotient, false},
      {"two-local-bound", suite_two_local_bound, false},
      {"abelian-sylow", suite_abelian_sylow, false},
      {"solvable-a4", suite_solvable_a4, false},
      {"solvable-quotient", suite_solvable_quotient, false},
      {"simple-psl2", suite_simple_psl2, false},
      {"almost-simple", suite_almost_simple, false},
      {"perfect-reduction", suite_perfect_reduction, false},
      {"odd-order-hall", suite_odd_order_hall, false},
      {"frobenius-count", suite_frobenius_count, false},
      {"simple-bound", suite_simple_bound, false},
  };
  return defs;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& d : registry()) out.emplace_back(d.id);
    return out;
  }();
  return ids;
}

bool is_theorem_suite(const std::string& id) {
  for (const auto& d : registry()) {
    if (id == d.id) return d.theorem;
  }
  return false;
}

std::vector<std::string> expand_suite_selector(const std::string& selector) {
  std::vector<std::string> out;
  for (const auto& d : registry()) {
    const std::string id = d.id;
    const auto dot = id.find('.');
    const std::string family = id.substr(0, dot);
    const bool match = selector == "all" || (selector == "lemmas" && !d.theorem) || selector == id ||
                       selector == family;
    if (match) out.push_back(id);
  }
  if (out.empty()) throw InvalidArgument("unknown suite '" + selector + "'");
  return out;
}

std::vector<Verdict> verify_group(const std::string& name, const PermGroup& g, const SuiteConfig& config) {
  std::optional<ScopedDeadline> deadline;
  if (config.timeout_ms > 0) deadline.emplace(std::chrono::milliseconds(config.timeout_ms));
  Context ctx(name, g, config);
  std::vector<Verdict> out;
  for (const auto& d : registry()) {
    const std::string id = d.id;
    if (!config.suites.empty() && std::find(config.suites.begin(), config.suites.end(), id) == config.suites.end()) {
      continue;
    }
    Out rows;
    Verdict failure;
    failure.suite = id;
    failure.group = name;
    failure.order = g.order();
    try {
      d.fn(ctx, id, rows);
      out.insert(out.end(), rows.begin(), rows.end());
      continue;
    } catch (const CapExceeded& e) {
      failure.status = Status::Skipped;
      failure.witness = std::string("cap: ") + e.what();
    } catch (const Error& e) {
      failure.status = Status::Error;
      failure.witness = std::string("internal: ") + e.what();
    }
    out.push_back(std::move(failure));
  }
  return out;
}

RunSummary summarize(const std::vector<Verdict>& verdicts) {
  RunSummary s;
  for (const auto& v : verdicts) {
    switch (v.status) {
      case Status::Confirmed: ++s.confirmed; break;
      case Status::Vacuous: ++s.vacuous; break;
      case Status::Refuted: ++s.refuted; break;
      case Status::Skipped: ++s.skipped; break;
      case Status::Error: ++s.errors; break;
    }
  }
  return s;
}

std::vector<Verdict> run_suite(const std::vector<CatalogEntry>& catalog, const SuiteConfig& config,
                               RunSummary* summary) {
  std::vector<const CatalogEntry*> selected;
  std::size_t above = 0;
  for (const auto& e : catalog) {
    if (e.group.order() > config.max_order) {
      ++above;
    } else {
      selected.push_back(&e);
    }
  }
  std::stable_sort(selected.begin(), selected.end(),
                   [](const CatalogEntry* a, const CatalogEntry* b) { return a->name < b->name; });

  std::vector<std::vector<Verdict>> per_group(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      per_group[i] = verify_group(selected[i]->name, selected[i]->group, config);
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(selected.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  std::vector<Verdict> out;
  for (auto& rows : per_group) out.insert(out.end(), std::make_move_iterator(rows.begin()),
                                          std::make_move_iterator(rows.end()));
  if (summary) {
    *summary = summarize(out);
    summary->groups_run = selected.size();
    summary->groups_above_max_order = above;
  }
  return out;
}

}  // namespace fusionlab
