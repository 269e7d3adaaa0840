// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: fusionlab_acceptance [path-to-fusionlab-cli]

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "fusionlab/catalog.hpp"
#include "fusionlab/families.hpp"
#include "fusionlab/invariants.hpp"
#include "fusionlab/presentation.hpp"
#include "fusionlab/structure.hpp"
#include "fusionlab/sylow_fusion.hpp"
#include "fusionlab/todd_coxeter.hpp"
#include "fusionlab/verify.hpp"
#include "oracle/compare.hpp"

using namespace fusionlab;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Collects failures for one criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

ExactRatio dp(const PermGroup& g, std::uint64_t p) { return commuting_degree(g, PrimeSet{p}); }

std::string equal_text(const std::string& label, const ExactRatio& got, const ExactRatio& want) {
  return label + " = " + got.to_string() + ", expected " + want.to_string();
}

void criterion_invariants(Check& c) {
  auto a4 = alternating_group(4);
  c.expect(dp(a4, 2) == ExactRatio(1, 2), equal_text("d2(A4)", dp(a4, 2), {1, 2}));
  c.expect(k_p(a4, 2) == 2, "k2(A4) != 2");
  auto a5 = alternating_group(5);
  c.expect(k_p(a5, 3) == 2 && sylow_subgroup(a5, 3).order() == 3, "k3(A5) != 2 or |P| != 3");
  c.expect(dp(a5, 3) == ExactRatio(2, 3), equal_text("d3(A5)", dp(a5, 3), {2, 3}));
  auto sl23 = construct("sl2:3");
  c.expect(dp(sl23, 2) == ExactRatio(3, 8), equal_text("d2(SL2(3))", dp(sl23, 2), {3, 8}));
  auto a7 = alternating_group(7);
  c.expect(k_p(a7, 2) == 3, "k2(A7) != 3");
  c.expect(dp(a7, 2) == ExactRatio(3, 8), equal_text("d2(A7)", dp(a7, 2), {3, 8}));
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    auto d = dp(dihedral_group(2 * p), p);
    c.expect(d == ExactRatio(p + 1, 2 * p), equal_text("d_p(D" + std::to_string(2 * p) + ")", d, {p + 1, 2 * p}));
  }
  c.expect(dp(a5, 5) == ExactRatio(3, 5), equal_text("d5(A5)", dp(a5, 5), {3, 5}));
  auto l8 = psl2_group(8);
  c.expect(dp(l8, 7) == ExactRatio(4, 7), equal_text("d7(PSL2(8))", dp(l8, 7), {4, 7}));
  c.expect(commuting_degree(dihedral_group(8)) == ExactRatio(5, 8), "d(D8) != 5/8");
  c.expect(commuting_degree(quaternion_group()) == ExactRatio(5, 8), "d(Q8) != 5/8");
  for (unsigned m = 1; m <= 6; ++m) {
    auto d = commuting_degree(gm_group(m));
    c.expect(d == ExactRatio(1, 2), equal_text("d(G_" + std::to_string(m) + ")", d, {1, 2}));
  }
  for (std::uint64_t q : {5, 11, 13, 19, 29}) {
    auto d = dp(psl2_group(q), 2);
    c.expect(d == ExactRatio(1, 2), equal_text("d2(PSL2(" + std::to_string(q) + "))", d, {1, 2}));
  }
}

std::string describe(const RunSummary& s) {
  std::ostringstream out;
  out << s.groups_run << " groups, " << s.confirmed << " confirmed, " << s.vacuous << " vacuous, " << s.refuted
      << " refuted, " << s.skipped << " skipped, " << s.errors << " errors";
  return out.str();
}

void criterion_suites(Check& c, const std::vector<CatalogEntry>& catalog, std::string& detail) {
  std::size_t psl2 = 0;
  for (const auto& e : catalog) {
    const bool is_psl2 = e.name.rfind("PSL2(", 0) == 0;
    psl2 += is_psl2;
    c.expect(e.group.order() <= (is_psl2 ? 12180u : 2000u), e.name + " exceeds the catalog order bounds");
  }
  c.expect(catalog.size() >= 60, "catalog has fewer than 60 groups");
  c.expect(psl2 > 0, "catalog has no PSL2 groups");

  SuiteConfig config;
  config.jobs = 4;
  for (std::uint64_t max_order : {512ull, 20000ull}) {
    config.max_order = max_order;
    RunSummary s;
    const auto rows = run_suite(catalog, config, &s);
    for (const auto& v : rows) {
      if (v.status == Status::Refuted || v.status == Status::Skipped || v.status == Status::Error) {
        c.expect(false, std::string(to_string(v.status)) + ": " + v.group + " " + v.suite + " " + v.params + " " +
                            v.witness);
      }
    }
    // Every theorem suite must have produced rows.
    for (const auto& id : suite_ids()) {
      bool seen = false;
      for (const auto& v : rows) seen = seen || v.suite == id;
      c.expect(seen, "suite " + id + " produced no rows");
    }
    detail += (detail.empty() ? "" : "; ") + std::string("max_order ") + std::to_string(max_order) + ": " +
              describe(s);
  }
}

void criterion_triad(Check& c, const std::vector<CatalogEntry>& catalog, std::size_t& pairs) {
  for (const auto& e : catalog) {
    const auto& g = e.group;
    for (auto p : prime_divisors(g.order())) {
      ++pairs;
      const auto P = sylow_subgroup(g, p);
      const bool by_core = o_pi_core(g, PrimeSet{p}.complement_in(g.order())).order() * P.order() == g.order();
      const bool by_count = k_p(g, p) == class_count(P);
      const bool by_fusion = controls_fusion(g, P, P);
      c.expect(by_core == by_count && by_count == by_fusion,
               e.name + " p=" + std::to_string(p) + ": core/count/fusion disagree");
    }
  }
}

void criterion_oracle(Check& c, const std::vector<CatalogEntry>& catalog, std::size_t& groups) {
  for (const auto& e : catalog) {
    if (e.group.order() > 200) continue;
    ++groups;
    auto mismatch = oracle::compare_with_engine(e.name, e.group);
    c.expect(mismatch.empty(), mismatch);
  }
}

void criterion_tightness(Check& c) {
  auto a5 = alternating_group(5);
  const auto T = sylow_subgroup(a5, 5);
  c.expect(k_p(a5, 5) == 3 && 2 * k_p(a5, 5) == T.order() + 1, "k5(A5) != 3 = (|T|+1)/2");
  auto a4 = alternating_group(4);
  c.expect(2 * k_p(a4, 2) == sylow_subgroup(a4, 2).order(), "k2(A4) != |P|/2");
  c.expect(!has_normal_pi_complement(a4, PrimeSet{2}).exists, "A4 is 2-nilpotent");
  std::vector<std::pair<PermGroup, std::uint64_t>> boundary;
  for (std::uint64_t p : {3, 5, 7, 11, 13}) boundary.emplace_back(dihedral_group(2 * p), p);
  boundary.emplace_back(psl2_group(8), 7);
  for (const auto& [g, p] : boundary) {
    const std::string label = "order " + std::to_string(g.order()) + " p=" + std::to_string(p);
    c.expect(dp(g, p) == ExactRatio(p + 1, 2 * p), label + ": d_p != (p+1)/(2p)");
    c.expect(!has_normal_pi_complement(g, PrimeSet{p}).exists, label + ": p-nilpotent");
  }
}

void criterion_todd_coxeter(Check& c, double& slowest) {
  for (unsigned m = 1; m <= 6; ++m) {
    const auto t0 = Clock::now();
    const auto p = gm_presentation(m);
    const auto r = todd_coxeter(p);
    const double dt = seconds_since(t0);
    slowest = std::max(slowest, dt);
    const std::uint64_t want = 3ull << m;
    c.expect(r.order == want && r.table.size() == want, "G_" + std::to_string(m) + ": " + std::to_string(r.order) +
                                                            " cosets, expected " + std::to_string(want));
    c.expect(r.table.is_consistent(p), "G_" + std::to_string(m) + ": inconsistent coset table");
    c.expect(r.regular.order() == r.order, "G_" + std::to_string(m) + ": regular representation order differs");
    c.expect(dt < 5.0, "G_" + std::to_string(m) + ": took " + std::to_string(dt) + " s");
  }
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void criterion_determinism(Check& c, const std::string& cli) {
  if (cli.empty()) {
    c.expect(false, "no CLI path given");
    return;
  }
  const auto dir = std::filesystem::temp_directory_path() / ("fusionlab_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::vector<std::string> outputs;
  for (const char* format : {"csv", "json"}) {
    std::string first;
    for (int run = 0; run < 2; ++run) {
      const auto out = dir / ("run" + std::to_string(run) + "." + format);
      const std::string cmd = "\"" + cli + "\" verify --suite all --builtin --jobs 4 --format " + format +
                              " --out \"" + out.string() + "\" > /dev/null";
      const int status = std::system(cmd.c_str());
      c.expect(status == 0, std::string(format) + " run " + std::to_string(run) + " exited with " +
                                std::to_string(status));
      auto text = slurp(out);
      c.expect(!text.empty(), std::string(format) + " report is empty");
      if (run == 0) {
        first = std::move(text);
      } else {
        c.expect(text == first, std::string(format) + " reports differ between runs");
      }
    }
  }
  std::filesystem::remove_all(dir);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  int failed = 0;
  auto report = [&](int n, const std::string& title, const Check& c, const std::string& detail) {
    std::cout << (c.failures.empty() ? "PASS" : "FAIL") << " criterion " << n << ": " << title;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    for (std::size_t i = 0; i < c.failures.size() && i < 20; ++i) std::cout << "    " << c.failures[i] << "\n";
    if (c.failures.size() > 20) std::cout << "    ... " << c.failures.size() - 20 << " more\n";
    failed += !c.failures.empty();
  };
  auto timed = [](const std::function<void()>& fn) {
    const auto t0 = Clock::now();
    fn();
    return seconds_since(t0);
  };
  auto fmt = [](double s) {
    std::ostringstream out;
    out.precision(2);
    out << std::fixed << s << " s";
    return out.str();
  };

  const auto catalog = builtin_catalog();

  {
    Check c;
    const double dt = timed([&] { criterion_invariants(c); });
    c.expect(dt < 120, "took " + fmt(dt));
    report(1, "exact invariant reproduction", c, fmt(dt));
  }
  {
    Check c;
    std::string detail;
    const double dt = timed([&] { criterion_suites(c, catalog, detail); });
    c.expect(dt < 600, "took " + fmt(dt));
    report(2, "theorem and lemma suites over the built-in catalog", c,
           std::to_string(catalog.size()) + " catalog groups; " + detail + "; " + fmt(dt));
  }
  {
    Check c;
    std::size_t pairs = 0;
    criterion_triad(c, catalog, pairs);
    report(3, "normal p-complement by core order, class count and self-fusion agree", c,
           std::to_string(pairs) + " (group, prime) pairs");
  }
  {
    Check c;
    std::size_t groups = 0;
    const double dt = timed([&] { criterion_oracle(c, catalog, groups); });
    report(4, "classes, centralizers and Sylow subgroups equal the brute-force oracle", c,
           std::to_string(groups) + " groups of order <= 200; " + fmt(dt));
  }
  {
    Check c;
    criterion_tightness(c);
    report(5, "tightness witnesses", c, "");
  }
  {
    Check c;
    double slowest = 0;
    criterion_todd_coxeter(c, slowest);
    report(6, "coset enumeration of G_m for m <= 6", c, "slowest " + fmt(slowest));
  }
  {
    Check c;
    const double dt = timed([&] { criterion_determinism(c, cli); });
    report(7, "byte-identical CSV and JSON reports across runs", c, fmt(dt));
  }
  return failed == 0 ? 0 : 1;
}
