// fusionlab command line: verify, invariants, construct, coset-enum.
// Exit codes: 0 success, 1 refutation or internal failure, 2 usage or I/O error.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "fusionlab/catalog.hpp"
#include "fusionlab/errors.hpp"
#include "fusionlab/invariants.hpp"
#include "fusionlab/presentation.hpp"
#include "fusionlab/report.hpp"
#include "fusionlab/todd_coxeter.hpp"
#include "fusionlab/verify.hpp"

using namespace fusionlab;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<std::uint64_t> parse_primes(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& item : split(text, ',')) {
    std::size_t used = 0;
    const auto p = std::stoull(item, &used);
    if (used != item.size() || !is_prime(p)) throw InvalidArgument("not a prime: '" + item + "'");
    out.push_back(p);
  }
  return out;
}

std::vector<PrimeSet> parse_pi_sets(const std::string& text) {
  std::vector<PrimeSet> out;
  for (const auto& item : split(text, ';')) out.push_back(PrimeSet(parse_primes(item)));
  return out;
}

void print_invariants(const std::string& name, const PermGroup& g, const std::vector<PrimeSet>& pi_sets) {
  const auto rec = compute_invariants(name, g);
  std::cout << rec.group << " order=" << rec.order << " k=" << rec.k << " d=" << rec.d.to_string() << "\n";
  for (const auto& p : rec.primes) {
    std::cout << "  p=" << p.prime << " |P|=" << p.sylow_order << " k_p=" << p.k_p << " k(P)=" << p.k_sylow
              << " d_p=" << p.d_p.to_string() << " (" << p.d_p.to_display_decimal() << ")"
              << " p-nilpotent=" << (p.p_nilpotent ? "yes" : "no")
              << " P-abelian=" << (p.sylow_abelian ? "yes" : "no") << "\n";
  }
  for (const auto& pi : pi_sets) {
    const auto cut = pi.intersect_divisors(g.order());
    if (cut.empty()) continue;
    const auto d = commuting_degree(g, cut);
    std::cout << "  pi=" << cut.to_string() << " k_pi=" << class_counts(g, cut).k_pi << " d_pi=" << d.to_string()
              << "\n";
  }
  const auto type = lescot_classify(g);
  std::cout << "  d>=1/2 class: " << to_string(type.tag);
  if (type.tag == LescotTag::TwoCentralType || type.tag == LescotTag::GmType) std::cout << " m=" << type.m;
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fusionlab: p-element class counts, fusion and commuting degrees of finite groups"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "check theorem and lemma suites over a catalog");
  std::vector<std::string> suites;
  std::vector<std::string> catalogs;
  bool builtin = false;
  std::uint64_t max_order = 20'000;
  std::string primes_text, pi_text, format_text = "csv", out_path;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  unsigned timeout_ms = 30'000;
  verify->add_option("--suite", suites, "A|B|C|D|E|F|lemmas|all, or a suite id (repeatable)");
  verify->add_option("--catalog", catalogs, "catalog file (repeatable)");
  verify->add_flag("--builtin", builtin, "include the built-in catalog (default when no --catalog)");
  verify->add_option("--max-order", max_order, "skip groups above this order");
  verify->add_option("--primes", primes_text, "restrict primes, e.g. 2,3,5");
  verify->add_option("--pi", pi_text, "pi-sets, e.g. \"2,3;3,5\"");
  verify->add_option("--format", format_text, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--out", out_path, "report path (default stdout)");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "seed for sampled checks");
  verify->add_option("--timeout-ms", timeout_ms, "per-group time limit, 0 for none");

  auto* invariants = app.add_subcommand("invariants", "print k, k_p, d, d_p, d_pi for one group or a catalog");
  std::string spec_text, file_path, inv_pi = "2,3;2,5;3,5;3,5,7";
  auto* inv_spec = invariants->add_option("--spec", spec_text, "family:params, e.g. psl2:7 or \"symmetric:4 x cyclic:2\"");
  auto* inv_file = invariants->add_option("--file", file_path, "catalog file");
  inv_spec->excludes(inv_file);
  invariants->add_option("--pi", inv_pi, "pi-sets");

  auto* construct_cmd = app.add_subcommand("construct", "build groups and optionally dump them as a catalog");
  std::vector<std::string> specs;
  std::vector<std::string> construct_catalogs;
  bool construct_builtin = false;
  std::uint64_t construct_max = 20'000;
  std::string dump_path;
  construct_cmd->add_option("--spec", specs, "family:params (repeatable)");
  construct_cmd->add_option("--catalog", construct_catalogs, "catalog file to include (repeatable)");
  construct_cmd->add_flag("--builtin", construct_builtin, "all built-in families");
  construct_cmd->add_option("--max-order", construct_max, "order limit for --builtin");
  construct_cmd->add_option("--dump", dump_path, "write a catalog file");

  auto* coset_cmd = app.add_subcommand("coset-enum", "Todd-Coxeter enumeration of a finite presentation");
  std::string presentation_path;
  std::size_t max_cosets = 100'000;
  coset_cmd->add_option("--presentation", presentation_path, "presentation file")->required();
  coset_cmd->add_option("--max-cosets", max_cosets, "coset table limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      SuiteConfig config;
      for (const auto& s : suites.empty() ? std::vector<std::string>{"all"} : suites) {
        for (auto& id : expand_suite_selector(s)) {
          if (std::find(config.suites.begin(), config.suites.end(), id) == config.suites.end()) {
            config.suites.push_back(id);
          }
        }
      }
      if (!primes_text.empty()) config.primes = parse_primes(primes_text);
      if (!pi_text.empty()) config.pi_sets = parse_pi_sets(pi_text);
      config.max_order = max_order;
      config.jobs = jobs;
      config.seed = seed;
      config.timeout_ms = timeout_ms;

      std::vector<CatalogEntry> catalog;
      if (builtin || catalogs.empty()) catalog = builtin_catalog();
      for (const auto& path : catalogs) {
        auto more = load_catalog(path);
        catalog.insert(catalog.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
      }

      RunSummary summary;
      const auto verdicts = run_suite(catalog, config, &summary);
      const auto format = parse_report_format(format_text);
      if (out_path.empty()) {
        std::cout << format_report(verdicts, format);
        std::cerr << format_summary(summary);
      } else {
        write_report(verdicts, format, out_path);
        std::cout << format_summary(summary);
      }
      return summary.failed() ? 1 : 0;
    }

    if (*invariants) {
      const auto pi_sets = parse_pi_sets(inv_pi);
      if (!spec_text.empty()) {
        const auto spec = GroupSpec::parse(spec_text);
        print_invariants(spec.display_name(), construct(spec), pi_sets);
      } else if (!file_path.empty()) {
        for (const auto& e : load_catalog(file_path)) print_invariants(e.name, e.group, pi_sets);
      } else {
        std::cerr << "invariants: need --spec or --file\n";
        return 2;
      }
      return 0;
    }

    if (*construct_cmd) {
      std::vector<CatalogEntry> entries;
      if (construct_builtin) entries = builtin_catalog(construct_max);
      for (const auto& path : construct_catalogs) {
        auto more = load_catalog(path);
        entries.insert(entries.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
      }
      for (const auto& s : specs) {
        const auto spec = GroupSpec::parse(s);
        entries.push_back(make_entry(spec.display_name(), construct(spec)));
      }
      if (!dump_path.empty()) {
        write_catalog(dump_path, entries);
      }
      for (const auto& e : entries) {
        std::cout << e.name << " order=" << e.group.order() << " degree=" << e.degree
                  << " generators=" << e.generators.size() << "\n";
      }
      return 0;
    }

    if (*coset_cmd) {
      const auto p = load_presentation(presentation_path);
      const auto result = todd_coxeter(p, max_cosets);
      std::cout << "cosets: " << result.order << "\n"
                << "regular representation order: " << result.regular.order() << "\n";
      return 0;
    }
  } catch (const InternalError& e) {
    std::cerr << "internal cross-check failed: " << e.what() << "\n";
    return 1;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
