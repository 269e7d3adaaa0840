#pragma once

// Theorem and lemma suites over a catalog of groups.
//
// Every check is a directed implication "hypothesis => conclusion". A row is
// vacuous when the hypothesis fails, confirmed when both hold and refuted
// when the hypothesis holds and the conclusion does not. "iff" statements are
// split into two directed suites (".fwd" and ".rev").

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fusionlab/catalog.hpp"
#include "fusionlab/exact_ratio.hpp"
#include "fusionlab/primes.hpp"

namespace fusionlab {

enum class Status { Confirmed, Vacuous, Refuted, Skipped, Error };

const char* to_string(Status s);
Status parse_status(const std::string& text);

struct Verdict {
  std::string suite;
  std::string group;
  std::uint64_t order = 0;
  std::string params;
  std::optional<bool> hypothesis;  // empty for skipped/error rows
  std::optional<bool> conclusion;  // empty when not evaluated
  Status status = Status::Vacuous;
  std::optional<std::uint64_t> k_p;
  std::optional<std::uint64_t> sylow_order;
  std::optional<ExactRatio> d_value;
  std::string witness;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// All suite ids in report order. Theorem suites first, then lemma suites.
const std::vector<std::string>& suite_ids();
bool is_theorem_suite(const std::string& id);
// Expands a selector ("A", "D", "lemmas", "all", "self-fusion", "A.fwd") into
// suite ids. Throws InvalidArgument for unknown selectors.
std::vector<std::string> expand_suite_selector(const std::string& selector);

struct SuiteConfig {
  std::vector<std::string> suites;  // ids; empty means all
  std::vector<PrimeSet> pi_sets = {{2, 3}, {2, 5}, {3, 5}, {3, 5, 7}};
  std::vector<std::uint64_t> primes;  // empty means every prime dividing |G|
  std::uint64_t max_order = 20'000;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  unsigned timeout_ms = 30'000;  // per group
};

// Verdicts for one group, in suite order then parameter order.
std::vector<Verdict> verify_group(const std::string& name, const PermGroup& g, const SuiteConfig& config);

struct RunSummary {
  std::size_t groups_run = 0;
  std::size_t groups_above_max_order = 0;
  std::size_t confirmed = 0;
  std::size_t vacuous = 0;
  std::size_t refuted = 0;
  std::size_t skipped = 0;
  std::size_t errors = 0;
  bool failed() const { return refuted > 0 || errors > 0; }
};

// Runs every catalog group of order <= max_order on up to config.jobs
// threads. Output is sorted by group name (stable for equal names), then
// suite order, then parameters, whatever the thread schedule.
std::vector<Verdict> run_suite(const std::vector<CatalogEntry>& catalog, const SuiteConfig& config,
                               RunSummary* summary = nullptr);

RunSummary summarize(const std::vector<Verdict>& verdicts);

}  // namespace fusionlab
