#pragma once

#include "fuzzlat/fuzzy.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace fuzzlat {

struct GenParams {
  std::uint64_t seed = 1;
  int max_atoms = 6;
  int denominator_bound = 64;
  int universe_size = 4;
  int samples = 0;  // 0 means: use the suite's default
};

// Deterministic sample stream: the same params yield the same values, so the
// same params yield the same report.
class Gen {
 public:
  explicit Gen(const GenParams& p) : p_(p), rng_(p.seed) {}

  long uniform(long lo, long hi);  // inclusive bounds
  Rat rat();
  Rat grid_rat(int denom);
  Interval interval();
  Atom atom();
  RealSubset subset();           // possibly empty
  RealSubset nonempty_subset();
  ClosedSubset closed_subset();
  MonotonePWA monotone(bool strict);
  PiecewiseFn grade_fn();
  Universe universe() const;
  Fs fs(const Universe& u);
  Ivfs ivfs(const Universe& u);
  Svfs svfs(const Universe& u, bool allow_empty);
  Cvfs cvfs(const Universe& u);
  T2fs t2fs(const Universe& u);

  const GenParams& params() const { return p_; }

 private:
  GenParams p_;
  std::mt19937_64 rng_;
};

struct Failure {
  std::string inputs;
  std::string expected;
  std::string actual;
};

struct Report {
  std::string suite;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<Failure> failures;
  std::vector<std::string> notes;  // witnesses and empirical observations

  bool passed() const { return failures.empty(); }
};

std::string report_text(const Report& r);
std::string report_json(const Report& r);
std::string reports_json(const std::vector<Report>& rs);

struct SuiteInfo {
  std::string name;
  std::string summary;
  int default_samples;
  std::function<Report(const GenParams&)> run;
};

const std::vector<SuiteInfo>& all_suites();

// UnknownName for unregistered suites; params.samples <= 0 selects the
// suite's default sample count.
Report run_suite(const std::string& name, GenParams params);
std::vector<Report> run_all_suites(const GenParams& params);
std::vector<std::string> suite_names();
std::vector<std::string> diagram_names();

// Searches the generator stream for a witness violating (or exhibiting) the
// named property, greedily minimized. UnknownName for unknown properties.
std::optional<std::string> find_counterexample(const std::string& property,
                                               int budget, std::uint64_t seed);

// --- brute-force oracle on finite grid sets --------------------------------

// Finite subset of {0, 1/denom, ..., 1}, stored as sorted numerators.
struct GridSet {
  int denom = 1;
  std::vector<int> elems;

  bool operator==(const GridSet&) const = default;
};

GridSet grid_from_subset(const RealSubset& s, int denom);  // NotOnGrid
RealSubset grid_to_subset(const GridSet& g);

// Direct element enumeration of the inf/sup/window definitions.
bool grid_s_order(const GridSet& s, const GridSet& t);
GridSet grid_s_union(const GridSet& s, const GridSet& t);
GridSet grid_s_inter(const GridSet& s, const GridSet& t);

Report compare_with_oracle(const GenParams& params, int grid_denom);

}  // namespace fuzzlat
