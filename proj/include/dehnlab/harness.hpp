#ifndef DEHNLAB_HARNESS_HPP_
#define DEHNLAB_HARNESS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dehnlab/branching.hpp"
#include "dehnlab/challengers.hpp"
#include "dehnlab/presentation.hpp"
#include "dehnlab/solvers.hpp"

namespace dehnlab {

enum class Problem { wsp, esp, csp, msp1, msp2 };

std::string problem_name(Problem p);
std::optional<Problem> parse_problem(const std::string& name);

// Iteration budget used on size-n instances: ceil(e^2 ln(max(n, 2))) plus
// two rounds of slack.
int default_max_iter(std::int64_t n);
int envelope_bound(std::int64_t n);  // ceil(e^2 ln(max(n, 2)))

struct ExperimentConfig {
  Problem problem = Problem::wsp;
  Presentation presentation;
  std::vector<Word> subgroup;   // MSP generators
  Word base_word;               // ESP/CSP base (CSP: cyclically nontrivial)
  std::vector<std::int64_t> n_schedule;
  int trials = 1;
  double q = 0.3;               // MSP2 mixing parameter, in [0, 1)
  std::int64_t k = 4;           // MSP1 product length
  std::uint64_t master_seed = 0;
  std::optional<int> max_iter;  // default: default_max_iter(n)
  // Weight overrides for the otherwise uniform draws; identity weights index
  // the presentation's identity list, subgroup weights the sorted
  // materialized H^±.
  std::optional<std::vector<double>> identity_weights;
  std::optional<std::vector<double>> subgroup_weights;
  // Wall time is reported only on request: the time_ms column is zero by
  // default so identical configurations reproduce identical CSV bytes.
  bool measure_time = false;
  bool retain_witnesses = false;
  int workers = 0;  // 0 = DEHNLAB_WORKERS env or hardware concurrency
};

struct TrialRow {
  Problem problem;
  std::int64_t n = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  std::int64_t word_len = 0;
  std::int32_t tree_height = 0;
  int iterations = 0;
  std::int64_t graph_size = 0;
  std::int64_t time_ms = 0;
  int bound = 0;
  bool within_bound = false;
};

struct RetainedWitness {
  LabeledGraph graph;
  Word loop_word;
  std::int32_t locus = 0;
};

struct ExperimentResult {
  std::vector<TrialRow> rows;                  // sorted by (n, trial)
  std::vector<RetainedWitness> witnesses;      // parallel to rows if retained
  std::vector<std::pair<std::int64_t, double>> success_fraction;  // per n
};

// Generates one instance per (n, trial) with the matching generator, solves
// it with the matching solver, and records the row. Every row is checked
// against the depth chain: an accepted solve must use at most tree_height
// iterations, and a challenger instance must not exhaust its budget; either
// violation aborts the run.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Header exactly:
// problem,n,trial,seed,word_len,tree_height,iterations,graph_size,time_ms,bound,within_bound
void write_csv(std::ostream& out, const ExperimentResult& result);
std::string csv_string(const ExperimentResult& result);

struct VerifyReport {
  std::size_t checked = 0;
  std::size_t failures = 0;
};

// Re-traces every retained witness; any failure is reported (and is a hard
// test failure in the suites).
VerifyReport verify_witnesses(const ExperimentResult& result);

// CMJ experiment: per-trial heights of the offspring process, CSV with
// header EM,n,trial,height,ratio plus a trailing summary comment row.
void write_cmj_csv(std::ostream& out, double offspring_mean, std::int64_t n,
                   const HeightRatioSummary& summary);

}  // namespace dehnlab

#endif  // DEHNLAB_HARNESS_HPP_
