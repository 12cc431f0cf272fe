#include "dehnlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

namespace dehnlab {

std::string problem_name(Problem p) {
  switch (p) {
    case Problem::wsp:
      return "wsp";
    case Problem::esp:
      return "esp";
    case Problem::csp:
      return "csp";
    case Problem::msp1:
      return "msp1";
    default:
      return "msp2";
  }
}

std::optional<Problem> parse_problem(const std::string& name) {
  if (name == "wsp") return Problem::wsp;
  if (name == "esp") return Problem::esp;
  if (name == "csp") return Problem::csp;
  if (name == "msp1") return Problem::msp1;
  if (name == "msp2") return Problem::msp2;
  return std::nullopt;
}

int envelope_bound(std::int64_t n) {
  double nn = static_cast<double>(std::max<std::int64_t>(n, 2));
  return static_cast<int>(std::ceil(std::exp(2.0) * std::log(nn)));
}

int default_max_iter(std::int64_t n) { return envelope_bound(n) + 2; }

namespace {

int resolve_workers(int configured) {
  if (configured > 0) {
    return configured;
  }
  if (const char* env = std::getenv("DEHNLAB_WORKERS")) {
    int v = std::atoi(env);
    if (v > 0) {
      return v;
    }
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.n_schedule.empty()) {
    throw std::invalid_argument("n schedule must be non-empty");
  }
  for (auto n : cfg.n_schedule) {
    if (n < 0) {
      throw std::invalid_argument("n must be non-negative");
    }
  }
  if (cfg.trials < 1) {
    throw std::invalid_argument("need at least one trial");
  }
  if (cfg.problem == Problem::msp2 && (cfg.q < 0.0 || cfg.q >= 1.0)) {
    throw std::invalid_argument("q must lie in [0, 1) for msp2");
  }
  if (cfg.problem == Problem::csp &&
      cyclically_reduce(cfg.base_word).empty()) {
    throw std::invalid_argument("csp base word must be cyclically nontrivial");
  }
  if ((cfg.problem == Problem::msp1 || cfg.problem == Problem::msp2) &&
      cfg.subgroup.empty()) {
    throw std::invalid_argument("msp experiments need subgroup generators");
  }
}

struct TrialOutput {
  TrialRow row;
  RetainedWitness witness;
};

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  InsertionDistribution d_i =
      cfg.identity_weights
          ? InsertionDistribution::weighted(cfg.presentation.identities,
                                            *cfg.identity_weights)
          : identity_distribution(cfg.presentation);
  std::optional<InsertionDistribution> d_h;
  if (cfg.problem == Problem::msp1 || cfg.problem == Problem::msp2) {
    d_h = cfg.subgroup_weights
              ? InsertionDistribution::weighted(
                    materialize_symmetric(cfg.subgroup), *cfg.subgroup_weights)
              : subgroup_distribution(cfg.subgroup);
  }

  const std::size_t total =
      cfg.n_schedule.size() * static_cast<std::size_t>(cfg.trials);
  std::vector<TrialOutput> slots(total);
  std::vector<std::string> errors(total);

  auto run_trial = [&](std::size_t slot) {
    std::int64_t n = cfg.n_schedule[slot / static_cast<std::size_t>(cfg.trials)];
    int trial = static_cast<int>(slot % static_cast<std::size_t>(cfg.trials));
    std::uint64_t seed = Rng::derive_seed(cfg.master_seed, slot);
    Rng rng(seed);
    int max_iter = cfg.max_iter.value_or(default_max_iter(n));

    GeneratedInstance inst;
    switch (cfg.problem) {
      case Problem::wsp:
        inst = random_equal_word(cfg.presentation, Word(), n, d_i, rng, seed);
        break;
      case Problem::esp:
        inst = random_equal_word(cfg.presentation, cfg.base_word, n, d_i, rng,
                                 seed);
        break;
      case Problem::csp:
        inst = random_conjugate(cfg.presentation, cfg.base_word, n, d_i, rng,
                                seed);
        break;
      case Problem::msp1:
        inst = random_subgroup_word(cfg.presentation, cfg.subgroup, cfg.k, n,
                                    d_i, *d_h, rng, seed);
        break;
      case Problem::msp2:
        inst = random_subgroup_word2(cfg.presentation, cfg.subgroup, n, cfg.q,
                                     d_i, *d_h, rng, seed);
        break;
    }

    auto start = std::chrono::steady_clock::now();
    SolveOutcome outcome;
    Word loop_word;
    switch (cfg.problem) {
      case Problem::wsp:
        outcome = solve_wsp(cfg.presentation, inst.word, max_iter);
        loop_word = inst.word;
        break;
      case Problem::esp:
        outcome = solve_esp(cfg.presentation, cfg.base_word, inst.word,
                            max_iter);
        loop_word = reduce(cfg.base_word * invert(inst.word));
        break;
      case Problem::csp:
        outcome = solve_csp(cfg.presentation, cfg.base_word, inst.word,
                            max_iter);
        if (outcome.witness_locus) {
          loop_word = rotate(cyclically_reduce(inst.word),
                             outcome.witness_locus->second);
        }
        break;
      case Problem::msp1:
      case Problem::msp2:
        outcome = solve_msp(cfg.presentation, cfg.subgroup, inst.word,
                            max_iter);
        loop_word = inst.word;
        break;
    }
    auto elapsed = std::chrono::steady_clock::now() - start;

    if (!outcome.accepted()) {
      errors[slot] = "instance exhausted the iteration budget (n=" +
                     std::to_string(n) + ", trial=" + std::to_string(trial) +
                     ", max_iter=" + std::to_string(max_iter) + ")";
      return;
    }
    if (outcome.iterations > inst.trace.tree_height) {
      errors[slot] = "depth chain violated: iterations=" +
                     std::to_string(outcome.iterations) +
                     " > tree_height=" + std::to_string(inst.trace.tree_height) +
                     " (n=" + std::to_string(n) +
                     ", trial=" + std::to_string(trial) + ")";
      return;
    }

    TrialOutput& out = slots[slot];
    out.row.problem = cfg.problem;
    out.row.n = n;
    out.row.trial = trial;
    out.row.seed = seed;
    out.row.word_len = static_cast<std::int64_t>(inst.word.size());
    out.row.tree_height = inst.trace.tree_height;
    out.row.iterations = outcome.iterations;
    out.row.graph_size = outcome.graph_size;
    out.row.time_ms =
        cfg.measure_time
            ? std::chrono::duration_cast<std::chrono::milliseconds>(elapsed)
                  .count()
            : 0;
    out.row.bound = envelope_bound(n);
    out.row.within_bound = outcome.iterations <= out.row.bound;
    if (cfg.retain_witnesses) {
      out.witness.graph = std::move(*outcome.witness);
      out.witness.loop_word = std::move(loop_word);
      out.witness.locus = outcome.witness_locus
                              ? outcome.witness_locus->first
                              : out.witness.graph.base_out;
    }
  };

  int workers = std::min<int>(resolve_workers(cfg.workers),
                              static_cast<int>(total));
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    while (true) {
      std::size_t slot = cursor.fetch_add(1);
      if (slot >= total) {
        return;
      }
      try {
        run_trial(slot);
      } catch (const std::exception& e) {
        errors[slot] = e.what();
      }
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) {
      pool.emplace_back(worker);
    }
    for (auto& t : pool) {
      t.join();
    }
  }

  for (const auto& err : errors) {
    if (!err.empty()) {
      throw std::runtime_error(err);
    }
  }

  ExperimentResult result;
  result.rows.reserve(total);
  // Sort slots by (n, trial) so output bytes depend only on the config;
  // schedule order already has this shape unless the caller gave a
  // non-ascending schedule.
  std::vector<std::size_t> order(total);
  for (std::size_t i = 0; i < total; ++i) {
    order[i] = i;
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::pair(slots[a].row.n, slots[a].row.trial) <
           std::pair(slots[b].row.n, slots[b].row.trial);
  });
  for (std::size_t i : order) {
    result.rows.push_back(slots[i].row);
    if (cfg.retain_witnesses) {
      result.witnesses.push_back(std::move(slots[i].witness));
    }
  }
  for (std::size_t i = 0; i < cfg.n_schedule.size(); ++i) {
    double ok = 0;
    for (int t = 0; t < cfg.trials; ++t) {
      ok += slots[i * static_cast<std::size_t>(cfg.trials) +
                  static_cast<std::size_t>(t)]
                .row.within_bound
                ? 1.0
                : 0.0;
    }
    result.success_fraction.emplace_back(cfg.n_schedule[i], ok / cfg.trials);
  }
  return result;
}

void write_csv(std::ostream& out, const ExperimentResult& result) {
  out << "problem,n,trial,seed,word_len,tree_height,iterations,graph_size,"
         "time_ms,bound,within_bound\n";
  for (const auto& r : result.rows) {
    out << problem_name(r.problem) << ',' << r.n << ',' << r.trial << ','
        << r.seed << ',' << r.word_len << ',' << r.tree_height << ','
        << r.iterations << ',' << r.graph_size << ',' << r.time_ms << ','
        << r.bound << ',' << (r.within_bound ? 1 : 0) << '\n';
  }
}

std::string csv_string(const ExperimentResult& result) {
  std::ostringstream out;
  write_csv(out, result);
  return out.str();
}

VerifyReport verify_witnesses(const ExperimentResult& result) {
  VerifyReport report;
  for (const auto& w : result.witnesses) {
    ++report.checked;
    auto end = trace(w.graph, w.locus, w.loop_word);
    if (!end || *end != w.locus) {
      ++report.failures;
    }
  }
  return report;
}

void write_cmj_csv(std::ostream& out, double offspring_mean, std::int64_t n,
                   const HeightRatioSummary& summary) {
  out << "EM,n,trial,height,ratio\n";
  double log_n = std::log(static_cast<double>(n));
  for (std::size_t i = 0; i < summary.heights.size(); ++i) {
    out << offspring_mean << ',' << n << ',' << i << ',' << summary.heights[i]
        << ',' << summary.heights[i] / log_n << '\n';
  }
  out << "# summary mean=" << summary.mean << " stddev=" << summary.stddev
      << " trials=" << summary.heights.size() << '\n';
}

}  // namespace dehnlab
