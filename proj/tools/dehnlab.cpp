// dehnlab: challenger-solver experiments for Dehn search problems in
// finitely presented groups.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "dehnlab/branching.hpp"
#include "dehnlab/harness.hpp"
#include "dehnlab/pkc.hpp"

using namespace dehnlab;

namespace {

std::vector<std::int64_t> parse_schedule(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(std::stoll(item));
  }
  return out;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) {
    return std::cout;
  }
  file.open(path);
  if (!file) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  return file;
}

Word parse_in_alphabet(const std::string& text, const Presentation& p) {
  return Word::parse(text, p.alphabet);
}

struct GenOptions {
  std::string presentation_path;
  std::string problem = "wsp";
  std::int64_t n = 100;
  int trials = 1;
  std::uint64_t seed = 0;
  std::string base_word;
  std::int64_t k = 4;
  double q = 0.3;
  std::string out_path;
};

int run_gen(const GenOptions& opt) {
  auto file = load_presentation_file(opt.presentation_path);
  const Presentation& pres = file.presentation;
  auto problem = parse_problem(opt.problem);
  if (!problem) {
    throw std::runtime_error("unknown problem: " + opt.problem);
  }
  InsertionDistribution d_i = identity_distribution(pres);
  std::optional<InsertionDistribution> d_h;
  if (*problem == Problem::msp1 || *problem == Problem::msp2) {
    d_h = subgroup_distribution(file.subgroup_generators);
  }
  Word base = opt.base_word.empty() ? Word()
                                    : parse_in_alphabet(opt.base_word, pres);

  std::ofstream sink;
  std::ostream& out = open_out(sink, opt.out_path);
  for (int t = 0; t < opt.trials; ++t) {
    std::uint64_t seed = Rng::derive_seed(opt.seed, static_cast<std::uint64_t>(t));
    Rng rng(seed);
    GeneratedInstance inst;
    switch (*problem) {
      case Problem::wsp:
        inst = random_equal_word(pres, Word(), opt.n, d_i, rng, seed);
        break;
      case Problem::esp:
        inst = random_equal_word(pres, base, opt.n, d_i, rng, seed);
        break;
      case Problem::csp:
        inst = random_conjugate(pres, base, opt.n, d_i, rng, seed);
        break;
      case Problem::msp1:
        inst = random_subgroup_word(pres, file.subgroup_generators, opt.k,
                                    opt.n, d_i, *d_h, rng, seed);
        break;
      case Problem::msp2:
        inst = random_subgroup_word2(pres, file.subgroup_generators, opt.n,
                                     opt.q, d_i, *d_h, rng, seed);
        break;
    }
    out << opt.n << ' ' << seed << ' ' << inst.word.str(pres.alphabet) << '\n';
    out << "trace " << inst.trace.tree_height << ' ' << inst.word.size()
        << '\n';
  }
  return 0;
}

struct SolveOptions {
  std::string presentation_path;
  std::string problem = "wsp";
  std::string w;
  std::string w2;
  int max_iter = kDefaultMaxIterations;
  bool dump = false;
};

int run_solve(const SolveOptions& opt) {
  auto file = load_presentation_file(opt.presentation_path);
  const Presentation& pres = file.presentation;
  auto problem = parse_problem(opt.problem);
  if (!problem) {
    throw std::runtime_error("unknown problem: " + opt.problem);
  }
  Word w = parse_in_alphabet(opt.w, pres);
  SolveOutcome outcome;
  switch (*problem) {
    case Problem::wsp:
      outcome = solve_wsp(pres, w, opt.max_iter);
      break;
    case Problem::esp:
      outcome = solve_esp(pres, w, parse_in_alphabet(opt.w2, pres),
                          opt.max_iter);
      break;
    case Problem::csp:
      outcome = solve_csp(pres, w, parse_in_alphabet(opt.w2, pres),
                          opt.max_iter);
      break;
    case Problem::msp1:
    case Problem::msp2:
      outcome = solve_msp(pres, file.subgroup_generators, w, opt.max_iter);
      break;
  }
  if (outcome.accepted()) {
    std::cout << "accepted iterations=" << outcome.iterations
              << " graph_size=" << outcome.graph_size;
    if (outcome.witness_locus) {
      std::cout << " locus=" << outcome.witness_locus->first
                << " shift=" << outcome.witness_locus->second;
    }
    std::cout << '\n';
    if (opt.dump) {
      std::cout << dump_graph(*outcome.witness, pres.alphabet);
    }
    return 0;
  }
  std::cout << "exhausted iterations=" << outcome.iterations
            << " graph_size=" << outcome.graph_size << '\n';
  return 1;
}

struct ExperimentOptions {
  std::string presentation_path;
  std::string problem = "wsp";
  std::string schedule = "100";
  int trials = 10;
  std::uint64_t seed = 0;
  std::string base_word;
  std::int64_t k = 4;
  double q = 0.3;
  int max_iter = 0;
  std::string i_weights;
  std::string h_weights;
  std::string out_path;
  bool measure_time = false;
};

int run_experiment_cmd(const ExperimentOptions& opt) {
  auto file = load_presentation_file(opt.presentation_path);
  ExperimentConfig cfg;
  cfg.presentation = file.presentation;
  cfg.subgroup = file.subgroup_generators;
  auto problem = parse_problem(opt.problem);
  if (!problem) {
    throw std::runtime_error("unknown problem: " + opt.problem);
  }
  cfg.problem = *problem;
  cfg.n_schedule = parse_schedule(opt.schedule);
  cfg.trials = opt.trials;
  cfg.master_seed = opt.seed;
  cfg.base_word = opt.base_word.empty()
                      ? Word()
                      : parse_in_alphabet(opt.base_word, cfg.presentation);
  cfg.k = opt.k;
  cfg.q = opt.q;
  cfg.measure_time = opt.measure_time;
  if (opt.max_iter > 0) {
    cfg.max_iter = opt.max_iter;
  }
  auto parse_weights = [](const std::string& text) {
    std::vector<double> weights;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      weights.push_back(std::stod(item));
    }
    return weights;
  };
  if (!opt.i_weights.empty()) {
    cfg.identity_weights = parse_weights(opt.i_weights);
  }
  if (!opt.h_weights.empty()) {
    cfg.subgroup_weights = parse_weights(opt.h_weights);
  }

  auto result = run_experiment(cfg);
  std::ofstream sink;
  write_csv(open_out(sink, opt.out_path), result);
  for (auto [n, fraction] : result.success_fraction) {
    std::cerr << "n=" << n << " within-envelope fraction=" << fraction << '\n';
  }
  return 0;
}

struct CmjOptions {
  std::string nu = "1";
  std::int64_t n = 100000;
  int trials = 50;
  std::uint64_t seed = 0;
  std::string out_path;
};

int run_cmj(const CmjOptions& opt) {
  // --nu accepts "v" (point mass) or "v:w,v:w" pairs.
  std::vector<std::int32_t> values;
  std::vector<double> weights;
  std::stringstream ss(opt.nu);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) {
      values.push_back(std::stoi(item));
      weights.push_back(1.0);
    } else {
      values.push_back(std::stoi(item.substr(0, colon)));
      weights.push_back(std::stod(item.substr(colon + 1)));
    }
  }
  auto m = OffspringDistribution::weighted(std::move(values),
                                           std::move(weights));
  Rng rng(opt.seed);
  auto summary = estimate_height_ratio(m, opt.n, opt.trials, rng);
  std::ofstream sink;
  write_cmj_csv(open_out(sink, opt.out_path), m.mean(), opt.n, summary);
  auto constants = constants_of(m.mean());
  std::cerr << "EM=" << m.mean() << " limit=" << constants.height_constant
            << " observed mean=" << summary.mean << '\n';
  return 0;
}

KeyPair load_key(const std::string& path) {
  return keypair_from_file(load_presentation_file(path));
}

const char* bit_name(PkcBit b) {
  switch (b) {
    case PkcBit::zero:
      return "0";
    case PkcBit::one:
      return "1";
    default:
      return "undecided";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dehn search problems: generators, solvers, experiments"};
  app.require_subcommand(1);

  // reduce
  std::string reduce_word;
  bool cyclic = false;
  bool do_invert = false;
  auto* cmd_reduce = app.add_subcommand("reduce", "free/cyclic reduction");
  cmd_reduce->add_option("word", reduce_word)->required();
  cmd_reduce->add_flag("--cyclic", cyclic, "cyclically reduce");
  cmd_reduce->add_flag("--invert", do_invert, "invert instead of reducing");

  // gen
  GenOptions gen;
  auto* cmd_gen = app.add_subcommand("gen", "sample challenger instances");
  cmd_gen->add_option("--presentation", gen.presentation_path)->required();
  cmd_gen->add_option("--problem", gen.problem, "wsp|esp|csp|msp1|msp2");
  cmd_gen->add_option("--n", gen.n);
  cmd_gen->add_option("--trials", gen.trials);
  cmd_gen->add_option("--seed", gen.seed);
  cmd_gen->add_option("--w", gen.base_word, "base word (esp/csp)");
  cmd_gen->add_option("--k", gen.k);
  cmd_gen->add_option("--q", gen.q);
  cmd_gen->add_option("--out", gen.out_path);

  // solve
  SolveOptions solve;
  auto* cmd_solve = app.add_subcommand("solve", "run a solver on one instance");
  cmd_solve->add_option("--presentation", solve.presentation_path)->required();
  cmd_solve->add_option("--problem", solve.problem, "wsp|esp|csp|msp1|msp2");
  cmd_solve->add_option("--w", solve.w)->required();
  cmd_solve->add_option("--w2", solve.w2, "second word (esp/csp)");
  cmd_solve->add_option("--max-iter", solve.max_iter);
  cmd_solve->add_flag("--dump-graph", solve.dump, "print the witness graph");

  // experiment
  ExperimentOptions exp;
  auto* cmd_exp = app.add_subcommand("experiment", "challenger-solver batches");
  cmd_exp->add_option("--presentation", exp.presentation_path)->required();
  cmd_exp->add_option("--problem", exp.problem, "wsp|esp|csp|msp1|msp2");
  cmd_exp->add_option("--n", exp.schedule, "comma-separated n schedule");
  cmd_exp->add_option("--trials", exp.trials);
  cmd_exp->add_option("--seed", exp.seed);
  cmd_exp->add_option("--w", exp.base_word);
  cmd_exp->add_option("--k", exp.k);
  cmd_exp->add_option("--q", exp.q);
  cmd_exp->add_option("--max-iter", exp.max_iter);
  cmd_exp->add_option("--i-weights", exp.i_weights,
                      "comma-separated weights over the identity set");
  cmd_exp->add_option("--h-weights", exp.h_weights,
                      "comma-separated weights over the materialized H set");
  cmd_exp->add_option("--out", exp.out_path);
  cmd_exp->add_flag("--measure-time", exp.measure_time,
                    "report wall time (breaks byte reproducibility)");

  // cmj
  CmjOptions cmj;
  auto* cmd_cmj = app.add_subcommand("cmj", "branching-process height ratios");
  cmd_cmj->add_option("--nu", cmj.nu, "offspring: value or value:weight list");
  cmd_cmj->add_option("--n", cmj.n);
  cmd_cmj->add_option("--trials", cmj.trials);
  cmd_cmj->add_option("--seed", cmj.seed);
  cmd_cmj->add_option("--out", cmj.out_path);

  // pkc
  auto* cmd_pkc = app.add_subcommand("pkc", "Wagner-Magyarik demo");
  cmd_pkc->require_subcommand(1);
  std::string key_path, cipher, keygen_out;
  bool keygen_demo = false;
  bool pkc_conj = false;
  int pkc_bit = 0;
  std::int64_t pkc_n = 200;
  std::uint64_t pkc_seed = 0;
  int pkc_budget = 0;
  auto* cmd_keygen = cmd_pkc->add_subcommand("keygen", "write a key file");
  cmd_keygen->add_flag("--demo", keygen_demo, "bundled Z^2 demo key");
  cmd_keygen->add_option("--out", keygen_out);
  auto* cmd_encrypt = cmd_pkc->add_subcommand("encrypt");
  cmd_encrypt->add_option("--key", key_path)->required();
  cmd_encrypt->add_option("--bit", pkc_bit)->required();
  cmd_encrypt->add_option("--n", pkc_n);
  cmd_encrypt->add_option("--seed", pkc_seed);
  cmd_encrypt->add_flag("--conj", pkc_conj);
  auto* cmd_decrypt = cmd_pkc->add_subcommand("decrypt");
  cmd_decrypt->add_option("--key", key_path)->required();
  cmd_decrypt->add_option("--cipher", cipher)->required();
  cmd_decrypt->add_option("--budget", pkc_budget);
  cmd_decrypt->add_flag("--conj", pkc_conj);
  auto* cmd_attack = cmd_pkc->add_subcommand("attack");
  cmd_attack->add_option("--key", key_path)->required();
  cmd_attack->add_option("--cipher", cipher)->required();
  cmd_attack->add_option("--budget", pkc_budget);
  cmd_attack->add_flag("--conj", pkc_conj);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_reduce) {
      Word w = Word::parse(reduce_word);
      Word out = do_invert ? invert(w) : (cyclic ? cyclically_reduce(w) : reduce(w));
      std::cout << out.str() << '\n';
      return 0;
    }
    if (*cmd_gen) {
      return run_gen(gen);
    }
    if (*cmd_solve) {
      return run_solve(solve);
    }
    if (*cmd_exp) {
      return run_experiment_cmd(exp);
    }
    if (*cmd_cmj) {
      return run_cmj(cmj);
    }
    if (*cmd_keygen) {
      if (!keygen_demo) {
        throw std::runtime_error("only --demo keys are bundled");
      }
      auto text = serialize_presentation(keypair_to_file(demo_keypair()));
      std::ofstream sink;
      open_out(sink, keygen_out) << text;
      return 0;
    }
    if (*cmd_encrypt) {
      auto key = load_key(key_path);
      Rng rng(pkc_seed);
      Word c = pkc_conj ? encrypt_conj(key, pkc_bit, pkc_n, rng)
                        : encrypt(key, pkc_bit, pkc_n, rng);
      std::cout << c.str(key.group.alphabet) << '\n';
      return 0;
    }
    if (*cmd_decrypt || *cmd_attack) {
      auto key = load_key(key_path);
      Word c = Word::parse(cipher, key.group.alphabet);
      int budget = pkc_budget > 0 ? pkc_budget
                                  : default_max_iter(static_cast<std::int64_t>(
                                        c.size()));
      PkcBit bit;
      if (*cmd_decrypt) {
        bit = pkc_conj ? decrypt_conj(key, c, budget) : decrypt(key, c, budget);
      } else {
        bit = pkc_conj ? attack_conj(key.group, key.w0, key.w1, c, budget)
                       : attack(key, c, budget);
      }
      std::cout << bit_name(bit) << '\n';
      return bit == PkcBit::undecided ? 2 : 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
