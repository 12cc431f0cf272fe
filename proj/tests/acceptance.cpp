// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line. Run via ctest or directly: ./dehnlab_acceptance
//
// Criterion 5's height-ratio window is checked exactly as stated; see the
// NOTE in that case for the measured finite-size behavior.

#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dehnlab/branching.hpp"
#include "dehnlab/harness.hpp"
#include "dehnlab/pkc.hpp"
#include "oracles.hpp"

using namespace dehnlab;
using namespace dehnlab::testing;

namespace {

struct Tally {
  std::size_t witnesses_checked = 0;
  std::size_t witness_failures = 0;
  std::size_t exhausted_positives = 0;
};

Tally& tally() {
  static Tally t;
  return t;
}

const Presentation& z2() {
  static Presentation p = build_presentation(2, {Word::parse("abAB")});
  return p;
}

const Presentation& z3() {
  static Presentation p = build_presentation(1, {Word::parse("aaa")});
  return p;
}

void check_loop_witness(const SolveOutcome& out, const Word& loop,
                        std::int32_t locus) {
  ++tally().witnesses_checked;
  auto end = trace(*out.witness, locus, loop);
  if (!end || *end != locus) {
    ++tally().witness_failures;
  }
}

void absorb(const ExperimentResult& result) {
  auto report = verify_witnesses(result);
  tally().witnesses_checked += report.checked;
  tally().witness_failures += report.failures;
}

void verdict(int criterion, bool pass, const std::string& detail) {
  std::printf("[criterion %d] %s — %s\n", criterion, pass ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
  CHECK_MESSAGE(pass, "criterion ", criterion, ": ", detail);
}

ExperimentConfig batch_config(Problem problem, std::int64_t n, int trials,
                              std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.problem = problem;
  cfg.presentation = z2();
  cfg.base_word = Word::parse("ab");
  cfg.subgroup = {Word::parse("ab")};
  cfg.k = 4;
  cfg.q = 0.3;
  cfg.n_schedule = {n};
  cfg.trials = trials;
  cfg.master_seed = seed;
  cfg.retain_witnesses = true;
  return cfg;
}

}  // namespace

TEST_CASE("criterion 1: solver acceptance never contradicts exact oracles") {
  auto start = std::chrono::steady_clock::now();
  const int max_iter = 15;
  std::size_t false_accepts = 0;
  std::size_t words_tested = 0;

  AbelianModel m2(z2());
  FiniteModel m3 = FiniteModel::cyclic3();
  AbelianModel m3_ab(z3());

  struct Target {
    const Presentation& pres;
    int gens;
    std::function<bool(const Word&)> trivial;
    std::function<bool(const Word&, const Word&)> conj;
    std::function<bool(const std::vector<Word>&, const Word&)> member;
  };
  std::vector<Target> targets;
  targets.push_back({z2(), 2,
                     [&](const Word& w) { return m2.trivial(w); },
                     [&](const Word& a, const Word& b) {
                       return m2.conjugate(a, b);
                     },
                     [&](const std::vector<Word>& h, const Word& w) {
                       return m2.member(h, w);
                     }});
  targets.push_back({z3(), 1,
                     [&](const Word& w) {
                       bool fin = m3.trivial(w);
                       REQUIRE(fin == m3_ab.trivial(w));  // oracle cross-check
                       return fin;
                     },
                     [&](const Word& a, const Word& b) {
                       return m3.conjugate(a, b);
                     },
                     [&](const std::vector<Word>& h, const Word& w) {
                       return m3.member(h, w);
                     }});

  Rng rng(0xACCE97);
  for (const auto& target : targets) {
    for (int i = 0; i < 1000; ++i) {
      Word w = random_word_up_to(target.gens, 12, rng);
      ++words_tested;
      auto wsp = solve_wsp(target.pres, w, max_iter);
      if (wsp.accepted()) {
        if (!target.trivial(w)) {
          ++false_accepts;
        }
        check_loop_witness(wsp, w, wsp.witness->base_out);
      } else if (target.trivial(w)) {
        ++tally().exhausted_positives;
      }
    }
    for (int i = 0; i < 500; ++i) {
      Word w1 = random_word_up_to(target.gens, 12, rng);
      Word w2 = random_word_up_to(target.gens, 12, rng);
      auto esp = solve_esp(target.pres, w1, w2, max_iter);
      if (esp.accepted()) {
        if (!target.trivial(reduce(w1 * invert(w2)))) {
          ++false_accepts;
        }
        check_loop_witness(esp, reduce(w1 * invert(w2)),
                           esp.witness->base_out);
      }

      auto csp = solve_csp(target.pres, w1, w2, max_iter);
      if (csp.accepted()) {
        if (!target.conj(w1, w2)) {
          ++false_accepts;
        }
        if (csp.witness_locus) {
          check_loop_witness(
              csp, rotate(cyclically_reduce(w2), csp.witness_locus->second),
              csp.witness_locus->first);
        }
      }

      std::vector<Word> H{random_word_up_to(target.gens, 6, rng)};
      if (rng.below(2) == 0) {
        H.push_back(random_word_up_to(target.gens, 6, rng));
      }
      Word w = random_word_up_to(target.gens, 12, rng);
      auto msp = solve_msp(target.pres, H, w, max_iter);
      if (msp.accepted()) {
        if (!target.member(H, w)) {
          ++false_accepts;
        }
        check_loop_witness(msp, w, msp.witness->base_out);
      }
    }
  }

  auto seconds = std::chrono::duration_cast<std::chrono::seconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  bool pass = false_accepts == 0 && seconds < 60;
  verdict(1, pass,
          "no false accepts across " + std::to_string(words_tested) +
              " wsp words + 2000 esp/csp/msp instances (exhausted positives: " +
              std::to_string(tally().exhausted_positives) + ", runtime " +
              std::to_string(seconds) + "s < 60s)");
}

TEST_CASE("criterion 3: depth chain at n = 300") {
  std::size_t rows = 0;
  bool all_bounded = true;
  auto run = [&](Problem p, int trials, std::uint64_t seed) {
    auto result = run_experiment(batch_config(p, 300, trials, seed));
    absorb(result);
    for (const auto& row : result.rows) {
      ++rows;
      if (row.iterations > row.tree_height) {
        all_bounded = false;
      }
    }
  };
  run(Problem::wsp, 500, 31);
  run(Problem::esp, 200, 32);
  run(Problem::csp, 200, 33);
  run(Problem::msp2, 200, 34);
  verdict(3, all_bounded && rows == 1100,
          "iterations <= tree height in " + std::to_string(rows) +
              "/1100 instrumented rows");
}

TEST_CASE("criterion 4: generic envelope at n = 1000") {
  bool pass = true;
  std::string detail = "fractions within ceil(e^2 ln n) = 52:";
  for (Problem p : {Problem::wsp, Problem::esp, Problem::csp, Problem::msp1,
                    Problem::msp2}) {
    auto result = run_experiment(
        batch_config(p, 1000, 200, 40 + static_cast<std::uint64_t>(p)));
    absorb(result);
    double fraction = result.success_fraction[0].second;
    pass = pass && fraction >= 0.99;
    detail += " " + problem_name(p) + "=" + std::to_string(fraction);
  }

  // Envelope fractions trend upward with n (checked loosely).
  ExperimentConfig trend;
  trend.problem = Problem::wsp;
  trend.presentation = z3();
  trend.n_schedule = {100, 1000};
  trend.trials = 200;
  trend.master_seed = 77;
  auto result = run_experiment(trend);
  double first = result.success_fraction.front().second;
  double last = result.success_fraction.back().second;
  pass = pass && (last >= first - 0.02);

  verdict(4, pass, detail);
}

TEST_CASE("criterion 5: CMJ constants and Monte-Carlo checks") {
  double e2 = std::exp(2.0);

  bool residuals_ok = true;
  for (double em : {0.5, 1.0, 3.0, 10.0, 100.0, 1000.0}) {
    double g = gamma_of(em);
    residuals_ok =
        residuals_ok && std::abs(g * std::exp(g + 1.0) * em - 1.0) < 1e-10;
  }

  // Monte-Carlo rendition of the Laplace transform at theta = 2, EM = 1.
  Rng mc_rng(0x1A91ACE);
  const int samples = 100000;
  const int truncation = 2000;  // tail below 2/truncation = 1e-3
  double total = 0;
  for (int s = 0; s < samples; ++s) {
    double clock = 0;
    double acc = 0;
    for (int j = 1; j <= truncation; ++j) {
      clock += mc_rng.exponential(static_cast<double>(j));
      acc += std::exp(-2.0 * clock);
    }
    total += acc;
  }
  double mc = total / samples;
  bool laplace_ok = std::abs(mc - laplace_m(2.0, 1.0)) < 0.05;

  bool below_e2 = true;
  Rng tree_rng(0xCE11);
  for (std::int32_t nu : {1, 2, 5}) {
    auto s = estimate_height_ratio(OffspringDistribution::point_mass(nu),
                                   10000, 10, tree_rng);
    below_e2 = below_e2 && s.mean <= e2;
    below_e2 =
        below_e2 && constants_of(static_cast<double>(nu)).height_constant < e2;
  }

  // Height-ratio window exactly as stated: EM = 1, n = 1e5, 50 trials,
  // mean within 1.7956 +- 15%.
  //
  // NOTE: the almost-sure limit 1/(alpha gamma) = 1.7956 is approached very
  // slowly; both this implementation and an independent Python rendition of
  // Eq. (4)/(5) measure a mean ratio near 1.46-1.49 at n = 1e5 (about 18%
  // below the limit), so this subcheck fails for the faithful process. The
  // surrounding checks (residuals, Laplace MC, e^2 ceiling) pass.
  Rng ratio_rng(0x0EED);
  auto summary = estimate_height_ratio(OffspringDistribution::point_mass(1),
                                       100000, 50, ratio_rng);
  double target = 1.795560738334311;
  bool window_ok =
      summary.mean >= 0.85 * target && summary.mean <= 1.15 * target;

  bool pass = residuals_ok && laplace_ok && below_e2 && window_ok;
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "gamma residuals<1e-10: %s; laplace MC %.4f vs 1.0 (5%%): %s; "
                "heights < e^2: %s; mean ratio %.4f in 1.7956+-15%%: %s",
                residuals_ok ? "yes" : "no", mc, laplace_ok ? "yes" : "no",
                below_e2 ? "yes" : "no", summary.mean,
                window_ok ? "yes" : "no");
  verdict(5, pass, buf);
}

TEST_CASE("criterion 6: exact weight identities") {
  Rng rng(0x6EED);
  bool exact = true;

  auto m = OffspringDistribution::weighted({0, 1, 3}, {0.25, 0.5, 0.25});
  for (int t = 0; t < 200; ++t) {
    auto tree = grow_tree(m, 2000, rng);
    exact = exact &&
            tree.total_weight() == 1 + tree.steps() + tree.children_added();
  }

  auto d_i = identity_distribution(z2());
  auto d_h = subgroup_distribution({Word::parse("ab")});
  for (int t = 0; t < 100; ++t) {
    auto g = random_equal_word(z2(), Word::parse("ab"), 500, d_i, rng);
    exact = exact && g.tree.total_weight() ==
                         g.trace.intermediate_lengths.back() + 1;
    auto g2 = random_subgroup_word2(z2(), {Word::parse("ab")}, 500, 0.3, d_i,
                                    d_h, rng);
    exact = exact && g2.tree.total_weight() ==
                         g2.trace.intermediate_lengths.back() + 1;
  }
  verdict(6, exact,
          "total weight = 1 + n + sum(nu) and = |w_n| + 1 exactly across 400 "
          "instrumented runs");
}

TEST_CASE("criterion 7: height CDF dominance") {
  const int samples = 2000;
  const std::int64_t n = 2000;
  double slack = 1.6276236307187293 * std::sqrt(2.0 / samples);

  auto m_i = OffspringDistribution::from_insertion(identity_distribution(z2()));
  Rng rng(0x70D0);

  std::vector<std::int32_t> single, forest, coupled_t, coupled_tp;
  auto m_h = OffspringDistribution::point_mass(1);  // |ab| - 1
  for (int i = 0; i < samples; ++i) {
    single.push_back(grow_tree(m_i, n, rng).height());
    forest.push_back(grow_forest(m_i, 9, n, rng).height());
    auto [t, tp] = grow_msp_pair(m_i, m_h, 0.3, n, rng);
    coupled_t.push_back(t.height());
    coupled_tp.push_back(tp.height());
  }

  auto dominated = [&](const std::vector<std::int32_t>& hi,
                       const std::vector<std::int32_t>& lo) {
    for (int x = 0; x <= 64; ++x) {
      if (empirical_height_cdf(hi, x) < empirical_height_cdf(lo, x) - slack) {
        return false;
      }
    }
    return true;
  };

  bool forest_ok = dominated(forest, single);
  bool msp_ok = dominated(coupled_t, coupled_tp);
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "forest CDF >= single-root CDF - %.4f: %s; msp T >= T': %s "
                "(%d paired samples, n=%lld)",
                slack, forest_ok ? "yes" : "no", msp_ok ? "yes" : "no",
                samples, static_cast<long long>(n));
  verdict(7, forest_ok && msp_ok, buf);
}

TEST_CASE("criterion 8: PKC end-to-end on the demo key") {
  auto key = demo_keypair();
  const std::int64_t n = 200;
  int budget = default_max_iter(n);

  int word_ok = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(Rng::derive_seed(0xF8C, seed));
    int bit = static_cast<int>(seed % 2);
    Word c = encrypt(key, bit, n, rng);
    bool d = decrypt(key, c, budget) == static_cast<PkcBit>(bit);
    bool a = attack(key, c, budget) == static_cast<PkcBit>(bit);
    if (d && a) {
      ++word_ok;
    }
  }

  int conj_ok = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(Rng::derive_seed(0xF8D, seed));
    int bit = static_cast<int>(seed % 2);
    Word c = encrypt_conj(key, bit, n, rng);
    bool d = decrypt_conj(key, c, budget) == static_cast<PkcBit>(bit);
    bool a = attack_conj(key.group, key.w0, key.w1, c, budget) ==
             static_cast<PkcBit>(bit);
    if (d && a) {
      ++conj_ok;
    }
  }

  verdict(8, word_ok == 100 && conj_ok == 50,
          "decrypt+attack " + std::to_string(word_ok) +
              "/100 at n=200; conjugacy variant " + std::to_string(conj_ok) +
              "/50");
}

TEST_CASE("criterion 9: byte-identical CSV reproducibility") {
  bool pass = true;
  for (Problem p : {Problem::wsp, Problem::csp}) {
    auto cfg = batch_config(p, 300, 40, 90 + static_cast<std::uint64_t>(p));
    cfg.retain_witnesses = false;
    cfg.workers = 1;
    auto serial = csv_string(run_experiment(cfg));
    cfg.workers = 2;
    auto parallel = csv_string(run_experiment(cfg));
    auto again = csv_string(run_experiment(cfg));
    pass = pass && serial == parallel && parallel == again;
  }
  verdict(9, pass, "identical seeds reproduce identical bytes across reruns "
                   "and worker counts (wsp, csp)");
}

TEST_CASE("criterion 2: witness integrity across all suites") {
  // Runs last: aggregates every witness re-trace performed above.
  bool pass =
      tally().witnesses_checked > 3000 && tally().witness_failures == 0;
  verdict(2, pass,
          std::to_string(tally().witness_failures) + " failures in " +
              std::to_string(tally().witnesses_checked) +
              " accepted-witness re-traces");
}
