// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion pins its tolerance in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "fieldmatch/baselines.hpp"
#include "fieldmatch/experiment.hpp"
#include "fieldmatch/gamma.hpp"
#include "fieldmatch/matcher.hpp"
#include "fieldmatch/mle.hpp"
#include "fieldmatch/models.hpp"
#include "fieldmatch/roc.hpp"
#include "fieldmatch/stats.hpp"
#include "fieldmatch/synthetic.hpp"

#include "support/oracles.hpp"

using namespace fieldmatch;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
  std::printf("%s  criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

FieldColumn column(std::vector<std::string> values) { return {"f", std::move(values)}; }

const Alphabet kTiny("ABCD", 'A');

// ---- criterion 1: oracle equivalence --------------------------------------

void criterion1() {
  auto start = std::chrono::steady_clock::now();
  ModelPriors priors;
  oracles::TestRng rng(101);
  bool ok = true;
  std::string detail;
  for (int trial = 0; trial < 1000 && ok; ++trial) {
    std::size_t symbols = 1 + rng.below(4);
    std::string roster = std::string("ABCD").substr(0, symbols);
    auto values = oracles::random_strings(rng, roster, 1 + rng.below(20), 5);
    FieldColumn field = column(values);

    double discrete = log_joint_discrete(fit_discrete(field, kTiny), priors);
    double positional = log_joint_positional(fit_positional(field, kTiny), priors);
    double apositional = log_joint_apositional(fit_apositional(field, kTiny), priors);

    ok = ok && close_rel(discrete, oracles::seq_discrete_log_joint(values, priors, 4), 1e-9);
    ok = ok && close_rel(positional, oracles::seq_positional_log_joint(values, priors, 4), 1e-9);
    ok = ok &&
         close_rel(apositional, oracles::seq_apositional_log_joint(values, priors, 4), 1e-9);

    std::shuffle(values.begin(), values.end(), rng.engine);
    FieldColumn permuted = column(values);
    ok = ok && log_joint_discrete(fit_discrete(permuted, kTiny), priors) == discrete;
    ok = ok && log_joint_positional(fit_positional(permuted, kTiny), priors) == positional;
    ok = ok && log_joint_apositional(fit_apositional(permuted, kTiny), priors) == apositional;
    if (!ok) detail = "mismatch at trial " + std::to_string(trial);
  }
  double elapsed = seconds_since(start);
  if (elapsed >= 10.0) {
    ok = false;
    detail = "took " + std::to_string(elapsed) + " s";
  }
  report(1, "Gamma-form joints equal the sequential oracle (1000 random fields)", ok, detail);
}

// ---- criterion 2: merge/chain consistency ---------------------------------

void criterion2() {
  ModelPriors priors;
  MatchConfig config;
  config.workers = 1;
  oracles::TestRng rng(103);
  bool ok = true;
  for (int trial = 0; trial < 200 && ok; ++trial) {
    auto x = oracles::random_strings(rng, "ABCD", 1 + rng.below(15), 5);
    auto y = oracles::random_strings(rng, "ABCD", 1 + rng.below(15), 5);
    auto both = x;
    both.insert(both.end(), y.begin(), y.end());
    FieldColumn fx = column(x), fy = column(y), fxy = column(both);

    ok = ok && log_joint_discrete(merge_stats(fit_discrete(fx, kTiny), fit_discrete(fy, kTiny)),
                                  priors) == log_joint_discrete(fit_discrete(fxy, kTiny), priors);
    ok = ok && log_joint_positional(
                   merge_stats(fit_positional(fx, kTiny), fit_positional(fy, kTiny)), priors) ==
                   log_joint_positional(fit_positional(fxy, kTiny), priors);
    ok = ok && log_joint_apositional(
                   merge_stats(fit_apositional(fx, kTiny), fit_apositional(fy, kTiny)),
                   priors) == log_joint_apositional(fit_apositional(fxy, kTiny), priors);

    for (Scorer scorer : {Scorer::kDiscrete, Scorer::kPositional, Scorer::kApositional}) {
      double ab = score_pair(fx, fy, scorer, config, kTiny);
      ok = ok && ab == score_pair(fy, fx, scorer, config, kTiny);  // symmetric
      ok = ok && ab == score_pair(fx, fy, scorer, config, kTiny);  // deterministic
      double self = score_pair(fx, fx, scorer, config, kTiny);
      ok = ok && self == score_pair(fx, fx, scorer, config, kTiny);
    }
  }
  report(2, "merge/chain consistency and symmetric deterministic self-match", ok);
}

// ---- criterion 3: predictive normalization --------------------------------

void criterion3() {
  ModelPriors priors;
  priors.lambda = 1.0;
  const Alphabet two("AB", 'A');
  auto empty = fit_positional(column({}), two);

  double mass = 0.0;
  std::vector<std::string> level{""};
  for (int len = 0; len <= 8; ++len) {
    for (const auto& s : level) mass += std::exp(log_predictive_positional(s, empty, priors));
    std::vector<std::string> next;
    for (const auto& s : level)
      for (char c : {'A', 'B'}) next.push_back(s + c);
    level = std::move(next);
  }
  double cdf = 0.0;
  for (int k = 0; k <= 8; ++k) cdf += std::exp(log_poisson_pmf(k, 1.0));
  bool ok = std::abs(mass - cdf) <= 1e-9;
  report(3, "predictive mass over strings of length <= 8 equals the Poisson CDF", ok,
         "gap " + std::to_string(std::abs(mass - cdf)));
}

// ---- criterion 4: closed-form anchors -------------------------------------

void criterion4() {
  bool ok = std::abs(log_gamma(1.0)) <= 1e-10 &&
            std::abs(log_gamma(5.0) - std::log(24.0)) <= 1e-10 &&
            std::abs(log_gamma(0.5) - std::log(std::sqrt(std::numbers::pi))) <= 1e-10;

  auto dist = [](std::vector<std::string> values) {
    return FieldDistribution::from_column({"f", std::move(values)});
  };
  ok = ok && jaccard(dist({"A", "B", "C"}), dist({"B", "C", "D"})) == 0.5;
  ok = ok && std::abs(pmi(dist({"A", "B", "C", "D", "A", "B", "C", "D"}),
                          dist({"A", "B", "A", "B", "A", "B", "A", "B"})) -
                      2.0) <= 1e-12;
  ok = ok && std::abs(entropy_difference(dist({"A", "B"}), dist({"C", "C"})) -
                      std::log(2.0)) <= 1e-12;
  ok = ok && std::abs(unsorted_euclidean(dist({"A"}), dist({"B"})) - 2.0) <= 1e-12;
  ok = ok && std::abs(sorted_euclidean(dist({"A"}), dist({"B", "C"})) - 0.5) <= 1e-12;
  report(4, "log_gamma anchors and baseline hand examples", ok);
}

// ---- criterion 5: AUC machinery -------------------------------------------

void criterion5() {
  bool ok = true;
  std::vector<LabeledScore> example{{3, true}, {1, true}, {2, false}, {0, false}};
  ok = ok && auc(example) == 0.75 && oracles::brute_force_auc(example) == 0.75;

  oracles::TestRng rng(107);
  for (int trial = 0; trial < 100 && ok; ++trial) {
    std::vector<LabeledScore> scores;
    std::size_t n = 5 + rng.below(60);
    for (std::size_t i = 0; i < n; ++i)
      scores.push_back({static_cast<double>(rng.below(10)), rng.below(2) == 0});
    scores.push_back({1.0, true});
    scores.push_back({2.0, false});
    ok = ok && std::abs(roc_curve(scores).auc - auc(scores)) <= 1e-12;
    ok = ok && std::abs(auc(scores) - oracles::brute_force_auc(scores)) <= 1e-12;
  }
  report(5, "rank and trapezoidal AUC agree on 100 random labeled sets", ok);
}

// ---- criteria 6 and 7: end-to-end synthetic self-match --------------------

double auc_of(const ExperimentReport& report_, Scorer scorer) {
  for (const auto& evaluation : report_.scorers)
    if (evaluation.scorer == scorer) return evaluation.roc.auc;
  return -1.0;
}

void criteria67(const ExperimentReport& run, const Table& first, const Table& last) {
  // Group ordering by best member: the best probabilistic model beats every
  // baseline, and every multiset-profile score beats every set-based score.
  // (A min-over-group vs max-over-group ordering is deliberately not required;
  // individual members of adjacent groups may cross.)
  double apositional = auc_of(run, Scorer::kApositional);
  double bayes_best = std::max({auc_of(run, Scorer::kDiscrete),
                                auc_of(run, Scorer::kPositional), apositional});
  double multiset_best = std::max({auc_of(run, Scorer::kEuclidSorted),
                                   auc_of(run, Scorer::kEuclidUnsorted),
                                   auc_of(run, Scorer::kEntropyDiff)});
  double multiset_min = std::min({auc_of(run, Scorer::kEuclidSorted),
                                  auc_of(run, Scorer::kEuclidUnsorted),
                                  auc_of(run, Scorer::kEntropyDiff)});
  double set_max = std::max(auc_of(run, Scorer::kJaccard), auc_of(run, Scorer::kPmi));

  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "apositional %.4f, Bayes best %.4f, multiset [%.4f, %.4f], set max %.4f",
                apositional, bayes_best, multiset_min, multiset_best, set_max);
  bool ok6 = apositional >= 0.95 && bayes_best >= multiset_best && multiset_min >= set_max;
  report(6, "synthetic self-match: apositional AUC >= 0.95 and group ordering", ok6, detail);

  char detail7[220];
  std::snprintf(detail7, sizeof(detail7),
                "discrete %.4f vs %.4f, positional %.4f vs %.4f, apositional %.4f vs %.4f",
                auc_of(run, Scorer::kDiscrete), auc_of(run, Scorer::kMleDiscrete),
                auc_of(run, Scorer::kPositional), auc_of(run, Scorer::kMlePositional),
                apositional, auc_of(run, Scorer::kMleApositional));
  bool ok7 = auc_of(run, Scorer::kDiscrete) > auc_of(run, Scorer::kMleDiscrete) &&
             auc_of(run, Scorer::kPositional) > auc_of(run, Scorer::kMlePositional) &&
             apositional > auc_of(run, Scorer::kMleApositional);
  // the even-prior cap: MLE log posterior odds never exceed 0 (probability
  // never exceeds 1/2); tolerance covers float rounding in five-digit joints
  MatchConfig config;
  config.workers = 1;
  for (Scorer scorer : {Scorer::kMleDiscrete, Scorer::kMlePositional, Scorer::kMleApositional}) {
    MatchMatrix m = match_matrix(first, last, scorer, config);
    for (double score : m.scores) ok7 = ok7 && score <= 1e-6;
  }
  report(7, "Bayesian scorers beat their MLE counterparts; MLE posteriors <= 1/2", ok7,
         detail7);
}

// ---- criterion 8: scaling shape -------------------------------------------

double time_scoring_pass(const std::vector<ApositionalStats>& apos,
                         const std::vector<PositionalStats>& pos,
                         const std::vector<DiscreteStats>& disc, const ModelPriors& priors) {
  // merged joints over every pair, repeated; min over repeats for stability
  double best = std::numeric_limits<double>::infinity();
  volatile double sink = 0.0;
  for (int repeat = 0; repeat < 5; ++repeat) {
    auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < apos.size(); ++i)
      for (std::size_t j = 0; j < apos.size(); ++j) {
        sink = sink + log_joint_apositional(merge_stats(apos[i], apos[j]), priors);
        sink = sink + log_joint_positional(merge_stats(pos[i], pos[j]), priors);
        sink = sink + log_joint_discrete(merge_stats(disc[i], disc[j]), priors);
      }
    best = std::min(best, seconds_since(start));
  }
  return best;
}

void criterion8(const ExperimentReport& run5000, const Table& fixture, double eval_seconds) {
  ModelPriors priors;
  ExperimentConfig config;
  config.match.workers = 1;
  config.subsample_size = 250;
  config.scorers = {};
  ExperimentReport run500 = self_match_experiment(fixture, config);

  bool ordering = run500.parameters.apositional < run500.parameters.positional &&
                  run500.parameters.positional < run500.parameters.discrete &&
                  run5000.parameters.apositional < run5000.parameters.positional &&
                  run5000.parameters.positional < run5000.parameters.discrete;

  // parameter-stable fields: small combinatorial spaces saturate quickly
  std::vector<FieldFormat> stable = {{"f1", "d"},   {"f2", "dd"}, {"f3", "a"},
                                     {"f4", "ad"},  {"f5", "d d"}, {"f6", "d.d"}};
  Table small = generate_synthetic_table(stable, 500, 11);
  Table large = generate_synthetic_table(stable, 5000, 11);

  auto fit_all = [&](const Table& t, std::vector<ApositionalStats>& a,
                     std::vector<PositionalStats>& p, std::vector<DiscreteStats>& d) {
    std::uint64_t params = 0;
    for (const auto& field : t.fields) {
      a.push_back(fit_apositional(field));
      p.push_back(fit_positional(field));
      d.push_back(fit_discrete(field));
      params += count_parameters(a.back()) + count_parameters(p.back()) +
                count_parameters(d.back());
    }
    return params;
  };
  std::vector<ApositionalStats> a1, a2;
  std::vector<PositionalStats> p1, p2;
  std::vector<DiscreteStats> d1, d2;
  std::uint64_t params_small = fit_all(small, a1, p1, d1);
  std::uint64_t params_large = fit_all(large, a2, p2, d2);

  double t_small = time_scoring_pass(a1, p1, d1, priors);
  double t_large = time_scoring_pass(a2, p2, d2, priors);
  double time_ratio = t_large / t_small;
  double param_ratio = static_cast<double>(params_large) / static_cast<double>(params_small);

  char detail[200];
  std::snprintf(detail, sizeof(detail),
                "param ratio %.2f, scoring-time ratio %.2f at 10x records; eval run %.1f s",
                param_ratio, time_ratio, eval_seconds);
  bool ok = ordering && param_ratio <= 1.3 && time_ratio <= 1.5 && eval_seconds < 60.0;
  report(8, "parameter-count ordering and record-independent scoring cost", ok, detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();

  // shared end-to-end run: 12-field seeded fixture, n = 5000, every scorer
  Table fixture = generate_synthetic_table(synthetic_fixture_formats(), 10000, 20240901);
  ExperimentConfig config;
  config.match.workers = 1;
  config.subsample_size = 5000;
  config.scorers = all_scorers();
  auto start = std::chrono::steady_clock::now();
  ExperimentReport run = self_match_experiment(fixture, config);
  double eval_seconds = seconds_since(start);

  Table filtered = filter_fields(fixture, config.filter_threshold);
  auto [first, last] = split_subsamples(filtered, config.subsample_size);
  criteria67(run, first, last);
  criterion8(run, fixture, eval_seconds);

  if (failures == 0) std::printf("all acceptance criteria passed\n");
  else std::printf("%d acceptance criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
