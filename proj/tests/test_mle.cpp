#include <cmath>

#include <doctest.h>

#include "fieldmatch/matcher.hpp"
#include "fieldmatch/mle.hpp"
#include "fieldmatch/models.hpp"
#include "support/oracles.hpp"

using namespace fieldmatch;

namespace {

const Alphabet kTiny("AB", 'A');

FieldColumn column(std::vector<std::string> values) { return {"f", std::move(values)}; }

}  // namespace

TEST_CASE("MLE discrete joint") {
  CHECK(mle_log_joint_discrete(fit_discrete(column({}), kTiny)) == 0.0);
  CHECK(mle_log_joint_discrete(fit_discrete(column({"A", "A"}), kTiny)) == 0.0);
  CHECK(mle_log_joint_discrete(fit_discrete(column({"A", "B"}), kTiny)) ==
        doctest::Approx(2.0 * std::log(0.5)).epsilon(1e-12));
  CHECK(mle_log_joint_discrete(fit_discrete(column({"A", "A", "A", "B"}), kTiny)) ==
        doctest::Approx(3.0 * std::log(0.75) + std::log(0.25)).epsilon(1e-12));
}

TEST_CASE("MLE positional joint") {
  CHECK(mle_log_joint_positional(fit_positional(column({}), kTiny)) == 0.0);
  // two length-1 strings: lambda-hat = 1, character frequency 1
  CHECK(mle_log_joint_positional(fit_positional(column({"A", "A"}), kTiny)) ==
        doctest::Approx(2.0 * log_poisson_pmf(1, 1.0)).epsilon(1e-12));
  // all-empty field: degenerate Poisson at 0
  CHECK(mle_log_joint_positional(fit_positional(column({""}), kTiny)) == 0.0);
}

TEST_CASE("MLE apositional joint") {
  CHECK(mle_log_joint_apositional(fit_apositional(column({}), kTiny)) == 0.0);
  CHECK(mle_log_joint_apositional(fit_apositional(column({"A", "A"}), kTiny)) ==
        doctest::Approx(2.0 * log_poisson_pmf(1, 1.0)).epsilon(1e-12));
  CHECK(mle_log_joint_apositional(fit_apositional(column({""}), kTiny)) == 0.0);
}

TEST_CASE("MLE discrete dominates the Bayesian joint on the fitted data") {
  // The discrete Bayesian joint averages iid likelihoods over the prior, so it
  // can never beat the empirical plug-in maximum.  No such bound holds for the
  // positional/apositional joints: their Bayesian length block is not
  // restricted to the Poisson family the MLE uses, and it wins whenever the
  // observed lengths concentrate more tightly than any Poisson.
  ModelPriors priors;
  oracles::TestRng rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    auto values = oracles::random_strings(rng, "AB", 1 + rng.below(15), 4);
    auto field = column(values);
    CHECK(mle_log_joint_discrete(fit_discrete(field, kTiny)) >=
          log_joint_discrete(fit_discrete(field, kTiny), priors));
  }
  // concrete witness of the length-block effect: every string has length 4
  auto constant_length = column({"AAAA", "ABAB", "BBBB", "BABA", "AABB", "BBAA"});
  CHECK(mle_log_joint_positional(fit_positional(constant_length, kTiny)) <
        log_joint_positional(fit_positional(constant_length, kTiny), priors));
}

TEST_CASE("pooled MLE never beats separately maximized likelihoods") {
  oracles::TestRng rng(59);
  MatchConfig config;
  config.workers = 1;
  for (int trial = 0; trial < 100; ++trial) {
    auto x = column(oracles::random_strings(rng, "AB", 1 + rng.below(12), 4));
    auto y = column(oracles::random_strings(rng, "AB", 1 + rng.below(12), 4));

    auto dx = fit_discrete(x, kTiny), dy = fit_discrete(y, kTiny);
    CHECK(mle_log_joint_discrete(merge_stats(dx, dy)) <=
          mle_log_joint_discrete(dx) + mle_log_joint_discrete(dy) + 1e-9);

    auto px = fit_positional(x, kTiny), py = fit_positional(y, kTiny);
    CHECK(mle_log_joint_positional(merge_stats(px, py)) <=
          mle_log_joint_positional(px) + mle_log_joint_positional(py) + 1e-9);

    auto ax = fit_apositional(x, kTiny), ay = fit_apositional(y, kTiny);
    CHECK(mle_log_joint_apositional(merge_stats(ax, ay)) <=
          mle_log_joint_apositional(ax) + mle_log_joint_apositional(ay) + 1e-9);

    // with equal priors the MLE match probability is capped at 1/2
    for (Scorer scorer :
         {Scorer::kMleDiscrete, Scorer::kMlePositional, Scorer::kMleApositional})
      CHECK(score_pair(x, y, scorer, config, kTiny) <= 0.5 + 1e-9);
  }
}
