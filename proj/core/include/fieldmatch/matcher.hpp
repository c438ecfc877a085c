#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fieldmatch/alphabet.hpp"
#include "fieldmatch/baselines.hpp"
#include "fieldmatch/crp.hpp"
#include "fieldmatch/table.hpp"

namespace fieldmatch {

struct MatchConfig {
  ModelPriors priors;
  double p_same = 0.5;   // prior P(S)
  unsigned workers = 0;  // 0 = hardware parallelism

  void validate() const;
};

/// Log posterior odds of the match hypothesis from the three log joints.
/// Throws on non-finite log_pxy.
double log_match_odds(double log_px, double log_py, double log_pxy, double p_same);

/// Posterior P(same model | X, Y): the sigmoid of log_match_odds.
double match_probability(double log_px, double log_py, double log_pxy, double p_same);

/// Fits both fields under one Bayesian or MLE model class, merges, and
/// returns the match posterior.  Symmetric in its field arguments.
double score_pair(const FieldColumn& a, const FieldColumn& b, Scorer scorer,
                  const MatchConfig& config, const Alphabet& alphabet = Alphabet::standard());

/// All pairwise scores for one scorer; higher = more match.  Model-based
/// scorers store log posterior odds rather than the sigmoid probability: the
/// two agree in rank order, but at thousands of records the probability
/// saturates to exactly 0.0 or 1.0 in double precision and would collapse the
/// ranking.  Baseline scorers store the oriented raw score.
struct MatchMatrix {
  Scorer scorer = Scorer::kApositional;
  std::vector<std::string> row_names;  // fields of table A
  std::vector<std::string> col_names;  // fields of table B
  std::vector<double> scores;          // row-major, row_names.size() x col_names.size()

  double at(std::size_t row, std::size_t col) const {
    return scores[row * col_names.size() + col];
  }

  std::string to_tsv() const;
  std::string to_json() const;
};

/// Per-field statistics are fitted exactly once and reused across all pairs;
/// pair scoring afterwards touches only parameters, never records.
MatchMatrix match_matrix(const Table& a, const Table& b, Scorer scorer,
                         const MatchConfig& config,
                         const Alphabet& alphabet = Alphabet::standard());

}  // namespace fieldmatch
