#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fieldmatch/matcher.hpp"
#include "fieldmatch/roc.hpp"
#include "fieldmatch/table.hpp"

namespace fieldmatch {

struct ExperimentConfig {
  MatchConfig match;
  double filter_threshold = 0.99;
  std::size_t subsample_size = 0;
  std::vector<Scorer> scorers;
};

struct ScorerEvaluation {
  Scorer scorer;
  RocReport roc;
};

/// Average parameter counts per model class across all subsample fields.
struct ParameterCountReport {
  double discrete = 0.0;
  double positional = 0.0;
  double apositional = 0.0;
};

struct ExperimentReport {
  std::size_t field_count = 0;
  std::vector<ScorerEvaluation> scorers;
  ParameterCountReport parameters;
};

/// Label every matrix cell with diagonal ground truth: cell (i, j) is a
/// match iff i == j.
std::vector<LabeledScore> diagonal_labels(const MatchMatrix& matrix);

/// Subsample self-match: filter near-constant fields, split first/last n,
/// score every field pair per scorer, evaluate against diagonal truth.
ExperimentReport self_match_experiment(const Table& table, const ExperimentConfig& config,
                                       const Alphabet& alphabet = Alphabet::standard());

struct SizeSweepEntry {
  std::size_t size;
  std::map<Scorer, double> auc_by_scorer;
  std::string error;  // nonempty if this size failed; the sweep continues
};

std::vector<SizeSweepEntry> size_sweep(const Table& table, const std::vector<std::size_t>& sizes,
                                       const ExperimentConfig& config,
                                       const Alphabet& alphabet = Alphabet::standard());

}  // namespace fieldmatch
