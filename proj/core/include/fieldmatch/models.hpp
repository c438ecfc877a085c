#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fieldmatch/crp.hpp"
#include "fieldmatch/stats.hpp"

namespace fieldmatch {

/// log P(data | discrete model): Atomic CRP over whole strings with the
/// Poisson-uniform base distribution.
double log_joint_discrete(const DiscreteStats& stats, const ModelPriors& priors);

/// Predictive log probability of one string under the positional model:
///   (n_l + alpha Pois_lambda(l)) / (n + alpha)
///   * prod_j (c_{j,s_j} + beta) / (n_{>=j} + |A| beta)
double log_predictive_positional(std::string_view s, const PositionalStats& stats,
                                 const ModelPriors& priors);

/// log joint of all fitted data under the positional model, Gamma form.
/// Touches each nonzero parameter exactly once.
double log_joint_positional(const PositionalStats& stats, const ModelPriors& priors);

/// Same with one pooled character block.
double log_joint_apositional(const ApositionalStats& stats, const ModelPriors& priors);

/// Character-level pattern summary (per position, or pooled for the
/// apositional model).
struct CharPattern {
  char symbol;
  std::uint64_t count;
  double empirical;  // count / support
  double posterior;  // (count + beta) / (support + |A| beta)
  bool dominant;     // empirical >= dominance threshold
};

struct PositionPattern {
  std::uint64_t position;  // 1-based; 0 for the pooled block
  std::uint64_t support;   // observations at this position
  std::vector<CharPattern> chars;
};

struct PatternReport {
  std::vector<PositionPattern> positions;
  std::map<std::uint64_t, double> length_distribution;
  bool pooled = false;
};

PatternReport inspect_patterns(const PositionalStats& stats, const ModelPriors& priors,
                               double dominance_threshold = 0.99);
PatternReport inspect_patterns(const ApositionalStats& stats, const ModelPriors& priors,
                               double dominance_threshold = 0.99);

}  // namespace fieldmatch
