#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fieldmatch/stats.hpp"
#include "fieldmatch/table.hpp"

namespace fieldmatch {

/// Value proportions of one field, the shared input of the literature scores.
struct FieldDistribution {
  std::map<std::string, double> value_props;  // distinct value -> proportion
  std::vector<double> sorted_props;           // proportions, decreasing
  std::uint64_t observations = 0;             // including repetitions

  static FieldDistribution from_column(const FieldColumn& field);
  static FieldDistribution from_stats(const DiscreteStats& stats);
};

/// |C n D| / |C u D|; 0 when both sets are empty.
double jaccard(const FieldDistribution& a, const FieldDistribution& b);

/// log2(|C n D| N / (|C| |D|)) with N the combined observation count of
/// both fields; -inf when the intersection is empty.
double pmi(const FieldDistribution& a, const FieldDistribution& b);

/// | sum p log p - sum q log q |, natural log.
double entropy_difference(const FieldDistribution& a, const FieldDistribution& b);

/// sum over the union of distinct values of (p_i - q_i)^2.
double unsorted_euclidean(const FieldDistribution& a, const FieldDistribution& b);

/// sum (p'_i - q'_i)^2 on the independently sorted proportions, zero-padded.
double sorted_euclidean(const FieldDistribution& a, const FieldDistribution& b);

/// Every scorer the harness knows, Bayesian, MLE, and baseline.
enum class Scorer {
  kDiscrete,
  kPositional,
  kApositional,
  kMleDiscrete,
  kMlePositional,
  kMleApositional,
  kJaccard,
  kPmi,
  kEntropyDiff,
  kEuclidUnsorted,
  kEuclidSorted,
};

std::string to_string(Scorer scorer);
std::optional<Scorer> parse_scorer(const std::string& id);
std::vector<Scorer> all_scorers();
bool is_bayesian(Scorer scorer);
bool is_mle(Scorer scorer);
bool is_baseline(Scorer scorer);

/// Negates distance-like scores so every scorer is higher-is-more-match.
/// Applied exactly once, at the harness boundary.
double orient(double score, Scorer scorer);

}  // namespace fieldmatch
