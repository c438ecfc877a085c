#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fieldmatch/alphabet.hpp"
#include "fieldmatch/crp.hpp"
#include "fieldmatch/table.hpp"

namespace fieldmatch {

/// Sufficient statistics for the discrete model: the full value multiset.
struct DiscreteStats {
  std::string alphabet;  // roster the field was normalized into
  ValueMultiset counts;
  std::uint64_t total = 0;
};

/// Sufficient statistics for the positional model: string-length counts n_l
/// and per-position character counts c_{j,a}.  Positions are 1-based;
/// char_counts[j-1] holds position j.  n_{>=j} is always derived from
/// length_counts, never stored.
struct PositionalStats {
  std::string alphabet;
  std::map<std::uint64_t, std::uint64_t> length_counts;
  std::vector<std::map<char, std::uint64_t>> char_counts;
  std::uint64_t total = 0;

  /// n_{>=j} for j = 1..max_length, by suffix sum.
  std::vector<std::uint64_t> support_by_position() const;
};

/// Apositional statistics: length counts plus character counts pooled
/// across positions (c'_a).
struct ApositionalStats {
  std::string alphabet;
  std::map<std::uint64_t, std::uint64_t> length_counts;
  std::map<char, std::uint64_t> char_counts;
  std::uint64_t total = 0;
  std::uint64_t total_chars = 0;
};

DiscreteStats fit_discrete(const FieldColumn& field,
                           const Alphabet& alphabet = Alphabet::standard());
PositionalStats fit_positional(const FieldColumn& field,
                               const Alphabet& alphabet = Alphabet::standard());
ApositionalStats fit_apositional(const FieldColumn& field,
                                 const Alphabet& alphabet = Alphabet::standard());

/// Pointwise count sums; merge(fit(X), fit(Y)) == fit(X ++ Y).
/// Throws std::invalid_argument on alphabet mismatch.
DiscreteStats merge_stats(const DiscreteStats& a, const DiscreteStats& b);
PositionalStats merge_stats(const PositionalStats& a, const PositionalStats& b);
ApositionalStats merge_stats(const ApositionalStats& a, const ApositionalStats& b);

/// Number of model parameters: nonzero count entries (plus distinct values
/// for the discrete model).
std::uint64_t count_parameters(const DiscreteStats& stats);
std::uint64_t count_parameters(const PositionalStats& stats);
std::uint64_t count_parameters(const ApositionalStats& stats);

/// JSON layouts so models can be fit once and compared many times.
std::string stats_to_json(const DiscreteStats& stats);
std::string stats_to_json(const PositionalStats& stats);
std::string stats_to_json(const ApositionalStats& stats);
DiscreteStats discrete_stats_from_json(const std::string& text);
PositionalStats positional_stats_from_json(const std::string& text);
ApositionalStats apositional_stats_from_json(const std::string& text);

}  // namespace fieldmatch
