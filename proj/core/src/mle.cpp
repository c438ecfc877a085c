#include "fieldmatch/mle.hpp"

#include <cmath>

#include "fieldmatch/gamma.hpp"

namespace fieldmatch {
namespace {

double mean_length(const std::map<std::uint64_t, std::uint64_t>& length_counts,
                   std::uint64_t total) {
  double chars = 0.0;
  for (const auto& [len, n] : length_counts)
    chars += static_cast<double>(len) * static_cast<double>(n);
  return chars / static_cast<double>(total);
}

// sum_l n_l log Pois_{mean}(l); the mean maximizes this within the family
double mle_length_block(const std::map<std::uint64_t, std::uint64_t>& length_counts,
                        std::uint64_t total) {
  double lambda_hat = mean_length(length_counts, total);
  double sum = 0.0;
  for (const auto& [len, n] : length_counts)
    sum += static_cast<double>(n) * log_poisson_pmf(len, lambda_hat);
  return sum;
}

double plugin_term(std::uint64_t count, std::uint64_t support) {
  return static_cast<double>(count) *
         std::log(static_cast<double>(count) / static_cast<double>(support));
}

}  // namespace

double mle_log_joint_discrete(const DiscreteStats& stats) {
  if (stats.total == 0) return 0.0;
  double sum = 0.0;
  for (const auto& [value, count] : stats.counts) sum += plugin_term(count, stats.total);
  return sum;
}

double mle_log_joint_positional(const PositionalStats& stats) {
  if (stats.total == 0) return 0.0;
  double sum = mle_length_block(stats.length_counts, stats.total);
  auto support = stats.support_by_position();
  for (std::size_t j = 0; j < stats.char_counts.size(); ++j)
    for (const auto& [c, n] : stats.char_counts[j])
      if (n > 0) sum += plugin_term(n, support[j]);
  return sum;
}

double mle_log_joint_apositional(const ApositionalStats& stats) {
  if (stats.total == 0) return 0.0;
  double sum = mle_length_block(stats.length_counts, stats.total);
  for (const auto& [c, n] : stats.char_counts)
    if (n > 0) sum += plugin_term(n, stats.total_chars);
  return sum;
}

}  // namespace fieldmatch
