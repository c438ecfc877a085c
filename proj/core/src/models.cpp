#include "fieldmatch/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fieldmatch/gamma.hpp"

namespace fieldmatch {
namespace {

double log_add(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// ACRP over string lengths with the Poisson base; shared by the positional
// and apositional joints.
double log_length_block(const std::map<std::uint64_t, std::uint64_t>& length_counts,
                        std::uint64_t total, const ModelPriors& priors) {
  double terms = 0.0;
  for (const auto& [len, n] : length_counts)
    terms += log_acrp_atom_term(std::log(priors.alpha) + log_poisson_pmf(len, priors.lambda), n);
  return log_acrp_joint_from_terms(priors.alpha, static_cast<double>(total), terms);
}

// One Dirichlet-multinomial block: sum_a [lgG(c_a + beta) - lgG(beta)]
// + lgG(|A| beta) - lgG(support + |A| beta).  Zero counts contribute nothing.
double log_char_block(const std::map<char, std::uint64_t>& counts, std::uint64_t support,
                      double beta, std::size_t alphabet_size) {
  if (support == 0) return 0.0;
  double sum = 0.0;
  for (const auto& [c, n] : counts)
    if (n > 0) sum += log_gamma(static_cast<double>(n) + beta) - log_gamma(beta);
  double ab = static_cast<double>(alphabet_size) * beta;
  return sum + log_gamma(ab) - log_gamma(static_cast<double>(support) + ab);
}

}  // namespace

double log_joint_discrete(const DiscreteStats& stats, const ModelPriors& priors) {
  priors.validate();
  std::size_t alphabet_size = stats.alphabet.size();
  return log_acrp_joint(stats.counts, priors.alpha, [&](const std::string& s) {
    return log_base_prob(s, priors.lambda, alphabet_size);
  });
}

double log_predictive_positional(std::string_view s, const PositionalStats& stats,
                                 const ModelPriors& priors) {
  priors.validate();
  std::size_t alphabet_size = stats.alphabet.size();
  auto support = stats.support_by_position();

  std::uint64_t n_len = 0;
  if (auto it = stats.length_counts.find(s.size()); it != stats.length_counts.end())
    n_len = it->second;
  double log_numerator =
      log_add(n_len > 0 ? std::log(static_cast<double>(n_len))
                        : -std::numeric_limits<double>::infinity(),
              std::log(priors.alpha) + log_poisson_pmf(s.size(), priors.lambda));
  double result = log_numerator - std::log(static_cast<double>(stats.total) + priors.alpha);

  double ab = static_cast<double>(alphabet_size) * priors.beta;
  for (std::size_t j = 0; j < s.size(); ++j) {
    std::uint64_t c = 0;
    if (j < stats.char_counts.size())
      if (auto it = stats.char_counts[j].find(s[j]); it != stats.char_counts[j].end())
        c = it->second;
    std::uint64_t n_at_least = j < support.size() ? support[j] : 0;
    result += std::log(static_cast<double>(c) + priors.beta) -
              std::log(static_cast<double>(n_at_least) + ab);
  }
  return result;
}

double log_joint_positional(const PositionalStats& stats, const ModelPriors& priors) {
  priors.validate();
  if (stats.total == 0) return 0.0;
  double result = log_length_block(stats.length_counts, stats.total, priors);
  auto support = stats.support_by_position();
  for (std::size_t j = 0; j < stats.char_counts.size(); ++j)
    result += log_char_block(stats.char_counts[j], support[j], priors.beta,
                             stats.alphabet.size());
  return result;
}

double log_joint_apositional(const ApositionalStats& stats, const ModelPriors& priors) {
  priors.validate();
  if (stats.total == 0) return 0.0;
  return log_length_block(stats.length_counts, stats.total, priors) +
         log_char_block(stats.char_counts, stats.total_chars, priors.beta,
                        stats.alphabet.size());
}

namespace {

PositionPattern make_position_pattern(std::uint64_t position,
                                      const std::map<char, std::uint64_t>& counts,
                                      std::uint64_t support, double beta,
                                      std::size_t alphabet_size, double threshold) {
  PositionPattern pattern;
  pattern.position = position;
  pattern.support = support;
  double ab = static_cast<double>(alphabet_size) * beta;
  for (const auto& [c, n] : counts) {
    if (n == 0) continue;
    double empirical = static_cast<double>(n) / static_cast<double>(support);
    double posterior = (static_cast<double>(n) + beta) / (static_cast<double>(support) + ab);
    pattern.chars.push_back({c, n, empirical, posterior, empirical >= threshold});
  }
  std::sort(pattern.chars.begin(), pattern.chars.end(),
            [](const CharPattern& a, const CharPattern& b) {
              return a.count != b.count ? a.count > b.count : a.symbol < b.symbol;
            });
  return pattern;
}

std::map<std::uint64_t, double> length_distribution(
    const std::map<std::uint64_t, std::uint64_t>& counts, std::uint64_t total) {
  std::map<std::uint64_t, double> out;
  for (const auto& [len, n] : counts)
    out[len] = static_cast<double>(n) / static_cast<double>(total);
  return out;
}

}  // namespace

PatternReport inspect_patterns(const PositionalStats& stats, const ModelPriors& priors,
                               double dominance_threshold) {
  PatternReport report;
  if (stats.total == 0) return report;
  report.length_distribution = length_distribution(stats.length_counts, stats.total);
  auto support = stats.support_by_position();
  for (std::size_t j = 0; j < stats.char_counts.size(); ++j) {
    if (support[j] == 0) continue;
    report.positions.push_back(make_position_pattern(j + 1, stats.char_counts[j], support[j],
                                                     priors.beta, stats.alphabet.size(),
                                                     dominance_threshold));
  }
  return report;
}

PatternReport inspect_patterns(const ApositionalStats& stats, const ModelPriors& priors,
                               double dominance_threshold) {
  PatternReport report;
  report.pooled = true;
  if (stats.total == 0) return report;
  report.length_distribution = length_distribution(stats.length_counts, stats.total);
  if (stats.total_chars > 0)
    report.positions.push_back(make_position_pattern(0, stats.char_counts, stats.total_chars,
                                                     priors.beta, stats.alphabet.size(),
                                                     dominance_threshold));
  return report;
}

}  // namespace fieldmatch
