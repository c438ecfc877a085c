#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace fieldmatch {

/// Shared priors for all model classes.
struct ModelPriors {
  double alpha = 3.0;   // CRP concentration
  double lambda = 4.0;  // Poisson mean string length
  double beta = 3.0;    // character Dirichlet prior

  void validate() const;
};

/// Distinct value -> positive multiplicity.
using ValueMultiset = std::map<std::string, std::uint64_t>;

/// log of the Poisson-uniform string base distribution H(s):
/// Pois_lambda(len(s)) * alphabet_size^(-len(s)).
double log_base_prob(std::string_view s, double lambda, std::size_t alphabet_size);

/// log joint probability of a multiset under the Atomic CRP:
///   Gamma(alpha)/Gamma(alpha + sum m_i) * prod_i Gamma(alpha H(x_i) + m_i)/Gamma(alpha H(x_i))
/// computed wholly in log space.  log_H must be finite for every atom.
template <typename LogH>
double log_acrp_joint(const ValueMultiset& multiset, double alpha, LogH&& log_H);

/// One ACRP atom term, log Gamma(t + m) - log Gamma(t) with t = exp(log_t),
/// stable for log_t far below the underflow threshold.
double log_acrp_atom_term(double log_t, std::uint64_t m);

double log_acrp_joint_from_terms(double alpha, double total, double atom_term_sum);

template <typename LogH>
double log_acrp_joint(const ValueMultiset& multiset, double alpha, LogH&& log_H) {
  double total = 0.0;
  double terms = 0.0;
  for (const auto& [value, count] : multiset) {
    terms += log_acrp_atom_term(std::log(alpha) + log_H(value), count);
    total += static_cast<double>(count);
  }
  return log_acrp_joint_from_terms(alpha, total, terms);
}

}  // namespace fieldmatch
