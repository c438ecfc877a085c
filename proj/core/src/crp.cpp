#include "fieldmatch/crp.hpp"

#include <cmath>
#include <stdexcept>

#include "fieldmatch/gamma.hpp"

namespace fieldmatch {

void ModelPriors::validate() const {
  if (!(alpha > 0.0) || !(lambda > 0.0) || !(beta > 0.0))
    throw std::invalid_argument("model priors must all be strictly positive");
}

double log_base_prob(std::string_view s, double lambda, std::size_t alphabet_size) {
  if (alphabet_size == 0) throw std::invalid_argument("alphabet_size must be >= 1");
  return log_poisson_pmf(s.size(), lambda) -
         static_cast<double>(s.size()) * std::log(static_cast<double>(alphabet_size));
}

double log_acrp_atom_term(double log_t, std::uint64_t m) {
  if (!std::isfinite(log_t))
    throw std::invalid_argument("ACRP base distribution must assign nonzero mass to every atom");
  if (m == 0) return 0.0;
  double t = std::exp(log_t);
  double md = static_cast<double>(m);
  if (t > 0.5) return log_gamma(t + md) - log_gamma(t);
  // log Gamma(t) = log Gamma(t + 1) - log t; exact even when t underflows to 0,
  // where Gamma(t + m) -> Gamma(m) and Gamma(t + 1) -> 1.
  double lg_tm = (t == 0.0) ? log_gamma(md) : log_gamma(t + md);
  double lg_t1 = (t == 0.0) ? 0.0 : log_gamma(t + 1.0);
  return lg_tm - lg_t1 + log_t;
}

double log_acrp_joint_from_terms(double alpha, double total, double atom_term_sum) {
  if (total == 0.0) return 0.0;
  return log_gamma(alpha) - log_gamma(alpha + total) + atom_term_sum;
}

}  // namespace fieldmatch
