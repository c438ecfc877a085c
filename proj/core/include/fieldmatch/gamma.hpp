#pragma once

#include <cstdint>

namespace fieldmatch {

/// Natural log of the Gamma function, Lanczos approximation (g = 7, 9 terms).
/// Throws std::domain_error for x <= 0.
double log_gamma(double x);

/// log Pois_lambda(k).  lambda = 0 is the degenerate point mass at 0.
double log_poisson_pmf(std::uint64_t k, double lambda);

}  // namespace fieldmatch
