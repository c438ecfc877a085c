#include "fieldmatch/gamma.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace fieldmatch {
namespace {

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double lanczos_positive(double x) {
  // valid for x >= 0.5
  double z = x - 1.0;
  double sum = kLanczos[0];
  for (int i = 1; i < 9; ++i) sum += kLanczos[i] / (z + i);
  double base = z + 7.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(base) - base +
         std::log(sum);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma requires x > 0");
  if (x < 0.5) {
    // reflection keeps accuracy near zero
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) -
           lanczos_positive(1.0 - x);
  }
  return lanczos_positive(x);
}

double log_poisson_pmf(std::uint64_t k, double lambda) {
  if (lambda < 0.0) throw std::domain_error("Poisson mean must be nonnegative");
  if (lambda == 0.0)
    return k == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  double kd = static_cast<double>(k);
  return kd * std::log(lambda) - lambda - log_gamma(kd + 1.0);
}

}  // namespace fieldmatch
