#pragma once

#include "fieldmatch/stats.hpp"

namespace fieldmatch {

/// Maximum-likelihood counterparts of the three Bayesian joints: the same
/// sufficient statistics scored with plug-in empirical probabilities on the
/// data they were fitted to.  Empty stats score 0.

/// sum_i m_i log(m_i / n)
double mle_log_joint_discrete(const DiscreteStats& stats);

/// Poisson at the mean observed length plus per-position empirical
/// character frequencies.
double mle_log_joint_positional(const PositionalStats& stats);

/// Same with pooled character frequencies.
double mle_log_joint_apositional(const ApositionalStats& stats);

}  // namespace fieldmatch
