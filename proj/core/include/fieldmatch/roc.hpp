#pragma once

#include <span>
#include <vector>

namespace fieldmatch {

struct LabeledScore {
  double score;
  bool is_match;
};

struct RocPoint {
  double fpr;
  double tpr;
};

struct RocReport {
  std::vector<RocPoint> points;  // (0,0) .. (1,1), threshold sweep
  double auc = 0.0;
};

/// Mann-Whitney rank AUC: P(random positive outscores random negative),
/// ties counted 1/2.  -inf sentinels sort below every finite score and tie
/// with each other.  Requires at least one positive and one negative.
double auc(std::span<const LabeledScore> scores);

/// Step curve over distinct score thresholds; ties enter together so the
/// trapezoidal area equals the rank AUC.
RocReport roc_curve(std::span<const LabeledScore> scores);

}  // namespace fieldmatch
