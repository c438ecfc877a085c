#include "fieldmatch/roc.hpp"

#include <algorithm>
#include <stdexcept>

namespace fieldmatch {
namespace {

std::vector<LabeledScore> sorted_descending(std::span<const LabeledScore> scores) {
  std::vector<LabeledScore> out(scores.begin(), scores.end());
  std::sort(out.begin(), out.end(),
            [](const LabeledScore& a, const LabeledScore& b) { return a.score > b.score; });
  return out;
}

void check_labels(std::span<const LabeledScore> scores) {
  bool pos = false, neg = false;
  for (const auto& s : scores) (s.is_match ? pos : neg) = true;
  if (!pos || !neg)
    throw std::invalid_argument("ROC needs at least one positive and one negative");
}

}  // namespace

double auc(std::span<const LabeledScore> scores) {
  check_labels(scores);
  auto sorted = sorted_descending(scores);
  // Walk tie groups; within a group positives and negatives split the wins.
  double wins = 0.0;
  std::size_t pos_total = 0, neg_total = 0;
  for (const auto& s : sorted) (s.is_match ? pos_total : neg_total)++;
  std::size_t i = 0;
  std::size_t neg_seen_after = neg_total;
  while (i < sorted.size()) {
    std::size_t j = i;
    std::size_t group_pos = 0, group_neg = 0;
    while (j < sorted.size() && sorted[j].score == sorted[i].score) {
      (sorted[j].is_match ? group_pos : group_neg)++;
      ++j;
    }
    neg_seen_after -= group_neg;
    wins += static_cast<double>(group_pos) *
            (static_cast<double>(neg_seen_after) + 0.5 * static_cast<double>(group_neg));
    i = j;
  }
  return wins / (static_cast<double>(pos_total) * static_cast<double>(neg_total));
}

RocReport roc_curve(std::span<const LabeledScore> scores) {
  check_labels(scores);
  auto sorted = sorted_descending(scores);
  std::size_t pos_total = 0, neg_total = 0;
  for (const auto& s : sorted) (s.is_match ? pos_total : neg_total)++;

  RocReport report;
  report.points.push_back({0.0, 0.0});
  std::size_t tp = 0, fp = 0;
  double area = 0.0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    std::size_t group_pos = 0, group_neg = 0;
    while (j < sorted.size() && sorted[j].score == sorted[i].score) {
      (sorted[j].is_match ? group_pos : group_neg)++;
      ++j;
    }
    double fpr_before = static_cast<double>(fp) / static_cast<double>(neg_total);
    double tpr_before = static_cast<double>(tp) / static_cast<double>(pos_total);
    tp += group_pos;
    fp += group_neg;
    double fpr = static_cast<double>(fp) / static_cast<double>(neg_total);
    double tpr = static_cast<double>(tp) / static_cast<double>(pos_total);
    area += (fpr - fpr_before) * 0.5 * (tpr + tpr_before);
    report.points.push_back({fpr, tpr});
    i = j;
  }
  report.auc = area;
  return report;
}

}  // namespace fieldmatch
