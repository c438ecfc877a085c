#include "fieldmatch/experiment.hpp"

#include <stdexcept>

#include "fieldmatch/stats.hpp"

namespace fieldmatch {

std::vector<LabeledScore> diagonal_labels(const MatchMatrix& matrix) {
  std::vector<LabeledScore> labels;
  labels.reserve(matrix.scores.size());
  for (std::size_t i = 0; i < matrix.row_names.size(); ++i)
    for (std::size_t j = 0; j < matrix.col_names.size(); ++j)
      labels.push_back({matrix.at(i, j), i == j});
  return labels;
}

ExperimentReport self_match_experiment(const Table& table, const ExperimentConfig& config,
                                       const Alphabet& alphabet) {
  Table filtered = filter_fields(table, config.filter_threshold);
  if (filtered.fields.size() < 2)
    throw std::runtime_error("self-match needs at least 2 fields after filtering, got " +
                             std::to_string(filtered.fields.size()));
  auto [first, last] = split_subsamples(filtered, config.subsample_size);

  ExperimentReport report;
  report.field_count = filtered.fields.size();

  std::uint64_t p_disc = 0, p_pos = 0, p_apos = 0;
  std::size_t field_total = 0;
  for (const Table* sample : {&first, &last}) {
    for (const auto& field : sample->fields) {
      p_disc += count_parameters(fit_discrete(field, alphabet));
      p_pos += count_parameters(fit_positional(field, alphabet));
      p_apos += count_parameters(fit_apositional(field, alphabet));
      ++field_total;
    }
  }
  report.parameters.discrete = static_cast<double>(p_disc) / field_total;
  report.parameters.positional = static_cast<double>(p_pos) / field_total;
  report.parameters.apositional = static_cast<double>(p_apos) / field_total;

  for (Scorer scorer : config.scorers) {
    MatchMatrix matrix = match_matrix(first, last, scorer, config.match, alphabet);
    auto labels = diagonal_labels(matrix);
    report.scorers.push_back({scorer, roc_curve(labels)});
  }
  return report;
}

std::vector<SizeSweepEntry> size_sweep(const Table& table, const std::vector<std::size_t>& sizes,
                                       const ExperimentConfig& config,
                                       const Alphabet& alphabet) {
  std::vector<SizeSweepEntry> entries;
  for (std::size_t size : sizes) {
    SizeSweepEntry entry;
    entry.size = size;
    try {
      ExperimentConfig sized = config;
      sized.subsample_size = size;
      ExperimentReport report = self_match_experiment(table, sized, alphabet);
      for (const auto& evaluation : report.scorers)
        entry.auc_by_scorer[evaluation.scorer] = evaluation.roc.auc;
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace fieldmatch
