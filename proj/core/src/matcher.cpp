#include "fieldmatch/matcher.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "fieldmatch/mle.hpp"
#include "fieldmatch/models.hpp"

namespace fieldmatch {

void MatchConfig::validate() const {
  priors.validate();
  if (!(p_same > 0.0 && p_same < 1.0))
    throw std::invalid_argument("p_same must lie strictly between 0 and 1");
}

double log_match_odds(double log_px, double log_py, double log_pxy, double p_same) {
  if (!std::isfinite(log_pxy))
    throw std::invalid_argument("match scoring requires a finite merged log joint");
  // group the separate-model terms first so the result is exactly symmetric
  // in (log_px, log_py)
  return (log_pxy - (log_px + log_py)) + (std::log(p_same) - std::log1p(-p_same));
}

double match_probability(double log_px, double log_py, double log_pxy, double p_same) {
  double log_odds = log_match_odds(log_px, log_py, log_pxy, p_same);
  if (log_odds >= 0.0) return 1.0 / (1.0 + std::exp(-log_odds));
  double e = std::exp(log_odds);
  if (e == 0.0) return std::numeric_limits<double>::denorm_min();  // finite evidence stays > 0
  return e / (1.0 + e);
}

namespace {

// Per-model-class plumbing so the matrix code is written once.
template <typename StatsT>
struct ModelOps {
  std::function<StatsT(const FieldColumn&, const Alphabet&)> fit;
  std::function<double(const StatsT&)> joint;
};

ModelOps<DiscreteStats> discrete_ops(const ModelPriors& priors, bool mle) {
  return {[](const FieldColumn& f, const Alphabet& a) { return fit_discrete(f, a); },
          [priors, mle](const DiscreteStats& s) {
            return mle ? mle_log_joint_discrete(s) : log_joint_discrete(s, priors);
          }};
}

ModelOps<PositionalStats> positional_ops(const ModelPriors& priors, bool mle) {
  return {[](const FieldColumn& f, const Alphabet& a) { return fit_positional(f, a); },
          [priors, mle](const PositionalStats& s) {
            return mle ? mle_log_joint_positional(s) : log_joint_positional(s, priors);
          }};
}

ModelOps<ApositionalStats> apositional_ops(const ModelPriors& priors, bool mle) {
  return {[](const FieldColumn& f, const Alphabet& a) { return fit_apositional(f, a); },
          [priors, mle](const ApositionalStats& s) {
            return mle ? mle_log_joint_apositional(s) : log_joint_apositional(s, priors);
          }};
}

template <typename StatsT>
double model_pair_score(const FieldColumn& a, const FieldColumn& b,
                        const ModelOps<StatsT>& ops, const MatchConfig& config,
                        const Alphabet& alphabet) {
  StatsT sa = ops.fit(a, alphabet);
  StatsT sb = ops.fit(b, alphabet);
  return match_probability(ops.joint(sa), ops.joint(sb), ops.joint(merge_stats(sa, sb)),
                           config.p_same);
}

void run_cells(std::size_t cell_count, unsigned workers,
               const std::function<void(std::size_t)>& body) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, cell_count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < cell_count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < cell_count; i += workers) body(i);
    });
  for (auto& t : pool) t.join();
}

template <typename StatsT>
void fill_model_matrix(MatchMatrix& matrix, const Table& a, const Table& b,
                       const ModelOps<StatsT>& ops, const MatchConfig& config,
                       const Alphabet& alphabet) {
  std::vector<StatsT> stats_a, stats_b;
  std::vector<double> joint_a, joint_b;
  for (const auto& field : a.fields) {
    stats_a.push_back(ops.fit(field, alphabet));
    joint_a.push_back(ops.joint(stats_a.back()));
  }
  for (const auto& field : b.fields) {
    stats_b.push_back(ops.fit(field, alphabet));
    joint_b.push_back(ops.joint(stats_b.back()));
  }
  std::size_t cols = b.fields.size();
  run_cells(a.fields.size() * cols, config.workers, [&](std::size_t cell) {
    std::size_t i = cell / cols, j = cell % cols;
    double merged = ops.joint(merge_stats(stats_a[i], stats_b[j]));
    matrix.scores[cell] = log_match_odds(joint_a[i], joint_b[j], merged, config.p_same);
  });
}

void fill_baseline_matrix(MatchMatrix& matrix, const Table& a, const Table& b,
                          Scorer scorer, const MatchConfig& config) {
  std::vector<FieldDistribution> dist_a, dist_b;
  for (const auto& field : a.fields) dist_a.push_back(FieldDistribution::from_column(field));
  for (const auto& field : b.fields) dist_b.push_back(FieldDistribution::from_column(field));
  double (*score)(const FieldDistribution&, const FieldDistribution&) = nullptr;
  switch (scorer) {
    case Scorer::kJaccard: score = jaccard; break;
    case Scorer::kPmi: score = pmi; break;
    case Scorer::kEntropyDiff: score = entropy_difference; break;
    case Scorer::kEuclidUnsorted: score = unsorted_euclidean; break;
    case Scorer::kEuclidSorted: score = sorted_euclidean; break;
    default: throw std::logic_error("not a baseline scorer");
  }
  std::size_t cols = b.fields.size();
  run_cells(a.fields.size() * cols, config.workers, [&](std::size_t cell) {
    matrix.scores[cell] = orient(score(dist_a[cell / cols], dist_b[cell % cols]), scorer);
  });
}

}  // namespace

double score_pair(const FieldColumn& a, const FieldColumn& b, Scorer scorer,
                  const MatchConfig& config, const Alphabet& alphabet) {
  config.validate();
  switch (scorer) {
    case Scorer::kDiscrete:
      return model_pair_score(a, b, discrete_ops(config.priors, false), config, alphabet);
    case Scorer::kPositional:
      return model_pair_score(a, b, positional_ops(config.priors, false), config, alphabet);
    case Scorer::kApositional:
      return model_pair_score(a, b, apositional_ops(config.priors, false), config, alphabet);
    case Scorer::kMleDiscrete:
      return model_pair_score(a, b, discrete_ops(config.priors, true), config, alphabet);
    case Scorer::kMlePositional:
      return model_pair_score(a, b, positional_ops(config.priors, true), config, alphabet);
    case Scorer::kMleApositional:
      return model_pair_score(a, b, apositional_ops(config.priors, true), config, alphabet);
    default:
      throw std::invalid_argument("score_pair expects a model-based scorer");
  }
}

MatchMatrix match_matrix(const Table& a, const Table& b, Scorer scorer,
                         const MatchConfig& config, const Alphabet& alphabet) {
  config.validate();
  if (a.fields.empty() || b.fields.empty())
    throw std::invalid_argument("match_matrix requires nonempty tables");
  MatchMatrix matrix;
  matrix.scorer = scorer;
  for (const auto& field : a.fields) matrix.row_names.push_back(field.name);
  for (const auto& field : b.fields) matrix.col_names.push_back(field.name);
  matrix.scores.assign(a.fields.size() * b.fields.size(), 0.0);

  switch (scorer) {
    case Scorer::kDiscrete:
      fill_model_matrix(matrix, a, b, discrete_ops(config.priors, false), config, alphabet);
      break;
    case Scorer::kPositional:
      fill_model_matrix(matrix, a, b, positional_ops(config.priors, false), config, alphabet);
      break;
    case Scorer::kApositional:
      fill_model_matrix(matrix, a, b, apositional_ops(config.priors, false), config, alphabet);
      break;
    case Scorer::kMleDiscrete:
      fill_model_matrix(matrix, a, b, discrete_ops(config.priors, true), config, alphabet);
      break;
    case Scorer::kMlePositional:
      fill_model_matrix(matrix, a, b, positional_ops(config.priors, true), config, alphabet);
      break;
    case Scorer::kMleApositional:
      fill_model_matrix(matrix, a, b, apositional_ops(config.priors, true), config, alphabet);
      break;
    default:
      fill_baseline_matrix(matrix, a, b, scorer, config);
      break;
  }
  return matrix;
}

std::string MatchMatrix::to_tsv() const {
  std::string out = "field";
  for (const auto& name : col_names) out += "\t" + name;
  out += "\n";
  char buf[64];
  for (std::size_t i = 0; i < row_names.size(); ++i) {
    out += row_names[i];
    for (std::size_t j = 0; j < col_names.size(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", at(i, j));
      out += "\t";
      out += buf;
    }
    out += "\n";
  }
  return out;
}

std::string MatchMatrix::to_json() const {
  nlohmann::ordered_json j;
  j["scorer"] = to_string(scorer);
  j["rows"] = row_names;
  j["cols"] = col_names;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < row_names.size(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t jcol = 0; jcol < col_names.size(); ++jcol) {
      double v = at(i, jcol);
      // JSON has no -inf; the PMI sentinel is serialized as null
      if (std::isfinite(v)) row.push_back(v);
      else row.push_back(nullptr);
    }
    rows.push_back(std::move(row));
  }
  j["scores"] = rows;
  return j.dump(2);
}

}  // namespace fieldmatch
