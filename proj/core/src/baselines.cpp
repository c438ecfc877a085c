#include "fieldmatch/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fieldmatch {
namespace {

void finish(FieldDistribution& dist) {
  dist.sorted_props.reserve(dist.value_props.size());
  for (const auto& [value, p] : dist.value_props) dist.sorted_props.push_back(p);
  std::sort(dist.sorted_props.begin(), dist.sorted_props.end(), std::greater<>());
}

}  // namespace

FieldDistribution FieldDistribution::from_column(const FieldColumn& field) {
  FieldDistribution dist;
  std::map<std::string, std::uint64_t> counts;
  for (const auto& v : field.values) ++counts[v];
  dist.observations = field.values.size();
  for (const auto& [value, count] : counts)
    dist.value_props[value] =
        static_cast<double>(count) / static_cast<double>(dist.observations);
  finish(dist);
  return dist;
}

FieldDistribution FieldDistribution::from_stats(const DiscreteStats& stats) {
  FieldDistribution dist;
  dist.observations = stats.total;
  for (const auto& [value, count] : stats.counts)
    dist.value_props[value] =
        static_cast<double>(count) / static_cast<double>(stats.total);
  finish(dist);
  return dist;
}

namespace {

std::size_t intersection_size(const FieldDistribution& a, const FieldDistribution& b) {
  std::size_t n = 0;
  for (const auto& [value, p] : a.value_props) n += b.value_props.count(value);
  return n;
}

double entropy(const FieldDistribution& d) {
  double h = 0.0;
  for (const auto& [value, p] : d.value_props) h += p * std::log(p);
  return h;
}

}  // namespace

double jaccard(const FieldDistribution& a, const FieldDistribution& b) {
  std::size_t inter = intersection_size(a, b);
  std::size_t uni = a.value_props.size() + b.value_props.size() - inter;
  if (uni == 0) return 0.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

double pmi(const FieldDistribution& a, const FieldDistribution& b) {
  if (a.value_props.empty() || b.value_props.empty())
    throw std::invalid_argument("PMI requires nonempty value sets");
  std::size_t inter = intersection_size(a, b);
  if (inter == 0) return -std::numeric_limits<double>::infinity();
  double n = static_cast<double>(a.observations + b.observations);
  return std::log2(static_cast<double>(inter) * n /
                   (static_cast<double>(a.value_props.size()) *
                    static_cast<double>(b.value_props.size())));
}

double entropy_difference(const FieldDistribution& a, const FieldDistribution& b) {
  return std::abs(entropy(a) - entropy(b));
}

double unsorted_euclidean(const FieldDistribution& a, const FieldDistribution& b) {
  double sum = 0.0;
  for (const auto& [value, p] : a.value_props) {
    auto it = b.value_props.find(value);
    double q = it == b.value_props.end() ? 0.0 : it->second;
    sum += (p - q) * (p - q);
  }
  for (const auto& [value, q] : b.value_props)
    if (!a.value_props.count(value)) sum += q * q;
  return sum;
}

double sorted_euclidean(const FieldDistribution& a, const FieldDistribution& b) {
  const auto& p = a.sorted_props;
  const auto& q = b.sorted_props;
  double sum = 0.0;
  for (std::size_t i = 0; i < std::max(p.size(), q.size()); ++i) {
    double pi = i < p.size() ? p[i] : 0.0;
    double qi = i < q.size() ? q[i] : 0.0;
    sum += (pi - qi) * (pi - qi);
  }
  return sum;
}

std::string to_string(Scorer scorer) {
  switch (scorer) {
    case Scorer::kDiscrete: return "discrete";
    case Scorer::kPositional: return "positional";
    case Scorer::kApositional: return "apositional";
    case Scorer::kMleDiscrete: return "mle-discrete";
    case Scorer::kMlePositional: return "mle-positional";
    case Scorer::kMleApositional: return "mle-apositional";
    case Scorer::kJaccard: return "jaccard";
    case Scorer::kPmi: return "pmi";
    case Scorer::kEntropyDiff: return "entropy-diff";
    case Scorer::kEuclidUnsorted: return "euclid-unsorted";
    case Scorer::kEuclidSorted: return "euclid-sorted";
  }
  return "unknown";
}

std::optional<Scorer> parse_scorer(const std::string& id) {
  for (Scorer scorer : all_scorers())
    if (to_string(scorer) == id) return scorer;
  return std::nullopt;
}

std::vector<Scorer> all_scorers() {
  return {Scorer::kDiscrete,      Scorer::kPositional,    Scorer::kApositional,
          Scorer::kMleDiscrete,   Scorer::kMlePositional, Scorer::kMleApositional,
          Scorer::kJaccard,       Scorer::kPmi,           Scorer::kEntropyDiff,
          Scorer::kEuclidUnsorted, Scorer::kEuclidSorted};
}

bool is_bayesian(Scorer scorer) {
  return scorer == Scorer::kDiscrete || scorer == Scorer::kPositional ||
         scorer == Scorer::kApositional;
}

bool is_mle(Scorer scorer) {
  return scorer == Scorer::kMleDiscrete || scorer == Scorer::kMlePositional ||
         scorer == Scorer::kMleApositional;
}

bool is_baseline(Scorer scorer) { return !is_bayesian(scorer) && !is_mle(scorer); }

double orient(double score, Scorer scorer) {
  switch (scorer) {
    case Scorer::kEntropyDiff:
    case Scorer::kEuclidUnsorted:
    case Scorer::kEuclidSorted:
      return -score;
    default:
      return score;
  }
}

}  // namespace fieldmatch
