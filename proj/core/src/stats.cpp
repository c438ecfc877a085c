#include "fieldmatch/stats.hpp"

#include <stdexcept>

#include <json.hpp>

namespace fieldmatch {
namespace {

void check_member(const Alphabet& alphabet, const std::string& value) {
  for (char c : value)
    if (!alphabet.contains(c))
      throw std::invalid_argument("value contains character outside the alphabet: " + value);
}

void check_same_alphabet(const std::string& a, const std::string& b) {
  if (a != b) throw std::invalid_argument("cannot merge stats fitted over different alphabets");
}

using json = nlohmann::ordered_json;

json length_counts_to_json(const std::map<std::uint64_t, std::uint64_t>& counts) {
  json out = json::object();
  for (const auto& [len, n] : counts) out[std::to_string(len)] = n;
  return out;
}

std::map<std::uint64_t, std::uint64_t> length_counts_from_json(const json& j) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& [key, value] : j.items()) out[std::stoull(key)] = value.get<std::uint64_t>();
  return out;
}

json char_counts_to_json(const std::map<char, std::uint64_t>& counts) {
  json out = json::object();
  for (const auto& [c, n] : counts) out[std::string(1, c)] = n;
  return out;
}

std::map<char, std::uint64_t> char_counts_from_json(const json& j) {
  std::map<char, std::uint64_t> out;
  for (const auto& [key, value] : j.items()) {
    if (key.size() != 1) throw std::invalid_argument("character key must be one symbol");
    out[key[0]] = value.get<std::uint64_t>();
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> PositionalStats::support_by_position() const {
  std::vector<std::uint64_t> support(char_counts.size(), 0);
  if (support.empty()) return support;
  // suffix-sum of length counts: n_{>=j} = sum_{l>=j} n_l
  for (const auto& [len, n] : length_counts)
    for (std::uint64_t j = 1; j <= len && j <= support.size(); ++j) support[j - 1] += n;
  return support;
}

DiscreteStats fit_discrete(const FieldColumn& field, const Alphabet& alphabet) {
  DiscreteStats stats;
  stats.alphabet = alphabet.symbols();
  for (const auto& value : field.values) {
    check_member(alphabet, value);
    ++stats.counts[value];
    ++stats.total;
  }
  return stats;
}

PositionalStats fit_positional(const FieldColumn& field, const Alphabet& alphabet) {
  PositionalStats stats;
  stats.alphabet = alphabet.symbols();
  for (const auto& value : field.values) {
    check_member(alphabet, value);
    ++stats.length_counts[value.size()];
    ++stats.total;
    if (value.size() > stats.char_counts.size()) stats.char_counts.resize(value.size());
    for (std::size_t j = 0; j < value.size(); ++j) ++stats.char_counts[j][value[j]];
  }
  return stats;
}

ApositionalStats fit_apositional(const FieldColumn& field, const Alphabet& alphabet) {
  ApositionalStats stats;
  stats.alphabet = alphabet.symbols();
  for (const auto& value : field.values) {
    check_member(alphabet, value);
    ++stats.length_counts[value.size()];
    ++stats.total;
    for (char c : value) ++stats.char_counts[c];
    stats.total_chars += value.size();
  }
  return stats;
}

DiscreteStats merge_stats(const DiscreteStats& a, const DiscreteStats& b) {
  check_same_alphabet(a.alphabet, b.alphabet);
  DiscreteStats out = a;
  for (const auto& [value, count] : b.counts) out.counts[value] += count;
  out.total += b.total;
  return out;
}

PositionalStats merge_stats(const PositionalStats& a, const PositionalStats& b) {
  check_same_alphabet(a.alphabet, b.alphabet);
  PositionalStats out = a;
  for (const auto& [len, n] : b.length_counts) out.length_counts[len] += n;
  if (b.char_counts.size() > out.char_counts.size())
    out.char_counts.resize(b.char_counts.size());
  for (std::size_t j = 0; j < b.char_counts.size(); ++j)
    for (const auto& [c, n] : b.char_counts[j]) out.char_counts[j][c] += n;
  out.total += b.total;
  return out;
}

ApositionalStats merge_stats(const ApositionalStats& a, const ApositionalStats& b) {
  check_same_alphabet(a.alphabet, b.alphabet);
  ApositionalStats out = a;
  for (const auto& [len, n] : b.length_counts) out.length_counts[len] += n;
  for (const auto& [c, n] : b.char_counts) out.char_counts[c] += n;
  out.total += b.total;
  out.total_chars += b.total_chars;
  return out;
}

std::uint64_t count_parameters(const DiscreteStats& stats) { return stats.counts.size(); }

std::uint64_t count_parameters(const PositionalStats& stats) {
  std::uint64_t n = stats.length_counts.size();
  for (const auto& position : stats.char_counts) n += position.size();
  return n;
}

std::uint64_t count_parameters(const ApositionalStats& stats) {
  return stats.length_counts.size() + stats.char_counts.size();
}

std::string stats_to_json(const DiscreteStats& stats) {
  json j;
  j["model"] = "discrete";
  j["alphabet"] = stats.alphabet;
  j["total"] = stats.total;
  json counts = json::object();
  for (const auto& [value, count] : stats.counts) counts[value] = count;
  j["counts"] = counts;
  return j.dump();
}

std::string stats_to_json(const PositionalStats& stats) {
  json j;
  j["model"] = "positional";
  j["alphabet"] = stats.alphabet;
  j["total"] = stats.total;
  j["length_counts"] = length_counts_to_json(stats.length_counts);
  json positions = json::array();
  for (const auto& position : stats.char_counts)
    positions.push_back(char_counts_to_json(position));
  j["char_counts"] = positions;
  return j.dump();
}

std::string stats_to_json(const ApositionalStats& stats) {
  json j;
  j["model"] = "apositional";
  j["alphabet"] = stats.alphabet;
  j["total"] = stats.total;
  j["total_chars"] = stats.total_chars;
  j["length_counts"] = length_counts_to_json(stats.length_counts);
  j["char_counts"] = char_counts_to_json(stats.char_counts);
  return j.dump();
}

namespace {

json parse_stats_json(const std::string& text, const char* expected_model) {
  json j = json::parse(text);
  if (j.at("model").get<std::string>() != expected_model)
    throw std::invalid_argument("stats JSON is for a different model class");
  return j;
}

}  // namespace

DiscreteStats discrete_stats_from_json(const std::string& text) {
  json j = parse_stats_json(text, "discrete");
  DiscreteStats stats;
  stats.alphabet = j.at("alphabet").get<std::string>();
  stats.total = j.at("total").get<std::uint64_t>();
  for (const auto& [value, count] : j.at("counts").items())
    stats.counts[value] = count.get<std::uint64_t>();
  return stats;
}

PositionalStats positional_stats_from_json(const std::string& text) {
  json j = parse_stats_json(text, "positional");
  PositionalStats stats;
  stats.alphabet = j.at("alphabet").get<std::string>();
  stats.total = j.at("total").get<std::uint64_t>();
  stats.length_counts = length_counts_from_json(j.at("length_counts"));
  for (const auto& position : j.at("char_counts"))
    stats.char_counts.push_back(char_counts_from_json(position));
  return stats;
}

ApositionalStats apositional_stats_from_json(const std::string& text) {
  json j = parse_stats_json(text, "apositional");
  ApositionalStats stats;
  stats.alphabet = j.at("alphabet").get<std::string>();
  stats.total = j.at("total").get<std::uint64_t>();
  stats.total_chars = j.at("total_chars").get<std::uint64_t>();
  stats.length_counts = length_counts_from_json(j.at("length_counts"));
  stats.char_counts = char_counts_from_json(j.at("char_counts"));
  return stats;
}

}  // namespace fieldmatch
