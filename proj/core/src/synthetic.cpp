#include "fieldmatch/synthetic.hpp"

#include <stdexcept>

namespace fieldmatch {
namespace {

// splitmix64; tiny, seedable, and identical on every platform
struct Rng {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

struct Token {
  char kind;  // 'd', 'a', 'x', or literal
  bool literal;
  std::uint64_t min_repeat = 1;
  std::uint64_t max_repeat = 1;
};

std::vector<Token> parse_pattern(const std::string& pattern) {
  std::vector<Token> tokens;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    char c = pattern[i];
    if (c == '{') {
      if (tokens.empty()) throw std::invalid_argument("repeat range without a token");
      std::size_t close = pattern.find('}', i);
      std::size_t comma = pattern.find(',', i);
      if (close == std::string::npos || comma == std::string::npos || comma > close)
        throw std::invalid_argument("malformed repeat range in pattern: " + pattern);
      tokens.back().min_repeat = std::stoull(pattern.substr(i + 1, comma - i - 1));
      tokens.back().max_repeat = std::stoull(pattern.substr(comma + 1, close - comma - 1));
      if (tokens.back().max_repeat < tokens.back().min_repeat)
        throw std::invalid_argument("repeat range must be nondecreasing: " + pattern);
      i = close;
    } else {
      bool generator = c == 'd' || c == 'a' || c == 'x' || c == 'z' || c == 'w';
      tokens.push_back({c, !generator});
    }
  }
  return tokens;
}

// symbol k of an m-symbol roster with probability (k+1) / (m(m+1)/2)
char skewed_pick(const char* roster, std::uint64_t m, Rng& rng) {
  std::uint64_t r = rng.below(m * (m + 1) / 2);
  std::uint64_t k = 0, cumulative = 1;
  while (r >= cumulative) {
    ++k;
    cumulative += k + 1;
  }
  return roster[k];
}

std::string generate_value(const std::vector<Token>& tokens, Rng& rng) {
  static const char digits[] = "0123456789";
  static const char letters[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
  static const char alnum[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
  std::string value;
  for (const auto& token : tokens) {
    std::uint64_t repeats =
        token.min_repeat + rng.below(token.max_repeat - token.min_repeat + 1);
    for (std::uint64_t r = 0; r < repeats; ++r) {
      if (token.literal) value.push_back(token.kind);
      else if (token.kind == 'd') value.push_back(digits[rng.below(10)]);
      else if (token.kind == 'a') value.push_back(letters[rng.below(26)]);
      else if (token.kind == 'z') value.push_back(skewed_pick(digits, 10, rng));
      else if (token.kind == 'w') value.push_back(skewed_pick(letters, 26, rng));
      else value.push_back(alnum[rng.below(36)]);
    }
  }
  return value;
}

}  // namespace

Table generate_synthetic_table(std::span<const FieldFormat> formats, std::size_t rows,
                               std::uint64_t seed) {
  Table table;
  table.record_count = rows;
  for (std::size_t f = 0; f < formats.size(); ++f) {
    auto tokens = parse_pattern(formats[f].pattern);
    Rng rng{seed * 0x100000001b3ULL + f};
    FieldColumn column{formats[f].name, {}};
    column.values.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) column.values.push_back(generate_value(tokens, rng));
    table.fields.push_back(std::move(column));
  }
  return table;
}

std::vector<FieldFormat> synthetic_fixture_formats() {
  // Deliberate structure: three uniform/skewed pairs share a support but not a
  // frequency profile (hard for set-based scores), word3/name share characters
  // and mean length but not length spread (hard for the MLE ablations), and
  // cardinalities range from 100 to one million so every field-size regime is
  // represented.
  return {
      {"date", "dd/dd/19dd"},
      {"npi_id", "1dddd"},
      {"zip", "ddddd"},
      {"state", "aa"},
      {"grade", "ww"},
      {"skew2", "zz"},
      {"unif2", "dd"},
      {"skew3", "zzz"},
      {"unif3", "ddd"},
      {"word3", "aaa"},
      {"name", "a{2,4}"},
      {"amount", "d{1,2}.dd"},
  };
}

}  // namespace fieldmatch
