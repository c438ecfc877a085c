#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fieldmatch/table.hpp"

namespace fieldmatch {

/// One synthetic field described by a pattern string:
///   d  random digit          a  random uppercase letter
///   x  random letter-or-digit
///   z  skewed digit          w  skewed uppercase letter
/// (skewed draws pick symbol k with probability proportional to k+1, giving
/// fields that share a support with their uniform counterpart but differ in
/// frequency profile).  Any other character is a literal.  A token may carry a
/// repeat range, e.g. "a{3,10}" draws a length uniformly in [3,10].
struct FieldFormat {
  std::string name;
  std::string pattern;
};

/// Deterministic pseudo-random table; identical (formats, rows, seed) input
/// yields a byte-identical table on every platform.
Table generate_synthetic_table(std::span<const FieldFormat> formats, std::size_t rows,
                               std::uint64_t seed);

/// The 12-field mixed-format fixture used by the evaluation suite: dates,
/// prefixed IDs, zip-like digits, name-like letters, amounts, and several
/// deliberately ambiguous pairs (same support with different frequency
/// profiles; same characters with different length spreads).
std::vector<FieldFormat> synthetic_fixture_formats();

}  // namespace fieldmatch
