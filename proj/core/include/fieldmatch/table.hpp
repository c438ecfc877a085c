#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "fieldmatch/alphabet.hpp"

namespace fieldmatch {

/// One table column.  The name is metadata only and never used for matching.
struct FieldColumn {
  std::string name;
  std::vector<std::string> values;  // normalized, source order preserved
};

struct Table {
  std::vector<FieldColumn> fields;
  std::size_t record_count = 0;
};

/// Parses an RFC-4180 CSV file with a mandatory header row and normalizes
/// every value.  Ragged rows are a hard error naming the row number.
Table load_table(const std::filesystem::path& path,
                 const Alphabet& alphabet = Alphabet::standard());

/// Same, from an already-read CSV body.
Table parse_csv(std::string_view text,
                const Alphabet& alphabet = Alphabet::standard());

/// Drops every field whose modal value's relative frequency is >= threshold.
/// Removes constant and all-empty fields at the default 0.99.
Table filter_fields(const Table& table, double threshold = 0.99);

/// First-n / last-n row subsamples; ground truth is field i <-> field i.
std::pair<Table, Table> split_subsamples(const Table& table, std::size_t n);

}  // namespace fieldmatch
