#include "fieldmatch/table.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fieldmatch {
namespace {

// RFC-4180 row reader.  Returns false at end of input.
bool read_row(std::string_view text, std::size_t& pos, std::vector<std::string>& row) {
  row.clear();
  if (pos >= text.size()) return false;
  std::string cell;
  bool quoted = false;
  while (pos < text.size()) {
    char c = text[pos];
    if (quoted) {
      if (c == '"') {
        if (pos + 1 < text.size() && text[pos + 1] == '"') {
          cell.push_back('"');
          pos += 2;
        } else {
          quoted = false;
          ++pos;
        }
      } else {
        cell.push_back(c);
        ++pos;
      }
    } else if (c == '"' && cell.empty()) {
      quoted = true;
      ++pos;
    } else if (c == ',') {
      row.push_back(std::move(cell));
      cell.clear();
      ++pos;
    } else if (c == '\r' || c == '\n') {
      if (c == '\r' && pos + 1 < text.size() && text[pos + 1] == '\n') ++pos;
      ++pos;
      row.push_back(std::move(cell));
      return true;
    } else {
      cell.push_back(c);
      ++pos;
    }
  }
  row.push_back(std::move(cell));
  return true;
}

}  // namespace

Table parse_csv(std::string_view text, const Alphabet& alphabet) {
  std::size_t pos = 0;
  std::vector<std::string> row;
  if (!read_row(text, pos, row))
    throw std::runtime_error("CSV input is empty; a header row is required");

  Table table;
  for (auto& name : row) table.fields.push_back({std::move(name), {}});

  std::size_t row_number = 1;  // header is row 1
  while (read_row(text, pos, row)) {
    ++row_number;
    if (row.size() == 1 && row[0].empty() && pos >= text.size()) break;  // trailing newline
    if (row.size() != table.fields.size()) {
      std::ostringstream msg;
      msg << "ragged CSV row " << row_number << ": expected " << table.fields.size()
          << " cells, got " << row.size();
      throw std::runtime_error(msg.str());
    }
    for (std::size_t i = 0; i < row.size(); ++i)
      table.fields[i].values.push_back(alphabet.normalize(row[i]));
    ++table.record_count;
  }
  return table;
}

Table load_table(const std::filesystem::path& path, const Alphabet& alphabet) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str(), alphabet);
}

Table filter_fields(const Table& table, double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0))
    throw std::invalid_argument("filter threshold must be in (0, 1]");
  Table out;
  out.record_count = table.record_count;
  for (const auto& field : table.fields) {
    if (field.values.empty()) continue;  // nothing observed, treat as constant
    std::map<std::string_view, std::size_t> counts;
    std::size_t modal = 0;
    for (const auto& v : field.values) modal = std::max(modal, ++counts[v]);
    if (static_cast<double>(modal) / field.values.size() >= threshold) continue;
    out.fields.push_back(field);
  }
  return out;
}

std::pair<Table, Table> split_subsamples(const Table& table, std::size_t n) {
  if (2 * n > table.record_count) {
    std::ostringstream msg;
    msg << "subsample size " << n << " too large for " << table.record_count
        << " records; maximum feasible n is " << table.record_count / 2;
    throw std::invalid_argument(msg.str());
  }
  Table first, last;
  first.record_count = last.record_count = n;
  for (const auto& field : table.fields) {
    FieldColumn head{field.name, {field.values.begin(), field.values.begin() + n}};
    FieldColumn tail{field.name, {field.values.end() - n, field.values.end()}};
    first.fields.push_back(std::move(head));
    last.fields.push_back(std::move(tail));
  }
  return {std::move(first), std::move(last)};
}

}  // namespace fieldmatch
