// fieldmatch: instance-based schema matching from the command line.
//
// Subcommands: match, eval, inspect, normalize.  Exit codes: 0 success,
// 1 usage/config error, 2 data error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fieldmatch/experiment.hpp"
#include "fieldmatch/matcher.hpp"
#include "fieldmatch/mle.hpp"
#include "fieldmatch/models.hpp"
#include "fieldmatch/stats.hpp"
#include "fieldmatch/synthetic.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace fieldmatch;

namespace {

constexpr const char* kFormatVersion = "1";

struct RunOptions {
  double alpha = 3.0;
  double lambda = 4.0;
  double beta = 3.0;
  double prior_same = 0.5;
  double threshold = 0.99;
  std::vector<std::string> scorer_ids;
  std::size_t n = 0;
  std::vector<std::size_t> sizes;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  std::string out = ".";

  MatchConfig match_config() const {
    MatchConfig config;
    config.priors = {alpha, lambda, beta};
    config.p_same = prior_same;
    config.workers = workers;
    config.validate();
    return config;
  }

  std::vector<Scorer> scorers() const {
    if (scorer_ids.empty()) return all_scorers();
    std::vector<Scorer> out_scorers;
    for (const auto& id : scorer_ids) {
      auto scorer = parse_scorer(id);
      if (!scorer) throw CLI::ValidationError("--scorers", "unknown scorer '" + id + "'");
      out_scorers.push_back(*scorer);
    }
    return out_scorers;
  }

  json to_json() const {
    json j;
    j["format_version"] = kFormatVersion;
    j["alpha"] = alpha;
    j["lambda"] = lambda;
    j["beta"] = beta;
    j["prior_same"] = prior_same;
    j["threshold"] = threshold;
    json ids = json::array();
    for (Scorer scorer : scorers()) ids.push_back(to_string(scorer));
    j["scorers"] = ids;
    j["n"] = n;
    j["sizes"] = sizes;
    j["seed"] = seed;
    j["workers"] = workers;
    return j;
  }
};

void add_common_flags(CLI::App* cmd, RunOptions& options) {
  cmd->add_option("--alpha", options.alpha, "CRP concentration")->check(CLI::PositiveNumber);
  cmd->add_option("--lambda", options.lambda, "Poisson mean string length")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--beta", options.beta, "character Dirichlet prior")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--prior-same", options.prior_same, "prior probability of a match")
      ->check(CLI::Range(1e-12, 1.0 - 1e-12));
  cmd->add_option("--threshold", options.threshold,
                  "modal-frequency field filter threshold")
      ->check(CLI::Range(1e-12, 1.0));
  cmd->add_option("--scorers", options.scorer_ids, "scorer ids (default: all)")
      ->delimiter(',');
  cmd->add_option("--seed", options.seed, "seed echoed into reports");
  cmd->add_option("--workers", options.workers, "pair-scoring threads (0 = hardware)");
  cmd->add_option("--out", options.out, "output directory");
  cmd->set_config("--config", "", "config file (ini format; flags override)");
}

void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

std::string config_comment(const RunOptions& options) {
  return "# config " + options.to_json().dump() + "\n";
}

// ---- match -----------------------------------------------------------------

int run_match(const std::string& path_a, const std::string& path_b,
              const RunOptions& options) {
  MatchConfig config = options.match_config();
  Table a = filter_fields(load_table(path_a), options.threshold);
  Table b = filter_fields(load_table(path_b), options.threshold);
  if (a.fields.empty() || b.fields.empty())
    throw std::runtime_error("no fields survive the modal-frequency filter");

  json summary;
  summary["config"] = options.to_json();
  summary["table_a"] = path_a;
  summary["table_b"] = path_b;
  json top_pairs = json::object();

  for (Scorer scorer : options.scorers()) {
    MatchMatrix matrix = match_matrix(a, b, scorer, config);
    std::string stem = "match_" + to_string(scorer);
    write_file(fs::path(options.out) / (stem + ".tsv"),
               config_comment(options) + matrix.to_tsv());

    json j = json::parse(matrix.to_json());
    json wrapped;
    wrapped["config"] = options.to_json();
    wrapped["matrix"] = j;
    write_file(fs::path(options.out) / (stem + ".json"), wrapped.dump(2) + "\n");

    json best = json::array();
    for (std::size_t i = 0; i < matrix.row_names.size(); ++i) {
      std::size_t arg = 0;
      for (std::size_t col = 1; col < matrix.col_names.size(); ++col)
        if (matrix.at(i, col) > matrix.at(i, arg)) arg = col;
      json entry;
      entry["field"] = matrix.row_names[i];
      entry["best_match"] = matrix.col_names[arg];
      double score = matrix.at(i, arg);
      if (std::isfinite(score)) entry["score"] = score;
      else entry["score"] = nullptr;
      if (!is_baseline(scorer)) {
        // model matrices carry log posterior odds; also show the probability
        double p = score >= 0.0 ? 1.0 / (1.0 + std::exp(-score))
                                : std::exp(score) / (1.0 + std::exp(score));
        entry["probability"] = p;
      }
      best.push_back(entry);
    }
    top_pairs[to_string(scorer)] = best;
  }
  summary["top_pairs"] = top_pairs;
  write_file(fs::path(options.out) / "match_summary.json", summary.dump(2) + "\n");
  std::cout << "wrote " << options.scorers().size() << " match matrices to " << options.out
            << "\n";
  return 0;
}

// ---- eval ------------------------------------------------------------------

std::string auc_table_text(const ExperimentReport& report) {
  std::ostringstream out;
  out << "scorer             AUC\n";
  for (const auto& evaluation : report.scorers) {
    std::string id = to_string(evaluation.scorer);
    out << id << std::string(id.size() < 18 ? 18 - id.size() : 1, ' ');
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", evaluation.roc.auc);
    out << buf << "\n";
  }
  return out.str();
}

int run_eval(const std::string& path, const RunOptions& options) {
  if (options.n == 0) throw CLI::ValidationError("--n", "subsample size is required");
  Table table = load_table(path);

  ExperimentConfig config;
  config.match = options.match_config();
  config.filter_threshold = options.threshold;
  config.subsample_size = options.n;
  config.scorers = options.scorers();

  ExperimentReport report = self_match_experiment(table, config);

  json j;
  j["config"] = options.to_json();
  j["table"] = path;
  j["field_count"] = report.field_count;
  j["parameters"] = {{"discrete", report.parameters.discrete},
                     {"positional", report.parameters.positional},
                     {"apositional", report.parameters.apositional}};
  json scorers = json::object();
  for (const auto& evaluation : report.scorers)
    scorers[to_string(evaluation.scorer)] = evaluation.roc.auc;
  j["auc"] = scorers;

  for (const auto& evaluation : report.scorers) {
    std::string csv = config_comment(options) + "fpr,tpr\n";
    char buf[64];
    for (const auto& point : evaluation.roc.points) {
      std::snprintf(buf, sizeof(buf), "%.12g,%.12g\n", point.fpr, point.tpr);
      csv += buf;
    }
    write_file(fs::path(options.out) / ("roc_" + to_string(evaluation.scorer) + ".csv"), csv);
  }

  if (!options.sizes.empty()) {
    auto sweep = size_sweep(table, options.sizes, config);
    json sizes = json::array();
    for (const auto& entry : sweep) {
      json e;
      e["n"] = entry.size;
      if (!entry.error.empty()) {
        e["error"] = entry.error;
      } else {
        json by_scorer = json::object();
        for (const auto& [scorer, value] : entry.auc_by_scorer)
          by_scorer[to_string(scorer)] = value;
        e["auc"] = by_scorer;
      }
      sizes.push_back(e);
    }
    j["size_sweep"] = sizes;
  }

  write_file(fs::path(options.out) / "eval_report.json", j.dump(2) + "\n");
  std::string text = config_comment(options) + auc_table_text(report);
  write_file(fs::path(options.out) / "auc_summary.txt", text);
  std::cout << text;
  return 0;
}

// ---- inspect ---------------------------------------------------------------

json pattern_to_json(const PatternReport& report) {
  json j;
  j["pooled"] = report.pooled;
  json positions = json::array();
  for (const auto& position : report.positions) {
    json p;
    p["position"] = position.position;
    p["support"] = position.support;
    json chars = json::array();
    for (const auto& c : position.chars) {
      json cj;
      cj["symbol"] = std::string(1, c.symbol);
      cj["count"] = c.count;
      cj["empirical"] = c.empirical;
      cj["posterior"] = c.posterior;
      cj["dominant"] = c.dominant;
      chars.push_back(cj);
    }
    p["chars"] = chars;
    positions.push_back(p);
  }
  j["positions"] = positions;
  json lengths = json::object();
  for (const auto& [len, p] : report.length_distribution) lengths[std::to_string(len)] = p;
  j["length_distribution"] = lengths;
  return j;
}

// Values containing a character whose positional empirical frequency falls
// below 1 - threshold; candidates for data entry errors.
std::vector<std::string> outlier_values(const FieldColumn& field,
                                        const PositionalStats& stats, double threshold) {
  auto support = stats.support_by_position();
  double cutoff = 1.0 - threshold;
  std::vector<std::string> outliers;
  std::map<std::string, bool> seen;
  for (const auto& value : field.values) {
    if (seen.count(value)) continue;
    seen[value] = true;
    for (std::size_t j = 0; j < value.size(); ++j) {
      double freq = static_cast<double>(stats.char_counts[j].at(value[j])) /
                    static_cast<double>(support[j]);
      if (freq < cutoff) {
        outliers.push_back(value);
        break;
      }
    }
    if (outliers.size() >= 100) break;
  }
  return outliers;
}

std::string sanitize_filename(const std::string& name) {
  std::string out;
  for (char c : name)
    out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  return out.empty() ? "field" : out;
}

int run_inspect(const std::string& path, const std::string& field_name,
                const RunOptions& options) {
  MatchConfig config = options.match_config();
  Table table = load_table(path);
  const FieldColumn* field = nullptr;
  for (const auto& candidate : table.fields)
    if (candidate.name == field_name) field = &candidate;
  if (!field) {
    std::string available;
    for (const auto& candidate : table.fields)
      available += (available.empty() ? "" : ", ") + candidate.name;
    throw std::runtime_error("no field named '" + field_name +
                             "'; available fields: " + available);
  }

  auto positional = fit_positional(*field);
  auto apositional = fit_apositional(*field);

  json j;
  j["config"] = options.to_json();
  j["table"] = path;
  j["field"] = field_name;
  j["positional"] = pattern_to_json(
      inspect_patterns(positional, config.priors, options.threshold));
  j["apositional"] = pattern_to_json(
      inspect_patterns(apositional, config.priors, options.threshold));
  j["outlier_values"] = outlier_values(*field, positional, options.threshold);

  fs::path out_path = fs::path(options.out) / ("inspect_" + sanitize_filename(field_name) + ".json");
  write_file(out_path, j.dump(2) + "\n");
  std::cout << j.dump(2) << "\n";
  return 0;
}

// ---- normalize -------------------------------------------------------------

std::string csv_escape(const std::string& value) {
  if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

int run_normalize(const std::string& path, const RunOptions& options,
                  const std::string& out_file) {
  Table table = load_table(path);
  std::string csv;
  for (std::size_t f = 0; f < table.fields.size(); ++f)
    csv += (f ? "," : "") + csv_escape(table.fields[f].name);
  csv += "\n";
  for (std::size_t r = 0; r < table.record_count; ++r) {
    for (std::size_t f = 0; f < table.fields.size(); ++f)
      csv += (f ? "," : "") + csv_escape(table.fields[f].values[r]);
    csv += "\n";
  }
  if (out_file.empty()) std::cout << csv;
  else write_file(out_file, csv);
  (void)options;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"instance-based schema matching with nonparametric Bayesian field models"};
  app.require_subcommand(1);

  RunOptions options;

  std::string match_a, match_b;
  auto* match_cmd = app.add_subcommand("match", "score all field pairs of two tables");
  match_cmd->add_option("table_a", match_a, "first CSV file")->required();
  match_cmd->add_option("table_b", match_b, "second CSV file")->required();
  add_common_flags(match_cmd, options);

  std::string eval_path;
  auto* eval_cmd = app.add_subcommand("eval", "subsample self-match experiment");
  eval_cmd->add_option("table", eval_path, "CSV file")->required();
  eval_cmd->add_option("--n", options.n, "subsample size");
  eval_cmd->add_option("--sizes", options.sizes, "additional subsample sizes to sweep")
      ->delimiter(',');
  add_common_flags(eval_cmd, options);

  std::string inspect_path, inspect_field;
  auto* inspect_cmd = app.add_subcommand("inspect", "character-pattern report for one field");
  inspect_cmd->add_option("table", inspect_path, "CSV file")->required();
  inspect_cmd->add_option("--field", inspect_field, "field name")->required();
  add_common_flags(inspect_cmd, options);

  std::string normalize_path, normalize_out;
  auto* normalize_cmd = app.add_subcommand("normalize", "dump the normalized table as CSV");
  normalize_cmd->add_option("table", normalize_path, "CSV file")->required();
  normalize_cmd->add_option("--out-file", normalize_out, "output file (default stdout)");
  add_common_flags(normalize_cmd, options);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (match_cmd->parsed()) return run_match(match_a, match_b, options);
    if (eval_cmd->parsed()) return run_eval(eval_path, options);
    if (inspect_cmd->parsed()) return run_inspect(inspect_path, inspect_field, options);
    return run_normalize(normalize_path, options, normalize_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
