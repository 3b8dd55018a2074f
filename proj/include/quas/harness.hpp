#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "quas/backends.hpp"
#include "quas/baselines.hpp"
#include "quas/problems.hpp"
#include "quas/scoring.hpp"

namespace quas {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr std::string_view kOutputDirEnv = "QUAS_OUTPUT_DIR";

struct CampaignConfig {
  ProblemKind problem = ProblemKind::maxcut;
  std::string backend = "sa";
  BackendSettings backend_settings;
  std::vector<std::size_t> sizes;
  std::size_t instances_per_size = 25;
  std::uint64_t campaign_seed = 1;
  HeuristicSettings heuristic;
  // Scoring defaults recorded in the header; `score` may override them.
  double min_accuracy = kMinAccuracy;
  Weights weights;
  std::filesystem::path output;
  std::optional<std::filesystem::path> instances_dir;

  /// Throws ConfigError when sizes are empty, unsorted, or too small for the problem.
  void validate() const;
};

/// "4-12", "4..12" or "4,6,8". Throws ConfigError on malformed input.
std::vector<std::size_t> parse_sizes(std::string_view text);

/// Everything that determines the measured values, with defaults resolved.
/// Sizes are excluded so a campaign can later be extended to more sizes.
nlohmann::json fingerprinted_config(const CampaignConfig& config, const BackendRegistry& registry);
std::string fingerprint_of(const nlohmann::json& j);

/// Default location for outputs: $QUAS_OUTPUT_DIR if set, else the working directory.
std::filesystem::path default_output_dir();

struct SkipRecord {
  std::size_t size = 0;
  std::size_t instance_index = 0;
  std::string reason;

  friend bool operator==(const SkipRecord&, const SkipRecord&) = default;
};

struct ResultHeader {
  std::string fingerprint;
  nlohmann::json config = nlohmann::json::object();
  nlohmann::json extra = nlohmann::json::object();  // sizes, scoring defaults, policies
};

/// Line-delimited JSON: one header record, then one record per point or skip.
struct ResultFile {
  ResultHeader header;
  std::vector<DataPoint> points;
  std::vector<SkipRecord> skips;
};

void to_json(nlohmann::json& j, const DataPoint& p);
void from_json(const nlohmann::json& j, DataPoint& p);
std::string header_line(const ResultHeader& header);
std::string point_line(const DataPoint& point);
std::string skip_line(const SkipRecord& skip);

/// Throws DataError on malformed records or a missing header.
ResultFile read_result_file(const std::filesystem::path& path);
ResultFile parse_result_stream(std::istream& in);
void write_result_file(const std::filesystem::path& path, const ResultFile& file);

using ProgressFn = std::function<void(const DataPoint*, const SkipRecord*)>;

/// Runs every (size, instance) pair not already present in config.output,
/// appending and flushing one record at a time. An existing file with a
/// different fingerprint is refused with ConfigError.
ResultFile run_campaign(const CampaignConfig& config, const BackendRegistry& registry = default_registry(),
                        const ProgressFn& progress = {});

struct ScoreOverrides {
  std::optional<double> min_accuracy;
  std::optional<double> w_acc;
  std::optional<double> w_speed;
};

/// build_groups -> size_score -> total_score over the points of one file.
/// Throws DataError when the file mixes problems or backends.
QuasReport score_results(const ResultFile& file, const ScoreOverrides& overrides = {});

/// Scores `input` and writes the report next to it (see report_path_for).
QuasReport score_file(const std::filesystem::path& input, const ScoreOverrides& overrides = {},
                      std::optional<std::filesystem::path> report_out = std::nullopt);
std::filesystem::path report_path_for(const std::filesystem::path& input);

nlohmann::json report_to_json(const QuasReport& report);
QuasReport report_from_json(const nlohmann::json& j);
/// Canonical serialized form; identical reports give identical bytes.
std::string report_text(const QuasReport& report);

/// `samples` points on the fitted quadrant from (a, 0) to (0, b).
std::vector<KpiPoint> sample_lame_curve(const LameFit& fit, std::size_t samples = 200);

struct PlotBundle {
  std::vector<std::filesystem::path> files;
};

/// Per size: <dir>/size_<n>_points.csv and <dir>/size_<n>_curve.csv, plus
/// <dir>/summary.csv. Throws DataError if the report was not computed from `points`.
PlotBundle export_plot_data(const QuasReport& report, const ResultFile& points, const std::filesystem::path& out_dir);

}  // namespace quas
