// quas: run benchmark campaigns, score result files, export plot data.
//
//   quas run --problem maxcut --backend sa --sizes 4-12 --instances 25 --seed 1 --out mc_sa.jsonl
//   quas score --input mc_sa.jsonl
//   quas plot-data --report mc_sa.report.json --points mc_sa.jsonl --out-dir plots/
//
// Exit codes: 0 success, 2 configuration error, 3 data error.

#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "quas/errors.hpp"
#include "quas/harness.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitData = 3;

struct RunArgs {
  std::string problem = "maxcut";
  std::string backend = "sa";
  std::string sizes;
  std::size_t instances = 25;
  std::uint64_t seed = 1;
  std::string out;
  std::string instances_dir;
  quas::BackendSettings backend_settings;
  quas::HeuristicSettings heuristic;
  double min_accuracy = quas::kMinAccuracy;
  double w_acc = 1.0;
  double w_speed = 1.0;
  bool quiet = false;
};

int do_run(const RunArgs& args) {
  quas::CampaignConfig config;
  config.problem = quas::parse_problem_kind(args.problem);
  config.backend = args.backend;
  config.backend_settings = args.backend_settings;
  config.sizes = quas::parse_sizes(args.sizes);
  config.instances_per_size = args.instances;
  config.campaign_seed = args.seed;
  config.heuristic = args.heuristic;
  config.min_accuracy = args.min_accuracy;
  config.weights = {args.w_acc, args.w_speed};
  config.output = args.out.empty()
                      ? quas::default_output_dir() / (args.problem + "_" + args.backend + ".jsonl")
                      : std::filesystem::path(args.out);
  if (!args.instances_dir.empty()) config.instances_dir = args.instances_dir;

  std::size_t points = 0, skips = 0;
  const auto file = quas::run_campaign(config, quas::default_registry(),
                                       [&](const quas::DataPoint* p, const quas::SkipRecord* s) {
                                         if (p) ++points;
                                         if (s) ++skips;
                                         if (!args.quiet && p) {
                                           std::fprintf(stderr, "n=%zu i=%zu acc=%.4f t=%.3es\n", p->size,
                                                        p->instance_index, p->accuracy, p->runtime);
                                         }
                                       });
  std::printf("%s: %zu new points, %zu new skips, %zu points total (fingerprint %s)\n", config.output.c_str(),
              points, skips, file.points.size(), file.header.fingerprint.c_str());
  return 0;
}

int do_score(const std::string& input, const quas::ScoreOverrides& overrides, const std::string& out) {
  std::optional<std::filesystem::path> report_out;
  if (!out.empty()) report_out = out;
  const auto report = quas::score_file(input, overrides, report_out);
  std::printf("%-6s %-10s %-10s %-10s %-8s %-8s %-8s\n", "size", "A_n", "A_curve", "A_offset", "a", "b", "p");
  for (const auto& s : report.sizes) {
    if (s.fit) {
      std::printf("%-6zu %-10.5f %-10.5f %-10.5f %-8.4f %-8.4f %-8.4f\n", s.size, s.area, s.area_curve,
                  s.area_offset, s.fit->a, s.fit->b, s.fit->p);
    } else {
      std::printf("%-6zu %-10.5f %-10.5f %-10.5f %-8s %-8s %-8s\n", s.size, s.area, s.area_curve, s.area_offset,
                  "-", "-", "-");
    }
  }
  std::printf("score %.6f -> %s\n", report.total,
              report_out.value_or(quas::report_path_for(input)).c_str());
  return 0;
}

int do_plot(const std::string& report_path, const std::string& points_path, const std::string& out_dir) {
  std::ifstream in(report_path);
  if (!in) throw quas::DataError("cannot open report " + report_path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw quas::DataError(std::string("malformed report: ") + e.what());
  }
  const auto report = quas::report_from_json(j);
  const auto dir = out_dir.empty() ? quas::default_output_dir() / "plot-data" : std::filesystem::path(out_dir);
  const auto bundle = quas::export_plot_data(report, quas::read_result_file(points_path), dir);
  std::printf("wrote %zu files to %s\n", bundle.files.size(), dir.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QuAS benchmark campaigns and scoring"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run a campaign and append data points to a JSONL file");
  run_cmd->add_option("--problem", run.problem, "maxcut | ising | tsp")->capture_default_str();
  run_cmd->add_option("--backend", run.backend, "random | sa | qaoa-sim")->capture_default_str();
  run_cmd->add_option("--sizes", run.sizes, "Inclusive range (4-12, 4..12) or list (4,6,8)")->required();
  run_cmd->add_option("--instances", run.instances, "Random instances per size")->capture_default_str();
  run_cmd->add_option("--seed", run.seed, "Campaign seed")->capture_default_str();
  run_cmd->add_option("--out", run.out, "Result file (default $QUAS_OUTPUT_DIR/<problem>_<backend>.jsonl)");
  run_cmd->add_option("--instances-dir", run.instances_dir, "Also write every generated instance as JSON here");
  run_cmd->add_option("--samples", run.backend_settings.samples, "Samples (random) or shots (qaoa-sim); 0 = default");
  run_cmd->add_option("--sweeps", run.backend_settings.sweeps, "SA sweeps per read; 0 = 100 m");
  run_cmd->add_option("--reads", run.backend_settings.reads, "SA restarts")->capture_default_str();
  run_cmd->add_option("--layers", run.backend_settings.layers, "QAOA layers")->capture_default_str();
  run_cmd->add_option("--max-evals", run.backend_settings.max_evals, "QAOA expectation evaluations")
      ->capture_default_str();
  run_cmd->add_option("--qubit-cap", run.backend_settings.qubit_cap, "Statevector qubit cap")->capture_default_str();
  run_cmd->add_option("--heuristic-restarts", run.heuristic.restarts)->capture_default_str();
  run_cmd->add_option("--heuristic-budget", run.heuristic.iterations_per_restart, "Moves per restart; 0 = 50 n");
  run_cmd->add_option("--min-accuracy", run.min_accuracy, "Default retention floor recorded for scoring")
      ->capture_default_str();
  run_cmd->add_option("--w-acc", run.w_acc)->capture_default_str();
  run_cmd->add_option("--w-speed", run.w_speed)->capture_default_str();
  run_cmd->add_flag("--quiet", run.quiet, "No per-point progress on stderr");

  std::string score_input, score_out;
  quas::ScoreOverrides overrides;
  auto* score_cmd = app.add_subcommand("score", "Score a result file and write <input>.report.json");
  score_cmd->add_option("--input", score_input, "Result file")->required();
  score_cmd->add_option("--min-accuracy", overrides.min_accuracy);
  score_cmd->add_option("--w-acc", overrides.w_acc);
  score_cmd->add_option("--w-speed", overrides.w_speed);
  score_cmd->add_option("--out", score_out, "Report path (default beside the input)");

  std::string plot_report, plot_points, plot_dir;
  auto* plot_cmd = app.add_subcommand("plot-data", "Export per-size CSVs of points, fronts and fitted curves");
  plot_cmd->add_option("--report", plot_report)->required();
  plot_cmd->add_option("--points", plot_points)->required();
  plot_cmd->add_option("--out-dir", plot_dir, "Default $QUAS_OUTPUT_DIR/plot-data");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run_cmd) return do_run(run);
    if (*score_cmd) return do_score(score_input, overrides, score_out);
    if (*plot_cmd) return do_plot(plot_report, plot_points, plot_dir);
  } catch (const quas::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const quas::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
