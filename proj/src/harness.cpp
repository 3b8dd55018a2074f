#include "quas/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "quas/errors.hpp"
#include "quas/rng.hpp"

namespace quas {
namespace {

std::size_t parse_count(std::string_view text) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw ConfigError("bad size '" + std::string(text) + "'");
  return value;
}

std::size_t minimum_size(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::maxcut: return 2;
    case ProblemKind::ising: return 1;
    case ProblemKind::tsp: return 3;
  }
  return 1;
}

nlohmann::json axis_json(const AxisScale& a) {
  return {{"min", a.min}, {"max", a.max}, {"range", a.range}, {"offset", a.offset}, {"degenerate", a.degenerate}};
}

AxisScale axis_from_json(const nlohmann::json& j) {
  return {j.at("min").get<double>(), j.at("max").get<double>(), j.at("range").get<double>(),
          j.at("offset").get<double>(), j.at("degenerate").get<bool>()};
}

// Notes stamped into reports so readers know which readings were applied.
nlohmann::json interpretations() {
  return {
      {"accuracy", "1 - (S_heur - S)/|S_heur| when maximizing, 1 - (S - S_heur)/|S_heur| when minimizing; "
                   "clamped at 0; infeasible solutions score 0; not clipped above 1"},
      {"axes", "fit plane is (normalized speed = 1/runtime, normalized accuracy), both higher-is-better"},
      {"offset_area", "alpha_acc + alpha_speed - alpha_acc*alpha_speed in normalized space, alpha = min/range capped at 1"},
      {"single_point_front", "a front of one point is scored as the limiting rectangle a=b=1, p=p_max"},
      {"runtime", "solver wall-time around solve and decode; heuristic time excluded, logged as heuristic_runtime"},
      {"qaoa", "angles optimized on the exact statevector expectation; shots only for the reported solution"},
  };
}

}  // namespace

std::vector<std::size_t> parse_sizes(std::string_view text) {
  std::vector<std::size_t> sizes;
  if (text.empty()) throw ConfigError("empty size list");
  auto range_at = [&](std::string_view sep) { return text.find(sep); };
  if (auto pos = range_at(".."); pos != std::string_view::npos) {
    const auto lo = parse_count(text.substr(0, pos)), hi = parse_count(text.substr(pos + 2));
    if (lo > hi) throw ConfigError("size range is reversed");
    for (auto n = lo; n <= hi; ++n) sizes.push_back(n);
  } else if (text.find(',') == std::string_view::npos && (pos = range_at("-")) != std::string_view::npos) {
    const auto lo = parse_count(text.substr(0, pos)), hi = parse_count(text.substr(pos + 1));
    if (lo > hi) throw ConfigError("size range is reversed");
    for (auto n = lo; n <= hi; ++n) sizes.push_back(n);
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto comma = text.find(',', start);
      const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      sizes.push_back(parse_count(piece));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return sizes;
}

void CampaignConfig::validate() const {
  if (sizes.empty()) throw ConfigError("no problem sizes given");
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) throw ConfigError("sizes must be strictly increasing");
  }
  if (sizes.front() < minimum_size(problem)) {
    throw ConfigError(std::string(to_string(problem)) + " needs size >= " + std::to_string(minimum_size(problem)));
  }
  if (instances_per_size < 1) throw ConfigError("instances per size must be >= 1");
  if (output.empty()) throw ConfigError("no output path");
}

nlohmann::json fingerprinted_config(const CampaignConfig& config, const BackendRegistry& registry) {
  const auto& entry = registry.at(config.backend);
  const auto& s = config.backend_settings;
  std::string ensemble;
  switch (config.problem) {
    case ProblemKind::maxcut: ensemble = "Erdos-Renyi G(n, 0.5), unit weights"; break;
    case ProblemKind::ising: ensemble = "J_ij, h_j ~ U[-1, 1], mu = 1"; break;
    case ProblemKind::tsp: ensemble = "uniform points in the unit square, Euclidean distances"; break;
  }
  return {
      {"problem", to_string(config.problem)},
      {"instance_ensemble", ensemble},
      {"backend", config.backend},
      {"backend_settings",
       {{"samples", s.samples == 0 ? entry.default_samples : s.samples},
        {"sweeps", s.sweeps == 0 ? std::string("100m") : std::to_string(s.sweeps)},
        {"reads", s.reads},
        {"layers", s.layers},
        {"max_evals", s.max_evals},
        {"qubit_cap", s.qubit_cap}}},
      {"instances_per_size", config.instances_per_size},
      {"campaign_seed", config.campaign_seed},
      {"heuristic", heuristic_identity(config.problem, config.heuristic)},
  };
}

std::string fingerprint_of(const nlohmann::json& j) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(j.dump())));
  return buf;
}

std::filesystem::path default_output_dir() {
  if (const char* dir = std::getenv(std::string(kOutputDirEnv).c_str()); dir && *dir) return dir;
  return std::filesystem::current_path();
}

ResultFile run_campaign(const CampaignConfig& config, const BackendRegistry& registry, const ProgressFn& progress) {
  config.validate();
  const BackendEntry& backend = registry.at(config.backend);
  const std::string problem_tag(to_string(config.problem));

  ResultHeader header;
  header.config = fingerprinted_config(config, registry);
  header.fingerprint = fingerprint_of(header.config);
  header.extra = {{"sizes", config.sizes},
                  {"scoring_defaults",
                   {{"min_accuracy", config.min_accuracy},
                    {"w_acc", config.weights.accuracy},
                    {"w_speed", config.weights.speed}}},
                  {"runtime_policy", "solver wall-time around solve+decode; heuristic excluded"}};

  std::set<std::pair<std::size_t, std::size_t>> done;
  const auto& path = config.output;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  if (std::filesystem::exists(path) && std::filesystem::file_size(path) > 0) {
    // Drop a torn final line left by an interrupted run before appending.
    std::string content;
    {
      std::ifstream in(path, std::ios::binary);
      std::ostringstream ss;
      ss << in.rdbuf();
      content = ss.str();
    }
    const auto last_newline = content.rfind('\n');
    const std::size_t keep = last_newline == std::string::npos ? 0 : last_newline + 1;
    if (keep != content.size()) {
      std::filesystem::resize_file(path, keep);
      content.resize(keep);
    }
    if (!content.empty()) {
      std::istringstream in(content);
      const ResultFile existing = parse_result_stream(in);
      if (existing.header.fingerprint != header.fingerprint) {
        throw ConfigError("output " + path.string() + " belongs to a different campaign configuration");
      }
      for (const auto& p : existing.points) done.insert({p.size, p.instance_index});
      for (const auto& s : existing.skips) done.insert({s.size, s.instance_index});
    }
  }

  std::ofstream out(path, std::ios::app | std::ios::binary);
  if (!out) throw DataError("cannot open " + path.string() + " for writing");
  if (std::filesystem::file_size(path) == 0) {
    out << header_line(header);
    out.flush();
  }
  if (config.instances_dir) std::filesystem::create_directories(*config.instances_dir);

  SolveRequest request;
  request.samples = config.backend_settings.samples == 0 ? backend.default_samples : config.backend_settings.samples;

  for (std::size_t size : config.sizes) {
    for (std::size_t index = 0; index < config.instances_per_size; ++index) {
      if (done.count({size, index})) continue;
      const std::uint64_t seed = derive_instance_seed(config.campaign_seed, problem_tag, size, index);
      const ProblemInstance instance = generate(config.problem, size, seed);
      if (config.instances_dir) {
        std::ofstream(*config.instances_dir /
                      (problem_tag + "_n" + std::to_string(size) + "_i" + std::to_string(index) + ".json"))
            << instance_to_json(instance).dump() << "\n";
      }

      const HeuristicResult heuristic =
          heuristic_solve(instance, config.heuristic, derive_stream_seed(seed, "heuristic"));
      request.qubo = to_qubo(instance);
      request.seed = derive_stream_seed(seed, "backend");

      const auto start = std::chrono::steady_clock::now();
      SolveOutcome outcome;
      try {
        outcome = backend.solve(request, config.backend_settings);
      } catch (const CapacityError& e) {
        const SkipRecord skip{size, index, e.what()};
        out << skip_line(skip);
        out.flush();
        if (progress) progress(nullptr, &skip);
        continue;
      }
      const Candidate candidate = decode(instance, outcome.best_bits);
      const double runtime = std::max(
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), kRuntimeFloor);

      const ObjectiveValue objective = evaluate(instance, candidate);
      const AccuracyRecord acc =
          score_accuracy(objective.value, heuristic.value, objective.direction, objective.feasible);

      DataPoint point;
      point.problem = problem_tag;
      point.size = size;
      point.instance_index = index;
      point.backend = config.backend;
      point.accuracy = acc.accuracy;
      point.runtime = runtime;
      // Infeasible TSP solutions have no tour length; keep the penalized QUBO value.
      point.raw_value = objective.feasible ? objective.value : outcome.best_value;
      point.heuristic_value = heuristic.value;
      point.feasible = objective.feasible;
      point.seed = seed;
      point.heuristic_runtime = heuristic.elapsed;
      out << point_line(point);
      out.flush();
      if (progress) progress(&point, nullptr);
    }
  }
  out.close();
  return read_result_file(path);
}

QuasReport score_results(const ResultFile& file, const ScoreOverrides& overrides) {
  const auto& defaults = file.header.extra.contains("scoring_defaults") ? file.header.extra.at("scoring_defaults")
                                                                        : nlohmann::json::object();
  const double min_accuracy = overrides.min_accuracy.value_or(defaults.value("min_accuracy", kMinAccuracy));
  const Weights weights{overrides.w_acc.value_or(defaults.value("w_acc", 1.0)),
                        overrides.w_speed.value_or(defaults.value("w_speed", 1.0))};

  const std::string problem = file.header.config.value("problem", "");
  const std::string backend = file.header.config.value("backend", "");
  for (const auto& p : file.points) {
    if (p.problem != problem) throw DataError("mixed problems in one result file ('" + p.problem + "' vs '" + problem + "')");
    if (p.backend != backend) throw DataError("mixed backends in one result file ('" + p.backend + "' vs '" + backend + "')");
  }

  const FitSettings fit_settings;
  std::vector<SizeScore> scores;
  for (const auto& group : build_groups(file.points, min_accuracy)) {
    scores.push_back(size_score(group, weights, fit_settings));
  }

  nlohmann::json configuration = {
      {"source_fingerprint", file.header.fingerprint},
      {"campaign", file.header.config},
      {"min_accuracy", min_accuracy},
      {"scoring",
       {{"runtime_floor", kRuntimeFloor},
        {"a_max", fit_settings.bounds.a_max},
        {"p_min", fit_settings.bounds.p_min},
        {"p_max", fit_settings.bounds.p_max},
        {"fit_start", {1.0, 1.0, 2.0}},
        {"optimizer", {{"max_iter", fit_settings.optimizer.max_iter}, {"tol", fit_settings.optimizer.tol}}}}},
      {"interpretations", interpretations()},
  };
  return total_score(std::move(scores), weights, std::move(configuration));
}

std::filesystem::path report_path_for(const std::filesystem::path& input) {
  auto out = input;
  out.replace_extension(".report.json");
  return out;
}

QuasReport score_file(const std::filesystem::path& input, const ScoreOverrides& overrides,
                      std::optional<std::filesystem::path> report_out) {
  const QuasReport report = score_results(read_result_file(input), overrides);
  const auto path = report_out.value_or(report_path_for(input));
  std::ofstream out(path, std::ios::trunc | std::ios::binary);
  if (!out) throw DataError("cannot write report " + path.string());
  out << report_text(report);
  return report;
}

nlohmann::json report_to_json(const QuasReport& report) {
  auto sizes = nlohmann::json::array();
  for (const auto& s : report.sizes) {
    nlohmann::json fit = nullptr;
    if (s.fit) {
      fit = {{"a", s.fit->a},
             {"b", s.fit->b},
             {"p", s.fit->p},
             {"residual", s.fit->residual},
             {"points_used", s.fit->points_used},
             {"kind", s.fit->kind == FitKind::least_squares ? "least_squares" : "single_point"}};
    }
    sizes.push_back({{"size", s.size},
                     {"area", s.area},
                     {"area_curve", s.area_curve},
                     {"area_offset", s.area_offset},
                     {"retained_points", s.retained_points},
                     {"front_points", s.front_points},
                     {"accuracy_axis", axis_json(s.accuracy_axis)},
                     {"speed_axis", axis_json(s.speed_axis)},
                     {"fit", fit}});
  }
  return {{"format", "quas-report"},
          {"version", 1},
          {"tool_version", kToolVersion},
          {"total", report.total},
          {"weights", {{"w_acc", report.weights.accuracy}, {"w_speed", report.weights.speed}}},
          {"configuration", report.configuration},
          {"sizes", sizes}};
}

QuasReport report_from_json(const nlohmann::json& j) {
  try {
    if (j.at("format").get<std::string>() != "quas-report") throw DataError("not a QuAS report");
    QuasReport r;
    r.total = j.at("total").get<double>();
    r.weights = {j.at("weights").at("w_acc").get<double>(), j.at("weights").at("w_speed").get<double>()};
    r.configuration = j.at("configuration");
    for (const auto& s : j.at("sizes")) {
      SizeScore score;
      score.size = s.at("size").get<std::size_t>();
      score.area = s.at("area").get<double>();
      score.area_curve = s.at("area_curve").get<double>();
      score.area_offset = s.at("area_offset").get<double>();
      score.retained_points = s.at("retained_points").get<std::size_t>();
      score.front_points = s.at("front_points").get<std::size_t>();
      score.accuracy_axis = axis_from_json(s.at("accuracy_axis"));
      score.speed_axis = axis_from_json(s.at("speed_axis"));
      if (const auto& f = s.at("fit"); !f.is_null()) {
        score.fit = LameFit{f.at("a").get<double>(),
                            f.at("b").get<double>(),
                            f.at("p").get<double>(),
                            f.at("residual").get<double>(),
                            f.at("points_used").get<std::size_t>(),
                            f.at("kind").get<std::string>() == "single_point" ? FitKind::single_point
                                                                               : FitKind::least_squares};
      }
      r.sizes.push_back(std::move(score));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed report: ") + e.what());
  }
}

std::string report_text(const QuasReport& report) { return report_to_json(report).dump(2) + "\n"; }

std::vector<KpiPoint> sample_lame_curve(const LameFit& fit, std::size_t samples) {
  std::vector<KpiPoint> curve;
  if (samples == 0) return curve;
  curve.reserve(samples);
  // x = a cos(t)^(2/p), y = b sin(t)^(2/p) satisfies the curve identically.
  for (std::size_t k = 0; k < samples; ++k) {
    if (k + 1 == samples && samples > 1) {
      curve.push_back({0.0, fit.b});
      break;
    }
    const double t = samples == 1 ? 0.0 : (std::numbers::pi / 2.0) * static_cast<double>(k) / (samples - 1);
    curve.push_back({fit.a * std::pow(std::cos(t), 2.0 / fit.p), fit.b * std::pow(std::sin(t), 2.0 / fit.p)});
  }
  return curve;
}

PlotBundle export_plot_data(const QuasReport& report, const ResultFile& points, const std::filesystem::path& out_dir) {
  const std::string source = report.configuration.value("source_fingerprint", "");
  if (source != points.header.fingerprint) {
    throw DataError("report fingerprint " + source + " does not match result file " + points.header.fingerprint);
  }
  std::filesystem::create_directories(out_dir);
  const double min_accuracy = report.configuration.value("min_accuracy", kMinAccuracy);
  const auto groups = build_groups(points.points, min_accuracy);

  PlotBundle bundle;
  auto open = [&](const std::string& name) {
    const auto path = out_dir / name;
    bundle.files.push_back(path);
    std::ofstream f(path, std::ios::trunc | std::ios::binary);
    if (!f) throw DataError("cannot write " + path.string());
    f.precision(17);
    return f;
  };

  auto summary = open("summary.csv");
  summary << "size,area,area_curve,area_offset,a,b,p,residual,alpha_acc,alpha_speed,retained,front\n";
  for (const auto& s : report.sizes) {
    summary << s.size << ',' << s.area << ',' << s.area_curve << ',' << s.area_offset << ',';
    if (s.fit) {
      summary << s.fit->a << ',' << s.fit->b << ',' << s.fit->p << ',' << s.fit->residual;
    } else {
      summary << ",,,";
    }
    summary << ',' << s.accuracy_axis.offset << ',' << s.speed_axis.offset << ',' << s.retained_points << ','
            << s.front_points << '\n';
  }

  for (const auto& g : groups) {
    const auto front = pareto_front(g.normalized);
    auto pts = open("size_" + std::to_string(g.size) + "_points.csv");
    pts << "accuracy_norm,speed_norm,is_pareto\n";
    for (const auto& p : g.normalized) {
      const bool on_front = std::find(front.begin(), front.end(), p) != front.end();
      pts << p.accuracy << ',' << p.speed << ',' << (on_front ? 1 : 0) << '\n';
    }
    const auto it = std::find_if(report.sizes.begin(), report.sizes.end(),
                                 [&](const SizeScore& s) { return s.size == g.size; });
    if (it == report.sizes.end() || !it->fit) continue;
    auto curve = open("size_" + std::to_string(g.size) + "_curve.csv");
    curve << "speed_norm,accuracy_norm\n";
    for (const auto& c : sample_lame_curve(*it->fit)) curve << c.speed << ',' << c.accuracy << '\n';
  }
  return bundle;
}

}  // namespace quas
