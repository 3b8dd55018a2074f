#include <fstream>
#include <sstream>

#include "quas/errors.hpp"
#include "quas/harness.hpp"

namespace quas {

void to_json(nlohmann::json& j, const DataPoint& p) {
  j = {{"type", "point"},
       {"problem", p.problem},
       {"size", p.size},
       {"instance_index", p.instance_index},
       {"backend", p.backend},
       {"accuracy", p.accuracy},
       {"runtime", p.runtime},
       {"raw_value", p.raw_value},
       {"heuristic_value", p.heuristic_value},
       {"feasible", p.feasible},
       {"seed", p.seed},
       {"heuristic_runtime", p.heuristic_runtime}};
}

void from_json(const nlohmann::json& j, DataPoint& p) {
  p.problem = j.at("problem").get<std::string>();
  p.size = j.at("size").get<std::size_t>();
  p.instance_index = j.at("instance_index").get<std::size_t>();
  p.backend = j.at("backend").get<std::string>();
  p.accuracy = j.at("accuracy").get<double>();
  p.runtime = j.at("runtime").get<double>();
  p.raw_value = j.at("raw_value").get<double>();
  p.heuristic_value = j.at("heuristic_value").get<double>();
  p.feasible = j.at("feasible").get<bool>();
  p.seed = j.at("seed").get<std::uint64_t>();
  p.heuristic_runtime = j.value("heuristic_runtime", 0.0);
}

std::string header_line(const ResultHeader& header) {
  nlohmann::json j = header.extra;
  j["type"] = "header";
  j["format"] = "quas-results";
  j["version"] = 1;
  j["tool_version"] = kToolVersion;
  j["fingerprint"] = header.fingerprint;
  j["config"] = header.config;
  return j.dump() + "\n";
}

std::string point_line(const DataPoint& point) { return nlohmann::json(point).dump() + "\n"; }

std::string skip_line(const SkipRecord& skip) {
  return nlohmann::json{{"type", "skip"}, {"size", skip.size}, {"instance_index", skip.instance_index},
                        {"reason", skip.reason}}
             .dump() +
         "\n";
}

ResultFile parse_result_stream(std::istream& in) {
  ResultFile file;
  bool have_header = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
      const std::string type = j.at("type").get<std::string>();
      if (type == "header") {
        if (have_header) throw DataError("second header record");
        if (j.at("format").get<std::string>() != "quas-results" || j.at("version").get<int>() != 1) {
          throw DataError("unsupported result format");
        }
        file.header.fingerprint = j.at("fingerprint").get<std::string>();
        file.header.config = j.at("config");
        for (const auto& key : {"type", "format", "version", "tool_version", "fingerprint", "config"}) j.erase(key);
        file.header.extra = std::move(j);
        have_header = true;
      } else if (!have_header) {
        throw DataError("records before the header");
      } else if (type == "point") {
        file.points.push_back(j.get<DataPoint>());
      } else if (type == "skip") {
        file.skips.push_back({j.at("size").get<std::size_t>(), j.at("instance_index").get<std::size_t>(),
                              j.at("reason").get<std::string>()});
      } else {
        throw DataError("unknown record type '" + type + "'");
      }
    } catch (const DataError& e) {
      throw DataError("line " + std::to_string(line_no) + ": " + e.what());
    } catch (const nlohmann::json::exception& e) {
      throw DataError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_header) throw DataError("result file has no header record");
  return file;
}

ResultFile read_result_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open result file " + path.string());
  return parse_result_stream(in);
}

void write_result_file(const std::filesystem::path& path, const ResultFile& file) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out << header_line(file.header);
  for (const auto& p : file.points) out << point_line(p);
  for (const auto& s : file.skips) out << skip_line(s);
}

}  // namespace quas
