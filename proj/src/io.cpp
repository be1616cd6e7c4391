#include "forager/io.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>

namespace forager {

using nlohmann::json;

std::string format_double(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

void save_genome(const GenomeRecord& record, const std::filesystem::path& path) {
  validate_genome(record.weights);
  json j;
  j["topology"] = {kInputCount, kHiddenCount, kOutputCount};
  j["weights"] = std::vector<double>(record.weights.data(),
                                     record.weights.data() + record.weights.size());
  j["role"] = role_name(record.role);
  j["provenance"] = {{"seed", record.seed}, {"generation", record.generation}};
  std::ofstream out(path);
  if (!out) throw IoError("cannot write genome file: " + path.string());
  out << j.dump(2) << "\n";
}

GenomeRecord load_genome(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open genome file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw IoError("genome file " + path.string() + ": " + e.what());
  }
  GenomeRecord record;
  try {
    const std::vector<int> topology = j.at("topology").get<std::vector<int>>();
    if (topology != std::vector<int>{kInputCount, kHiddenCount, kOutputCount}) {
      throw IoError("genome file " + path.string() + ": unsupported topology");
    }
    const std::vector<double> weights = j.at("weights").get<std::vector<double>>();
    record.weights = Eigen::Map<const Eigen::VectorXd>(weights.data(),
                                                       static_cast<Eigen::Index>(weights.size()));
    const std::string role = j.at("role").get<std::string>();
    const auto parsed = parse_role(role);
    if (!parsed) throw IoError("genome file " + path.string() + ": unknown role '" + role + "'");
    record.role = *parsed;
    if (j.contains("provenance")) {
      const json& prov = j.at("provenance");
      record.seed = prov.value("seed", std::uint64_t{0});
      record.generation = prov.value("generation", 0);
    }
  } catch (const json::exception& e) {
    throw IoError("genome file " + path.string() + ": " + e.what());
  }
  try {
    validate_genome(record.weights);
  } catch (const std::invalid_argument& e) {
    throw IoError("genome file " + path.string() + ": " + e.what());
  }
  return record;
}

std::string provenance_tag(const GenomeRecord& record) {
  std::string tag(1, static_cast<char>(std::toupper(role_name(record.role)[0])));
  tag += "-s" + std::to_string(record.seed) + "-g" + std::to_string(record.generation);
  return tag;
}

void write_generations_csv(const std::filesystem::path& path,
                           std::span<const GenerationLog> logs) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write csv: " + path.string());
  out << "generation,best,mean,scenario_seed\n";
  for (const GenerationLog& log : logs) {
    out << (log.generation + 1) << ',' << format_double(log.best_fitness) << ','
        << format_double(log.mean_fitness) << ',' << log.scenario_seed << '\n';
  }
}

void write_posteval_csv(const std::filesystem::path& path, const std::string& pairing_label,
                        std::span<const TrialScore> trials) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write csv: " + path.string());
  out << "pairing,trial,seed,score\n";
  for (const TrialScore& trial : trials) {
    out << pairing_label << ',' << trial.trial << ',' << trial.seed << ',' << trial.score << '\n';
  }
}

namespace {

json step_record_to_json(const StepRecord& record) {
  json j;
  j["t"] = record.time;
  json robots = json::array();
  for (const RobotState& robot : record.robots) {
    json r = {{"x", robot.position.x()},
              {"y", robot.position.y()},
              {"theta", robot.heading},
              {"role", role_name(robot.role)}};
    r["carrying"] = robot.carrying ? json(*robot.carrying) : json(nullptr);
    robots.push_back(std::move(r));
  }
  j["robots"] = std::move(robots);
  json objects = json::array();
  for (const ObjectState& obj : record.objects) {
    objects.push_back({{"id", obj.id},
                       {"x", obj.position.x()},
                       {"y", obj.position.y()},
                       {"sliding", obj.sliding},
                       {"carried", obj.carried_by.has_value()}});
  }
  j["objects"] = std::move(objects);
  if (!record.frames.empty()) {
    json frames = json::array();
    for (const SensorFrame& frame : record.frames) {
      frames.push_back(std::vector<double>(frame.data(), frame.data() + frame.size()));
    }
    j["frames"] = std::move(frames);
  }
  return j;
}

}  // namespace

void write_trace_jsonl(const std::filesystem::path& path, std::span<const StepRecord> trace) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write trace: " + path.string());
  for (const StepRecord& record : trace) {
    out << step_record_to_json(record).dump() << '\n';
  }
}

void write_fitness_curve_csv(const std::filesystem::path& path,
                             std::span<const StepRecord> trace) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write csv: " + path.string());
  out << "time,nest,cache,slope,source\n";
  for (const StepRecord& record : trace) {
    out << format_double(record.time) << ',' << record.counts[0] << ',' << record.counts[1] << ','
        << record.counts[2] << ',' << record.counts[3] << '\n';
  }
}

void write_manifest(const std::filesystem::path& path, const std::string& command,
                    const RunConfig& config, std::uint64_t evaluations,
                    const std::vector<std::string>& outputs) {
  json j;
  j["command"] = command;
  j["artifact_version"] = kArtifactVersion;
  j["master_seed"] = config.evolution.master_seed;
  j["role"] = role_name(config.evolution.role);
  j["evaluations"] = evaluations;
  j["outputs"] = outputs;
  j["config"] = json::parse(run_config_to_json_string(config));
  std::ofstream out(path);
  if (!out) throw IoError("cannot write manifest: " + path.string());
  out << j.dump(2) << "\n";
}

}  // namespace forager
