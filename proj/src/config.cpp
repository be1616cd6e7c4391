#include "forager/config.hpp"

#include <json.hpp>

#include <fstream>

namespace forager {

namespace {

using nlohmann::json;

template <typename T>
void get_field(const json& j, const char* key, T& out, const std::string& scope) {
  if (!j.contains(key)) return;
  try {
    j.at(key).get_to(out);
  } catch (const json::exception& e) {
    throw ConfigError(scope + key + ": " + e.what());
  }
}

void get_vec2_array(const json& j, const char* key, std::array<Vec2, 3>& out,
                    const std::string& scope) {
  if (!j.contains(key)) return;
  std::array<std::array<double, 2>, 3> raw;
  try {
    j.at(key).get_to(raw);
  } catch (const json::exception& e) {
    throw ConfigError(scope + key + ": " + e.what());
  }
  for (std::size_t i = 0; i < raw.size(); ++i) out[i] = Vec2(raw[i][0], raw[i][1]);
}

json vec2_array_to_json(const std::array<Vec2, 3>& points) {
  json out = json::array();
  for (const Vec2& p : points) out.push_back({p.x(), p.y()});
  return out;
}

void load_arena(const json& j, ArenaSpec& arena) {
  const std::string scope = "arena.";
  get_field(j, "width", arena.width, scope);
  get_field(j, "length", arena.length, scope);
  get_field(j, "nest_end", arena.nest_end, scope);
  get_field(j, "cache_end", arena.cache_end, scope);
  get_field(j, "slope_end", arena.slope_end, scope);
  get_field(j, "slide_speed", arena.slide_speed, scope);
  get_vec2_array(j, "lights", arena.lights, scope);
}

void load_robot(const json& j, RobotSpec& robot) {
  const std::string scope = "robot.";
  get_field(j, "radius", robot.radius, scope);
  get_field(j, "max_linear_speed", robot.max_linear_speed, scope);
  get_field(j, "max_angular_speed", robot.max_angular_speed, scope);
  get_field(j, "grasp_radius", robot.grasp_radius, scope);
  get_field(j, "ir_range", robot.ir_range, scope);
  get_field(j, "lidar_range", robot.lidar_range, scope);
  get_field(j, "ir_angles_rad", robot.ir_angles, scope);
  get_field(j, "ground_sensor_angles_rad", robot.ground_sensor_angles, scope);
}

void load_noise(const json& j, NoiseSpec& noise) {
  const std::string scope = "noise.";
  get_field(j, "ir_sigma", noise.ir_sigma, scope);
  get_field(j, "lidar_sigma", noise.lidar_sigma, scope);
  get_field(j, "ground_correct_prob", noise.ground_correct_prob, scope);
}

void load_step(const json& j, StepConfig& step) {
  const std::string scope = "step.";
  get_field(j, "dt", step.dt, scope);
  get_field(j, "max_collision_iterations", step.max_collision_iterations, scope);
}

void load_evolution(const json& j, EvoConfig& evo) {
  const std::string scope = "evolution.";
  get_field(j, "population_size", evo.population_size, scope);
  get_field(j, "generations", evo.generations, scope);
  get_field(j, "tournament_size", evo.tournament_size, scope);
  get_field(j, "elitism_count", evo.elitism_count, scope);
  get_field(j, "repetitions", evo.repetitions, scope);
  get_field(j, "mutation_prob", evo.mutation_prob, scope);
  get_field(j, "mutation_sigma", evo.mutation_sigma, scope);
  if (j.contains("role")) {
    std::string role;
    get_field(j, "role", role, scope);
    const auto parsed = parse_role(role);
    if (!parsed) throw ConfigError("evolution.role: unknown role '" + role + "'");
    evo.role = *parsed;
  }
}

json run_config_to_json(const RunConfig& config) {
  json j;
  j["arena"] = {{"width", config.sim.arena.width},
                {"length", config.sim.arena.length},
                {"nest_end", config.sim.arena.nest_end},
                {"cache_end", config.sim.arena.cache_end},
                {"slope_end", config.sim.arena.slope_end},
                {"slide_speed", config.sim.arena.slide_speed},
                {"lights", vec2_array_to_json(config.sim.arena.lights)}};
  j["robot"] = {{"radius", config.sim.robot.radius},
                {"max_linear_speed", config.sim.robot.max_linear_speed},
                {"max_angular_speed", config.sim.robot.max_angular_speed},
                {"grasp_radius", config.sim.robot.grasp_radius},
                {"ir_range", config.sim.robot.ir_range},
                {"lidar_range", config.sim.robot.lidar_range},
                {"ir_angles_rad", config.sim.robot.ir_angles},
                {"ground_sensor_angles_rad", config.sim.robot.ground_sensor_angles}};
  j["noise"] = {{"ir_sigma", config.sim.noise.ir_sigma},
                {"lidar_sigma", config.sim.noise.lidar_sigma},
                {"ground_correct_prob", config.sim.noise.ground_correct_prob}};
  j["step"] = {{"dt", config.sim.step.dt},
               {"max_collision_iterations", config.sim.step.max_collision_iterations}};
  j["evolution"] = {{"population_size", config.evolution.population_size},
                    {"generations", config.evolution.generations},
                    {"tournament_size", config.evolution.tournament_size},
                    {"elitism_count", config.evolution.elitism_count},
                    {"repetitions", config.evolution.repetitions},
                    {"mutation_prob", config.evolution.mutation_prob},
                    {"mutation_sigma", config.evolution.mutation_sigma},
                    {"role", role_name(config.evolution.role)}};
  j["master_seed"] = config.evolution.master_seed;
  j["out_dir"] = config.out_dir;
  j["snapshot_interval"] = config.snapshot_interval;
  j["workers"] = config.workers;
  return j;
}

}  // namespace

RunConfig default_run_config() { return RunConfig{}; }

void validate(const RunConfig& config) {
  const ArenaSpec& arena = config.sim.arena;
  if (arena.width <= 0.0) throw ConfigError("arena.width: must be positive");
  if (!(0.0 < arena.nest_end && arena.nest_end < arena.cache_end &&
        arena.cache_end < arena.slope_end && arena.slope_end < arena.length)) {
    throw ConfigError("arena: area boundaries must satisfy 0 < nest_end < cache_end < slope_end < length");
  }
  if (arena.slide_speed < 0.0) throw ConfigError("arena.slide_speed: must be >= 0");
  for (const Vec2& light : arena.lights) {
    if (!arena_contains(arena, light) || area_at(arena, light) != AreaKind::Nest) {
      throw ConfigError("arena.lights: all lights must lie in the nest");
    }
  }

  const RobotSpec& robot = config.sim.robot;
  if (robot.radius <= 0.0) throw ConfigError("robot.radius: must be positive");
  if (robot.max_linear_speed <= 0.0) throw ConfigError("robot.max_linear_speed: must be positive");
  if (robot.max_angular_speed <= 0.0) throw ConfigError("robot.max_angular_speed: must be positive");
  if (robot.grasp_radius <= 0.0) throw ConfigError("robot.grasp_radius: must be positive");
  if (robot.ir_range <= 0.0) throw ConfigError("robot.ir_range: must be positive");
  if (robot.lidar_range <= 0.0) throw ConfigError("robot.lidar_range: must be positive");

  const NoiseSpec& noise = config.sim.noise;
  if (noise.ir_sigma < 0.0) throw ConfigError("noise.ir_sigma: must be >= 0");
  if (noise.lidar_sigma < 0.0) throw ConfigError("noise.lidar_sigma: must be >= 0");
  if (noise.ground_correct_prob < 0.0 || noise.ground_correct_prob > 1.0) {
    throw ConfigError("noise.ground_correct_prob: must be in [0, 1]");
  }

  if (config.sim.step.dt <= 0.0) throw ConfigError("step.dt: must be positive");
  if (config.sim.step.max_collision_iterations < 1) {
    throw ConfigError("step.max_collision_iterations: must be >= 1");
  }

  const EvoConfig& evo = config.evolution;
  if (evo.population_size < 1) throw ConfigError("evolution.population_size: must be >= 1");
  if (evo.generations < 0) throw ConfigError("evolution.generations: must be >= 0");
  if (evo.tournament_size < 1) throw ConfigError("evolution.tournament_size: must be >= 1");
  if (evo.elitism_count < 0 || evo.elitism_count >= evo.population_size) {
    throw ConfigError("evolution.elitism_count: must be in [0, population_size)");
  }
  if (evo.repetitions < 1) throw ConfigError("evolution.repetitions: must be >= 1");
  if (evo.mutation_prob < 0.0 || evo.mutation_prob > 1.0) {
    throw ConfigError("evolution.mutation_prob: must be in [0, 1]");
  }
  if (evo.mutation_sigma < 0.0) throw ConfigError("evolution.mutation_sigma: must be >= 0");

  if (config.snapshot_interval < 1) throw ConfigError("snapshot_interval: must be >= 1");
  if (config.workers < 1) throw ConfigError("workers: must be >= 1");
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return run_config_from_json_string(text, "config file " + path.string());
}

RunConfig run_config_from_json_string(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(origin + ": " + e.what());
  }

  RunConfig config;
  if (j.contains("arena")) load_arena(j.at("arena"), config.sim.arena);
  if (j.contains("robot")) load_robot(j.at("robot"), config.sim.robot);
  if (j.contains("noise")) load_noise(j.at("noise"), config.sim.noise);
  if (j.contains("step")) load_step(j.at("step"), config.sim.step);
  if (j.contains("evolution")) load_evolution(j.at("evolution"), config.evolution);
  get_field(j, "master_seed", config.evolution.master_seed, "");
  get_field(j, "out_dir", config.out_dir, "");
  get_field(j, "snapshot_interval", config.snapshot_interval, "");
  get_field(j, "workers", config.workers, "");
  validate(config);
  return config;
}

std::string run_config_to_json_string(const RunConfig& config) {
  return run_config_to_json(config).dump(2) + "\n";
}

void save_run_config(const RunConfig& config, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write config file: " + path.string());
  out << run_config_to_json_string(config);
}

}  // namespace forager
