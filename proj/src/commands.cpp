#include "forager/commands.hpp"

#include "forager/io.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>

namespace forager {

namespace fs = std::filesystem;

namespace {

RunConfig load_or_default(const std::string& config_path) {
  return config_path.empty() ? default_run_config() : load_run_config(config_path);
}

void apply_common_overrides(RunConfig& config, const std::optional<std::uint64_t>& seed,
                            const std::optional<std::string>& out_dir,
                            const std::optional<int>& workers, bool noiseless) {
  if (seed) config.evolution.master_seed = *seed;
  if (out_dir) config.out_dir = *out_dir;
  if (workers) config.workers = *workers;
  if (noiseless) config.sim.noise = NoiseSpec::noiseless();
}

}  // namespace

int cmd_evolve(const EvolveArgs& args, std::ostream& out, std::ostream& err) {
  try {
    RunConfig config = load_or_default(args.config_path);
    if (args.role) {
      const auto parsed = parse_role(*args.role);
      if (!parsed) throw ConfigError("unknown role '" + *args.role + "'");
      config.evolution.role = *parsed;
    }
    apply_common_overrides(config, args.seed, args.out_dir, args.workers, args.noiseless);
    validate(config);

    const fs::path dir(config.out_dir);
    fs::create_directories(dir);

    const GenerationObserver progress = [&](const GenerationLog& log, const auto&, const auto&) {
      err << "gen " << (log.generation + 1) << "/" << config.evolution.generations
          << " best=" << format_double(log.best_fitness)
          << " mean=" << format_double(log.mean_fitness) << "\n";
    };
    const EvolutionResult result =
        evolve(config.evolution, config.sim, config.workers, progress);

    std::vector<std::string> outputs;
    write_generations_csv(dir / "generations.csv", result.logs);
    outputs.push_back("generations.csv");

    for (const GenerationLog& log : result.logs) {
      const int gen = log.generation + 1;  // 1-based in filenames
      const bool last = gen == config.evolution.generations;
      if (gen % config.snapshot_interval != 0 && !last) continue;
      const std::string name = "best_gen_" + std::to_string(gen) + ".genome";
      save_genome(GenomeRecord{log.best_genome, config.evolution.role,
                               config.evolution.master_seed, gen},
                  dir / name);
      outputs.push_back(name);
    }

    write_manifest(dir / "manifest.json", "evolve", config, result.evaluations, outputs);

    out << "role=" << role_name(config.evolution.role)
        << " seed=" << config.evolution.master_seed << " evaluations=" << result.evaluations;
    if (!result.logs.empty()) {
      out << " best=" << format_double(result.logs.back().best_fitness);
    }
    out << " out=" << config.out_dir << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_posteval(const PostEvalArgs& args, std::ostream& out, std::ostream& err) {
  try {
    RunConfig config = load_or_default(args.config_path);
    apply_common_overrides(config, args.seed, args.out_dir, args.workers, args.noiseless);
    validate(config);

    const auto pairing = parse_pairing(args.pairing);
    if (!pairing) throw ConfigError("unknown pairing '" + args.pairing + "' (expected gg or dc)");

    std::vector<GenomeRecord> records;
    records.reserve(args.genome_paths.size());
    for (const std::string& path : args.genome_paths) records.push_back(load_genome(path));

    std::vector<Genome> genomes;
    std::string label = args.pairing;
    if (*pairing == Pairing::GG) {
      if (records.size() != 1) {
        throw ConfigError("gg pairing takes exactly one genome file, got " +
                          std::to_string(records.size()));
      }
      if (records[0].role != Role::Generalist) {
        throw ConfigError("gg pairing expects a generalist genome, got " +
                          std::string(role_name(records[0].role)) + " (" + args.genome_paths[0] +
                          ")");
      }
      genomes.push_back(records[0].weights);
      label += ":" + provenance_tag(records[0]);
    } else {
      if (records.size() != 2) {
        throw ConfigError("dc pairing takes two genome files (dropper and collector), got " +
                          std::to_string(records.size()));
      }
      const GenomeRecord* dropper = nullptr;
      const GenomeRecord* collector = nullptr;
      for (std::size_t i = 0; i < records.size(); ++i) {
        if (records[i].role == Role::Dropper && !dropper) {
          dropper = &records[i];
        } else if (records[i].role == Role::Collector && !collector) {
          collector = &records[i];
        } else {
          throw ConfigError("dc pairing expects one dropper and one collector genome, got " +
                            std::string(role_name(records[i].role)) + " (" +
                            args.genome_paths[i] + ")");
        }
      }
      genomes.push_back(dropper->weights);
      genomes.push_back(collector->weights);
      label += ":" + provenance_tag(*dropper) + "+" + provenance_tag(*collector);
    }

    PostEvalConfig pe;
    pe.pairing = *pairing;
    pe.trials = args.trials;
    const PostEvalResult result =
        post_evaluate(pe, genomes, config.evolution.master_seed, config.sim, config.workers);

    const fs::path dir(config.out_dir);
    fs::create_directories(dir);
    write_posteval_csv(dir / "posteval.csv", label, result.trials);

    out << "pairing=" << label << " trials=" << pe.trials
        << " mean=" << format_double(result.mean) << " stddev=" << format_double(result.stddev)
        << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_replay(const ReplayArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const GenomeRecord record = load_genome(args.genome_path);

    std::optional<std::uint64_t> manifest_seed;
    std::string manifest_config_text;
    if (!args.manifest_path.empty()) {
      std::ifstream in(args.manifest_path);
      if (!in) throw IoError("cannot open manifest: " + args.manifest_path);
      nlohmann::json j;
      try {
        in >> j;
        if (j.contains("master_seed")) manifest_seed = j.at("master_seed").get<std::uint64_t>();
        if (j.contains("config")) manifest_config_text = j.at("config").dump();
      } catch (const nlohmann::json::exception& e) {
        throw IoError("manifest " + args.manifest_path + ": " + e.what());
      }
    }

    RunConfig config;
    if (!args.config_path.empty()) {
      config = load_run_config(args.config_path);
    } else if (!manifest_config_text.empty()) {
      config = run_config_from_json_string(manifest_config_text,
                                           "manifest " + args.manifest_path);
    } else {
      config = default_run_config();
    }
    apply_common_overrides(config, std::nullopt, args.out_dir, std::nullopt, args.noiseless);
    validate(config);

    const std::uint64_t seed = args.seed    ? *args.seed
                               : manifest_seed ? *manifest_seed
                                               : record.seed;

    const Scenario scenario = training_scenario(record.role, seed);
    const std::array<RobotController, 1> controllers = {
        make_ann_controller(record.weights, config.sim.robot)};
    EpisodeOptions options;
    options.record_trace = true;
    options.record_frames = args.record_frames;
    const EpisodeResult result =
        run_episode(scenario, controllers, config.sim,
                    Rng(derive_seed(seed, seed_tag::kEpisodeNoise)), options);

    const fs::path dir(config.out_dir);
    fs::create_directories(dir);
    write_trace_jsonl(dir / "trace.jsonl", result.trace);
    write_fitness_curve_csv(dir / "fitness_curve.csv", result.trace);

    out << "role=" << role_name(record.role) << " seed=" << seed << " steps=" << result.steps
        << " fitness=" << role_fitness(record.role, result.world, config.sim.arena)
        << " out=" << config.out_dir << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace forager
