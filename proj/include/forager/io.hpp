#pragma once

#include "forager/config.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace forager {

inline constexpr const char* kArtifactVersion = "0.1.0";

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

// Genome file: JSON with the topology, the 194 weights, the role, and the
// provenance (master seed and generation) of the run that produced it.
struct GenomeRecord {
  Genome weights;
  Role role = Role::Generalist;
  std::uint64_t seed = 0;
  int generation = 0;
};

void save_genome(const GenomeRecord& record, const std::filesystem::path& path);
GenomeRecord load_genome(const std::filesystem::path& path);  // throws IoError

/// Short provenance tag, e.g. "D-s7-g100".
std::string provenance_tag(const GenomeRecord& record);

// CSV schemas (header row always present):
//   generations.csv: generation,best,mean,scenario_seed  (generation 1-based)
//   posteval.csv:    pairing,trial,seed,score
void write_generations_csv(const std::filesystem::path& path, std::span<const GenerationLog> logs);
void write_posteval_csv(const std::filesystem::path& path, const std::string& pairing_label,
                        std::span<const TrialScore> trials);

// Trace files are newline-delimited JSON, one record per control step.
void write_trace_jsonl(const std::filesystem::path& path, std::span<const StepRecord> trace);

/// Per-step area counts: time,nest,cache,slope,source.
void write_fitness_curve_csv(const std::filesystem::path& path, std::span<const StepRecord> trace);

// Run manifest: command, artifact version, full config echo, and outputs —
// enough to reproduce the run bit for bit.
void write_manifest(const std::filesystem::path& path, const std::string& command,
                    const RunConfig& config, std::uint64_t evaluations,
                    const std::vector<std::string>& outputs);

}  // namespace forager
