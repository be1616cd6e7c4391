#pragma once

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace forager {

struct EvolveArgs {
  std::string config_path;  // empty = built-in defaults
  std::optional<std::string> role;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<int> workers;
  bool noiseless = false;
};

struct PostEvalArgs {
  std::vector<std::string> genome_paths;  // gg: one generalist; dc: dropper + collector
  std::string pairing = "gg";
  int trials = 10;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::string config_path;
  std::optional<int> workers;
  bool noiseless = false;
};

struct ReplayArgs {
  std::string genome_path;
  std::string manifest_path;  // optional source for config and seed
  std::string config_path;    // overrides the manifest config
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  bool noiseless = false;
  bool record_frames = false;
};

// CLI entry points; return the process exit status and report problems on
// `err`. Kept separate from argument parsing so tests can drive them.
int cmd_evolve(const EvolveArgs& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr);
int cmd_posteval(const PostEvalArgs& args, std::ostream& out = std::cout,
                 std::ostream& err = std::cerr);
int cmd_replay(const ReplayArgs& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr);

}  // namespace forager
