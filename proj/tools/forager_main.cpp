#include "forager/commands.hpp"

#include <CLI11.hpp>

int main(int argc, char** argv) {
  CLI::App app{"headless slope-foraging simulator, neuroevolution engine, and pair benchmark"};
  app.require_subcommand(1);

  forager::EvolveArgs evolve_args;
  std::string evolve_role;
  std::uint64_t evolve_seed = 0;
  std::string evolve_out;
  int evolve_workers = 0;
  CLI::App* evolve = app.add_subcommand("evolve", "evolve a controller for one role");
  evolve->add_option("--config", evolve_args.config_path, "JSON run config");
  auto* role_opt = evolve->add_option("--role", evolve_role, "generalist|dropper|collector");
  auto* seed_opt = evolve->add_option("--seed", evolve_seed, "master seed");
  auto* out_opt = evolve->add_option("--out", evolve_out, "output directory");
  auto* workers_opt = evolve->add_option("--workers", evolve_workers, "evaluation workers");
  evolve->add_flag("--noiseless", evolve_args.noiseless, "disable all sensor noise");

  forager::PostEvalArgs posteval_args;
  std::uint64_t posteval_seed = 0;
  std::string posteval_out;
  int posteval_workers = 0;
  CLI::App* posteval = app.add_subcommand("posteval", "benchmark a robot pair over random trials");
  posteval->add_option("--genome", posteval_args.genome_paths,
                       "genome file(s): one for gg, dropper and collector for dc");
  posteval->add_option("--pairing", posteval_args.pairing, "gg|dc");
  posteval->add_option("--trials", posteval_args.trials, "number of trials");
  auto* pe_seed_opt = posteval->add_option("--seed", posteval_seed, "master seed");
  auto* pe_out_opt = posteval->add_option("--out", posteval_out, "output directory");
  posteval->add_option("--config", posteval_args.config_path, "JSON run config");
  auto* pe_workers_opt = posteval->add_option("--workers", posteval_workers, "trial workers");
  posteval->add_flag("--noiseless", posteval_args.noiseless, "disable all sensor noise");

  forager::ReplayArgs replay_args;
  std::uint64_t replay_seed = 0;
  std::string replay_out;
  CLI::App* replay = app.add_subcommand("replay", "re-run one episode and dump its trace");
  replay->add_option("--genome", replay_args.genome_path, "genome file")->required();
  replay->add_option("--manifest", replay_args.manifest_path, "manifest of the producing run");
  replay->add_option("--config", replay_args.config_path, "JSON run config");
  auto* rp_seed_opt = replay->add_option("--seed", replay_seed, "episode seed");
  auto* rp_out_opt = replay->add_option("--out", replay_out, "output directory");
  replay->add_flag("--noiseless", replay_args.noiseless, "disable all sensor noise");
  replay->add_flag("--frames", replay_args.record_frames, "include sensor frames in the trace");

  CLI11_PARSE(app, argc, argv);

  if (evolve->parsed()) {
    if (*role_opt) evolve_args.role = evolve_role;
    if (*seed_opt) evolve_args.seed = evolve_seed;
    if (*out_opt) evolve_args.out_dir = evolve_out;
    if (*workers_opt) evolve_args.workers = evolve_workers;
    return forager::cmd_evolve(evolve_args);
  }
  if (posteval->parsed()) {
    if (*pe_seed_opt) posteval_args.seed = posteval_seed;
    if (*pe_out_opt) posteval_args.out_dir = posteval_out;
    if (*pe_workers_opt) posteval_args.workers = posteval_workers;
    return forager::cmd_posteval(posteval_args);
  }
  if (*rp_seed_opt) replay_args.seed = replay_seed;
  if (*rp_out_opt) replay_args.out_dir = replay_out;
  return forager::cmd_replay(replay_args);
}
