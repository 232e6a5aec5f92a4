#include <iostream>

#include "CLI11.hpp"

#include "tkklab/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"tkklab: structurable algebras, TKK Lie algebras and their Moufang geometries"};
  std::string cmd, target;
  tkk::CommandOverrides o;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  unsigned threads = 1;
  std::string out, eta;
  app.add_option("command", cmd, "verify-algebra | build-tkk | geometry | polygon | moufang | relations | report")
      ->required()
      ->check(CLI::IsMember(tkk::command_names()));
  app.add_option("config", target, "config file (.toml or .json); for polygon, an exported geometry JSON")->required();
  auto* o_out = app.add_option("--out", out, "write the geometry JSON here instead of standard output");
  auto* o_seed = app.add_option("--seed", seed, "random seed");
  auto* o_samples = app.add_option("--samples", samples, "sample count for sampled checks");
  auto* o_threads = app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--large", o.large, "allow the large cubic-field hexagon");
  auto* o_eta = app.add_option("--debug-eta", eta, "relations: rebuild the algebra with this eta");
  app.add_flag("--debug-corrupt", o.debug_corrupt, "relations: shift one right-hand-side parameter");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : tkk::exit_usage;
  }
  if (*o_out) o.out = out;
  if (*o_seed) o.seed = seed;
  if (*o_samples) o.samples = samples;
  if (*o_threads) o.threads = threads;
  if (*o_eta) o.debug_eta = eta;
  return tkk::run_command(cmd, target, o, std::cout, std::cerr);
}
