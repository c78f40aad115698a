#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mutlab/commands.hpp"
#include "mutlab/server.hpp"

using namespace mutlab;

namespace {

/// Writes to --output when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ValidationError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

CycleOptions cycle_options(const std::string& mode, const std::string& paths, std::size_t budget) {
  CycleOptions o;
  o.mode = mode == "chordless" ? CycleMode::chordless : CycleMode::all_simple;
  o.paths = paths == "all-simple" ? PathMode::all_simple : PathMode::induced;
  if (budget > 0) o.budget = budget;
  return o;
}

std::string id_from_path(const std::string& path) {
  const auto slash = path.find_last_of('/');
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  const auto dot = name.rfind('.');
  return dot == std::string::npos ? name : name.substr(0, dot);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Y-seed mutation, c-vectors and quasi-Cartan companions"};
  app.require_subcommand(1);

  std::string input, output, word, mode = "all-simple", path_mode = "induced", rule = "exactly-one", host = "127.0.0.1";
  std::size_t depth = 8, trials = 100, cycle_budget = 0, frontier_budget = 100'000;
  std::uint64_t rng_seed = 1;
  int port = 8080;
  bool permutations = false;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("-i,--input", input, "matrix JSON file")->required();
    sub->add_option("-o,--output", output, "output file (default stdout)");
  };
  auto add_cycles = [&](CLI::App* sub) {
    sub->add_option("--mode", mode, "cycle notion")->check(CLI::IsMember({"all-simple", "chordless"}));
    sub->add_option("--path-mode", path_mode, "directed paths checked")
        ->check(CLI::IsMember({"induced", "all-simple"}));
    sub->add_option("--cycle-budget", cycle_budget, "maximum cycles/paths enumerated (env MUTLAB_CYCLE_BUDGET)");
  };

  auto* mutate = app.add_subcommand("mutate", "apply a mutation word (1-based, left to right)");
  add_input(mutate);
  mutate->add_option("-w,--word", word, "letters, e.g. 2,1,3");

  auto* check = app.add_subcommand("check", "check path/cycle conditions of a companion");
  add_input(check);
  add_cycles(check);

  auto* walk = app.add_subcommand("walk", "verified random walks from an acyclic initial seed");
  add_input(walk);
  add_cycles(walk);
  walk->add_option("--depth", depth)->check(CLI::PositiveNumber);
  walk->add_option("--trials", trials);
  walk->add_option("--rng-seed", rng_seed);

  auto* explore = app.add_subcommand("explore", "breadth-first exploration of the mutation tree");
  add_input(explore);
  explore->add_option("--depth", depth);
  explore->add_option("--frontier-budget", frontier_budget);
  explore->add_flag("--permutation-classes", permutations, "also count seeds up to index permutation");

  auto* dot = app.add_subcommand("dot", "Graphviz DOT of the diagram with companion signs");
  add_input(dot);

  auto* oracle = app.add_subcommand("oracle", "exhaustive search for admissible companions");
  add_input(oracle);
  add_cycles(oracle);
  oracle->add_option("--rule", rule, "oriented-cycle rule")->check(CLI::IsMember({"exactly-one", "odd"}));

  auto* serve = app.add_subcommand("serve", "HTTP API for interactive sessions");
  serve->add_option("--port", port);
  serve->add_option("--host", host);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*serve) {
      std::cerr << "listening on " << host << ":" << port << "\n";
      return api::serve(host, port) ? 0 : cli::kValidation;
    }

    const std::string text = cli::read_file(input);
    Output out(output);
    const cli::Io io{out.stream(), std::cerr};
    const CycleOptions cycles = cycle_options(mode, path_mode, cycle_budget);

    if (*mutate) return cli::cmd_mutate(text, mutate->count("--word") ? std::optional(word) : std::nullopt, io);
    if (*check) return cli::cmd_check(text, cycles, io);
    if (*walk) return cli::cmd_walk(text, id_from_path(input), depth, trials, rng_seed, cycles, io);
    if (*explore) return cli::cmd_explore(text, depth, frontier_budget, permutations, io);
    if (*dot) return cli::cmd_dot(text, io);
    if (*oracle) {
      const auto r = rule == "odd" ? OrientedRule::odd : OrientedRule::exactly_one;
      if (output.empty()) return cli::cmd_oracle(text, r, cycles, io, std::cout);
      const cli::Io console{std::cout, std::cerr};
      return cli::cmd_oracle(text, r, cycles, console, out.stream());
    }
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return cli::kValidation;
  }
  return 0;
}
