#pragma once

// Subcommands of the `mutlab` tool, independent of argument parsing so they
// can be driven from tests. Each returns the process exit code:
//   0 ok, 1 verification failure, 2 validation error, 3 overflow.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mutlab/diagram.hpp"
#include "mutlab/oracle.hpp"

namespace mutlab::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kValidation = 2, kOverflow = 3 };

struct Io {
  std::ostream& out;
  std::ostream& err;
};

int cmd_mutate(const std::string& input_text, const std::optional<std::string>& word, const Io& io);
int cmd_check(const std::string& input_text, const CycleOptions& cycles, const Io& io);
int cmd_walk(const std::string& input_text, const std::string& id, std::size_t depth, std::size_t trials,
             std::uint64_t rng_seed, const CycleOptions& cycles, const Io& io);
int cmd_explore(const std::string& input_text, std::size_t depth, std::size_t budget, bool permutation_classes,
                const Io& io);
int cmd_dot(const std::string& input_text, const Io& io);
/// Writes the summary line to io.out, then the JSON document to `json_out`.
int cmd_oracle(const std::string& input_text, OrientedRule rule, const CycleOptions& cycles, const Io& io,
               std::ostream& json_out);

std::string read_file(const std::string& path);

}  // namespace mutlab::cli
