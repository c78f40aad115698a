#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mutlab/companion.hpp"
#include "mutlab/diagram.hpp"
#include "mutlab/mutation.hpp"
#include "mutlab/roots.hpp"

namespace mutlab {

/// Names of the per-step checks, in the order they are evaluated.
enum class Check { sign_coherence, companion_match, companion_mutation, admissible_cut, reflection, length };

inline constexpr Check kAllChecks[] = {Check::sign_coherence,     Check::companion_match, Check::companion_mutation,
                                       Check::admissible_cut,     Check::reflection,      Check::length};

const char* check_name(Check c) noexcept;

/// Evidence for a failed check: a message and optionally the offending
/// matrix or vector.
struct Witness {
  Check check;
  std::string message;
  std::optional<IntMatrix> matrix;
  std::optional<std::vector<Int>> vector;
};

struct StepRecord {
  std::size_t k = 0;
  std::map<Check, bool> results;
  std::vector<Witness> failures;

  bool passed() const noexcept;
};

struct StepOutcome {
  StepRecord record;
  /// Empty when the mutation itself could not be carried out.
  std::optional<YSeed> next;
};

/// Mutates at k and checks, on the new seed: sign coherence; explicit
/// companion equals pairing companion; the epsilon-mutation of the old
/// pairing companion with eps = sgn(c_k) equals the new one; positive edges
/// form an admissible cut and satisfy the path/cycle conditions; each c'_i
/// is c_i or s_{c_k}(c_i) and c'_k = -c_k; (c'_i, c'_i) = 2 d_i.
/// Failures are recorded, never thrown.
StepOutcome verify_step(const YSeed& seed, std::size_t k, const CartanMatrix& a0, const CycleOptions& cycles = {});

struct WalkReport {
  std::string initial_id;
  MutationWord word;
  std::vector<StepRecord> records;

  bool verdict() const noexcept;
};

struct WalkOptions {
  std::string initial_id = "B0";
  CycleOptions cycles = {};
};

/// `trials` random words of length `depth`, each letter uniform among the
/// indices other than the previous letter. Trial t draws from an mt19937_64
/// seeded by seed_seq{rng_seed, t}. Throws NotAcyclic for cyclic b0.
std::vector<WalkReport> random_walks(const ExchangeMatrix& b0, std::size_t depth, std::size_t trials,
                                     std::uint64_t rng_seed, const WalkOptions& options = {});

/// Verifies a fixed word from the initial seed of b0.
WalkReport verify_word(const ExchangeMatrix& b0, const MutationWord& word, const WalkOptions& options = {});

struct ExploreOptions {
  std::size_t budget = 100'000;
  /// Also count seeds up to simultaneous index permutation (n <= 8 only).
  bool permutation_classes = false;
};

struct ExploreResult {
  std::set<YSeed> seeds;
  /// New distinct seeds first reached at each level 0..depth.
  std::vector<std::size_t> level_sizes;
  /// c-vector -> number of occurrences over all distinct seeds.
  std::map<std::vector<Int>, std::size_t> cvector_counts;
  std::optional<std::size_t> permutation_classes;
};

/// Breadth-first closure of seed mutation from the initial seed of b0 up to
/// `depth`, deduplicated by exact seed equality. Throws
/// FrontierBudgetExceeded if more than options.budget seeds are reached.
ExploreResult bfs_explore(const ExchangeMatrix& b0, std::size_t depth, const ExploreOptions& options = {});

}  // namespace mutlab
