#include "mutlab/explorer.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace mutlab {

const char* check_name(Check c) noexcept {
  switch (c) {
    case Check::sign_coherence: return "sign_coherence";
    case Check::companion_match: return "companion_match";
    case Check::companion_mutation: return "companion_mutation";
    case Check::admissible_cut: return "admissible_cut";
    case Check::reflection: return "reflection";
    case Check::length: return "length";
  }
  return "unknown";
}

bool StepRecord::passed() const noexcept {
  if (results.size() != std::size(kAllChecks)) return false;
  return std::all_of(results.begin(), results.end(), [](const auto& kv) { return kv.second; });
}

bool WalkReport::verdict() const noexcept {
  return records.size() == word.letters.size() &&
         std::all_of(records.begin(), records.end(), [](const StepRecord& r) { return r.passed(); });
}

namespace {

void fail(StepRecord& r, Check c, std::string message, std::optional<IntMatrix> m = std::nullopt,
          std::optional<std::vector<Int>> v = std::nullopt) {
  r.results[c] = false;
  r.failures.push_back({c, std::move(message), std::move(m), std::move(v)});
}

template <typename F>
void run_check(StepRecord& r, Check c, F&& body) {
  try {
    r.results[c] = true;
    body();
  } catch (const Error& e) {
    fail(r, c, e.what());
  }
}

}  // namespace

StepOutcome verify_step(const YSeed& seed, std::size_t k, const CartanMatrix& a0, const CycleOptions& cycles) {
  StepOutcome out;
  StepRecord& r = out.record;
  r.k = k;

  run_check(r, Check::sign_coherence, [&] {
    YSeed next = mutate_seed(seed, k);
    for (std::size_t i = 0; i < next.size(); ++i)
      if (!is_sign_coherent(next.c(i).coords()))
        fail(r, Check::sign_coherence, "c-vector " + std::to_string(i + 1) + " is not sign-coherent", std::nullopt,
             next.c(i).coords());
    out.next = std::move(next);
  });
  if (!out.next) {
    for (Check c : kAllChecks)
      if (!r.results.count(c)) fail(r, c, "skipped: mutation failed");
    return out;
  }
  const YSeed& next = *out.next;
  const std::size_t n = seed.size();

  std::optional<Companion> paired;
  run_check(r, Check::companion_match, [&] {
    paired = pairing_companion(next, a0);
    const Companion expl = explicit_companion(next);
    if (expl != *paired)
      fail(r, Check::companion_match, "explicit companion differs from pairing companion", expl.entries());
  });

  run_check(r, Check::companion_mutation, [&] {
    const Companion before = pairing_companion(seed, a0);
    const Companion mutated = companion_mutation(before, seed.matrix(), k, seed.c(k).sign());
    const Companion after = paired ? *paired : pairing_companion(next, a0);
    if (mutated != after)
      fail(r, Check::companion_mutation, "eps-mutation of the previous companion differs from the new companion",
           mutated.entries());
  });

  run_check(r, Check::admissible_cut, [&] {
    const Companion a = paired ? *paired : pairing_companion(next, a0);
    const Diagram g = diagram_of(next.matrix());
    const EdgeCut cut = positive_edges(next.matrix(), a);
    const ConditionReport report = check_companion_conditions(next.matrix(), a, cycles);
    if (!is_admissible_cut(g, cut, cycles))
      fail(r, Check::admissible_cut, "positive edges are not an admissible cut", a.entries());
    if (!report.paths_ok)
      fail(r, Check::admissible_cut, "directed path with two positive edges", a.entries(),
           [&] {
             std::vector<Int> p;
             for (std::size_t v : *report.path_witness) p.push_back(static_cast<Int>(v) + 1);
             return p;
           }());
    if (!report.oriented_cycles_ok)
      fail(r, Check::admissible_cut, "oriented cycle " + to_string(*report.oriented_witness) + " without exactly one positive edge",
           a.entries());
    if (!report.nonoriented_cycles_ok)
      fail(r, Check::admissible_cut,
           "non-oriented cycle " + to_string(*report.nonoriented_witness) + " with an odd number of positive edges",
           a.entries());
  });

  run_check(r, Check::reflection, [&] {
    const RootVector ck(seed.c(k));
    if (next.c(k) != -seed.c(k))
      fail(r, Check::reflection, "c'_k is not -c_k", std::nullopt, next.c(k).coords());
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || next.c(i) == seed.c(i)) continue;
      const RootVector image = reflect(a0, ck, RootVector(seed.c(i)));
      if (image.coords() != next.c(i).coords())
        fail(r, Check::reflection, "c'_" + std::to_string(i + 1) + " is neither c_i nor s_{c_k}(c_i)", std::nullopt,
             next.c(i).coords());
    }
  });

  run_check(r, Check::length, [&] {
    for (std::size_t i = 0; i < n; ++i) {
      const Int len = bilinear(a0, next.c(i).coords(), next.c(i).coords());
      if (len != checked_mul(2, a0.symmetrizer()[i]))
        fail(r, Check::length,
             "(c'_" + std::to_string(i + 1) + ", c'_" + std::to_string(i + 1) + ") = " + std::to_string(len) +
                 " != 2 d_" + std::to_string(i + 1),
             std::nullopt, next.c(i).coords());
    }
  });

  return out;
}

namespace {

std::size_t bounded(std::mt19937_64& rng, std::size_t m) {
  const std::uint64_t range = m;
  const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % range + 1) % range;
  std::uint64_t x;
  do x = rng();
  while (x > limit);
  return static_cast<std::size_t>(x % range);
}

WalkReport walk(const YSeed& start, const CartanMatrix& a0, const MutationWord& word, const WalkOptions& options) {
  WalkReport report{options.initial_id, word, {}};
  std::optional<YSeed> current = start;
  for (std::size_t k : word.letters) {
    if (!current) {
      StepRecord r;
      r.k = k;
      for (Check c : kAllChecks) fail(r, c, "skipped: an earlier mutation failed");
      report.records.push_back(std::move(r));
      continue;
    }
    StepOutcome step = verify_step(*current, k, a0, options.cycles);
    report.records.push_back(std::move(step.record));
    current = std::move(step.next);
  }
  return report;
}

}  // namespace

std::vector<WalkReport> random_walks(const ExchangeMatrix& b0, std::size_t depth, std::size_t trials,
                                     std::uint64_t rng_seed, const WalkOptions& options) {
  if (depth < 1) throw ValidationError("walk depth must be at least 1");
  const CartanMatrix a0 = cartan_from_acyclic(b0);
  const YSeed start = initial_seed(b0);
  const std::size_t n = b0.size();

  std::vector<WalkReport> reports;
  reports.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    std::seed_seq seq{static_cast<std::uint32_t>(rng_seed), static_cast<std::uint32_t>(rng_seed >> 32),
                      static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(static_cast<std::uint64_t>(t) >> 32)};
    std::mt19937_64 rng(seq);
    MutationWord word;
    for (std::size_t step = 0; step < depth; ++step) {
      std::size_t k;
      if (word.letters.empty() || n == 1) {
        k = bounded(rng, n);
      } else {
        k = bounded(rng, n - 1);
        if (k >= word.letters.back()) ++k;
      }
      word.letters.push_back(k);
    }
    reports.push_back(walk(start, a0, word, options));
  }
  return reports;
}

WalkReport verify_word(const ExchangeMatrix& b0, const MutationWord& word, const WalkOptions& options) {
  const CartanMatrix a0 = cartan_from_acyclic(b0);
  for (std::size_t k : word.letters)
    if (k >= b0.size()) throw IndexOutOfRange("mutation index " + std::to_string(k + 1) + " out of range");
  return walk(initial_seed(b0), a0, word, options);
}

namespace {

using SeedKey = std::pair<IntMatrix, std::vector<CVector>>;

SeedKey canonical_key(const YSeed& s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<SeedKey> best;
  do {
    IntMatrix b(n);
    std::vector<CVector> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      c.push_back(s.c(perm[i]));
      for (std::size_t j = 0; j < n; ++j) b(i, j) = s.matrix()(perm[i], perm[j]);
    }
    SeedKey key{std::move(b), std::move(c)};
    if (!best || key < *best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

}  // namespace

ExploreResult bfs_explore(const ExchangeMatrix& b0, std::size_t depth, const ExploreOptions& options) {
  ExploreResult result;
  const YSeed start = initial_seed(b0);
  result.seeds.insert(start);
  result.level_sizes.push_back(1);
  std::vector<YSeed> frontier{start};
  for (std::size_t level = 1; level <= depth; ++level) {
    std::vector<YSeed> next_frontier;
    for (const YSeed& s : frontier) {
      for (std::size_t k = 0; k < s.size(); ++k) {
        YSeed m = mutate_seed(s, k);
        if (result.seeds.count(m)) continue;
        if (result.seeds.size() >= options.budget)
          throw FrontierBudgetExceeded("more than " + std::to_string(options.budget) + " seeds reached");
        result.seeds.insert(m);
        next_frontier.push_back(std::move(m));
      }
    }
    result.level_sizes.push_back(next_frontier.size());
    frontier = std::move(next_frontier);
  }
  for (const YSeed& s : result.seeds)
    for (const CVector& c : s.cvectors()) ++result.cvector_counts[c.coords()];

  if (options.permutation_classes) {
    if (b0.size() > 8) throw ValidationError("permutation classes are only computed for n <= 8");
    std::set<SeedKey> classes;
    for (const YSeed& s : result.seeds) classes.insert(canonical_key(s));
    result.permutation_classes = classes.size();
  }
  return result;
}

}  // namespace mutlab
