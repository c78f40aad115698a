#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mutlab/companion.hpp"
#include "mutlab/core.hpp"

namespace mutlab {

struct Edge {
  std::size_t source = 0;
  std::size_t target = 0;
  Int weight = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Weighted directed graph: i -> j iff B_ji > 0, weight |B_ij B_ji|.
/// Edges are kept sorted by (source, target).
class Diagram {
 public:
  Diagram(std::size_t n, std::vector<Edge> edges);

  std::size_t size() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool adjacent(std::size_t i, std::size_t j) const noexcept { return dir_[i * n_ + j] != 0; }
  /// True iff the edge between i and j points i -> j.
  bool points(std::size_t i, std::size_t j) const noexcept { return dir_[i * n_ + j] > 0; }
  const std::vector<std::size_t>& neighbors(std::size_t i) const noexcept { return neighbors_[i]; }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<int> dir_;
  std::vector<std::vector<std::size_t>> neighbors_;
};

using UnorderedEdge = std::pair<std::size_t, std::size_t>;

inline UnorderedEdge unordered(std::size_t i, std::size_t j) { return i < j ? UnorderedEdge{i, j} : UnorderedEdge{j, i}; }

/// Set of unordered diagram edges (stored with first < second).
struct EdgeCut {
  std::set<UnorderedEdge> edges;
  bool contains(std::size_t i, std::size_t j) const { return edges.count(unordered(i, j)) > 0; }
  friend bool operator==(const EdgeCut&, const EdgeCut&) = default;
};

/// Simple cycle of the underlying undirected graph. `vertices` is rotated to
/// start at its least vertex, and traversed toward the smaller of its two
/// neighbours.
struct Cycle {
  std::vector<std::size_t> vertices;
  bool oriented = false;

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

enum class CycleMode { all_simple, chordless };

/// Which directed paths the path condition ranges over. A path that has a
/// chord closes a cycle with part of itself and can legitimately carry two
/// positive edges (one per oriented cycle it runs through), so the
/// condition is only expected to hold on induced paths.
enum class PathMode { induced, all_simple };

/// Default cap on enumerated cycles / paths; MUTLAB_CYCLE_BUDGET overrides.
std::size_t default_cycle_budget();

struct CycleOptions {
  CycleMode mode = CycleMode::all_simple;
  std::size_t budget = default_cycle_budget();
  PathMode paths = PathMode::induced;
};

Diagram diagram_of(const ExchangeMatrix& b);

bool is_acyclic(const Diagram& g);

/// Deterministic order: by sorted vertex set, then by the canonical sequence.
/// Throws CycleBudgetExceeded when more than options.budget cycles exist.
std::vector<Cycle> enumerate_cycles(const Diagram& g, const CycleOptions& options = {});

/// {i,j} with A_ij > 0.
EdgeCut positive_edges(const ExchangeMatrix& b, const Companion& a);

std::size_t count_in_cut(const Cycle& cycle, const EdgeCut& cut);

struct ConditionReport {
  bool paths_ok = true;               // every directed path (per PathMode) has <= 1 positive edge
  bool oriented_cycles_ok = true;     // every oriented cycle has exactly 1
  bool nonoriented_cycles_ok = true;  // every non-oriented cycle has an even count
  std::optional<std::vector<std::size_t>> path_witness;
  std::optional<Cycle> oriented_witness;
  std::optional<Cycle> nonoriented_witness;

  bool admissible() const noexcept { return oriented_cycles_ok && nonoriented_cycles_ok; }
  bool all() const noexcept { return paths_ok && admissible(); }
};

/// Checks the directed-path, oriented-cycle and non-oriented-cycle
/// conditions for the positive edges of A on the diagram of B. Witnesses
/// are the first violating path/cycle in enumeration order.
ConditionReport check_companion_conditions(const ExchangeMatrix& b, const Companion& a,
                                           const CycleOptions& options = {});

/// Every oriented cycle meets the cut exactly once, every non-oriented cycle
/// an even number of times.
bool is_admissible_cut(const Diagram& g, const EdgeCut& cut, const CycleOptions& options = {});

/// Byte-stable DOT text. Vertices are 1-based; edges sorted; weights > 1
/// become labels; with a companion, positive edges are dashed and labelled
/// with a trailing "+".
std::string to_dot(const Diagram& g, const std::optional<Companion>& a = std::nullopt);

std::string to_string(const Cycle& cycle);

}  // namespace mutlab
