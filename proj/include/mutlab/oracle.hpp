#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mutlab/companion.hpp"
#include "mutlab/diagram.hpp"

namespace mutlab {

/// One sign per unordered diagram edge. A single sign per edge is enough:
/// d_i A_ij = d_j A_ji forces A_ij and A_ji to agree in sign.
struct SignAssignment {
  std::map<UnorderedEdge, int> signs;
};

/// A_ij = sigma({i,j}) |B_ij|, diagonal 2. Throws ValidationError when the
/// assignment's domain is not exactly the edge set of the diagram of b.
Companion companion_from_signs(const ExchangeMatrix& b, const SignAssignment& sigma);

/// How oriented cycles are constrained. `exactly_one` is the criterion
/// satisfied by companions coming from c-vectors; `odd` is the weaker
/// parity condition.
enum class OrientedRule { exactly_one, odd };

struct OracleOptions {
  OrientedRule rule = OrientedRule::exactly_one;
  CycleOptions cycles = {};
  std::size_t max_edges = 30;
};

struct OracleResult {
  std::vector<Companion> companions;
  std::uint64_t assignments_checked = 0;
};

/// Exhaustive search over all 2^|E| sign assignments. Assignment bit e
/// (edges in sorted order) set means the edge is positive; results come out
/// in increasing bitmask order. Throws SearchBudgetExceeded when |E| exceeds
/// options.max_edges.
OracleResult enumerate_admissible_companions(const ExchangeMatrix& b, const OracleOptions& options = {});

struct ExistenceResult {
  bool exists = false;
  std::uint64_t assignments_checked = 0;
  std::optional<Companion> witness;
};

/// Same search, stopping at the first admissible companion.
ExistenceResult exists_admissible_companion(const ExchangeMatrix& b, const OracleOptions& options = {});

/// A 4-vertex exchange matrix realizing the obstructed diagram: edges
/// 2->1 (1), 1->3 (2), 3->2 (2), 1->4 (1), 2->4 (1), 3->4 (2), D = (2,2,1,2).
ExchangeMatrix figure1_matrix();

}  // namespace mutlab
