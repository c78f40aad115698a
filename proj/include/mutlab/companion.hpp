#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mutlab/core.hpp"
#include "mutlab/roots.hpp"

namespace mutlab {

/// Symmetrizable quasi-Cartan matrix: A_ii = 2 and d_i A_ij = d_j A_ji.
/// Whether it is a companion of a particular B is checked separately by
/// is_companion_of / require_companion_of.
class Companion {
 public:
  Companion(IntMatrix entries, Symmetrizer d);

  std::size_t size() const noexcept { return entries_.size(); }
  Int operator()(std::size_t i, std::size_t j) const noexcept { return entries_(i, j); }
  const IntMatrix& entries() const noexcept { return entries_; }
  const Symmetrizer& symmetrizer() const noexcept { return symmetrizer_; }

  friend bool operator==(const Companion&, const Companion&) = default;
  friend auto operator<=>(const Companion&, const Companion&) = default;

 private:
  IntMatrix entries_;
  Symmetrizer symmetrizer_;
};

/// |A_ij| = |B_ij| off the diagonal and the symmetrizers agree.
bool is_companion_of(const Companion& a, const ExchangeMatrix& b);
/// Throws CompanionMismatch naming the first offending entry.
void require_companion_of(const Companion& a, const ExchangeMatrix& b);

/// A_ij = <c_j, c_i^vee>. Validates the result against the seed's matrix
/// and throws CompanionMismatch rather than return a near-companion.
Companion pairing_companion(const YSeed& seed, const CartanMatrix& a0);

/// Sign formula in terms of B and the signs of the c-vectors: for B_ji != 0,
/// A_ji = -|B_ji| when sgn(B_ji) = sgn(c_j), and A_ji = sgn(c_i) B_ji otherwise.
Companion explicit_companion(const YSeed& seed);

/// epsilon-mutation of a companion A of B at k.
///   A'_ik = eps sgn(B_ki) A_ik,  A'_kj = eps sgn(B_kj) A_kj,
///   A'_ij = A_ij - sgn(A_ik A_kj) [B_ik B_kj]_+   (i, j != k).
Companion companion_mutation(const Companion& a, const ExchangeMatrix& b, std::size_t k, int eps);

/// E A E with E = diag(+-1), -1 exactly on the indices in `flipped`.
Companion sign_change(const Companion& a, const std::vector<std::size_t>& flipped);

/// s in {+-1}^n with rhs_ij = s_i s_j lhs_ij, found by 2-coloring the
/// nonzero pattern (each component rooted at its lowest index with +1).
/// Throws PatternMismatch when |lhs_ij| != |rhs_ij| somewhere.
std::optional<std::vector<int>> sign_equivalent(const Companion& lhs, const Companion& rhs);

}  // namespace mutlab
