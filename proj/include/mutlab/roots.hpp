#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "mutlab/core.hpp"

namespace mutlab {

/// Generalized Cartan matrix A0 of an acyclic exchange matrix, with the
/// Gram matrix G = D*A0 of the invariant form (alpha_i, alpha_j) = d_i A0_ij.
class CartanMatrix {
 public:
  CartanMatrix(IntMatrix entries, Symmetrizer d);

  std::size_t size() const noexcept { return entries_.size(); }
  Int operator()(std::size_t i, std::size_t j) const noexcept { return entries_(i, j); }
  const IntMatrix& entries() const noexcept { return entries_; }
  const Symmetrizer& symmetrizer() const noexcept { return symmetrizer_; }
  const IntMatrix& gram() const noexcept { return gram_; }

 private:
  IntMatrix entries_;
  Symmetrizer symmetrizer_;
  IntMatrix gram_;
};

/// Nonzero vector in the root lattice, coordinates in the simple-root basis.
class RootVector {
 public:
  explicit RootVector(std::vector<Int> coords);
  RootVector(const CVector& c) : coords_(c.coords()) {}  // NOLINT: c-vectors are roots

  static RootVector simple(std::size_t n, std::size_t i);

  const std::vector<Int>& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  /// |sum of coordinates|.
  Int height() const;
  RootVector operator-() const;

  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;

 private:
  std::vector<Int> coords_;
};

/// A0_ii = 2, A0_ij = -|B0_ij|. Throws NotAcyclic if the diagram of b0 has
/// an oriented cycle.
CartanMatrix cartan_from_acyclic(const ExchangeMatrix& b0);

/// x^T G y.
Int bilinear(const CartanMatrix& a0, std::span<const Int> x, std::span<const Int> y);
inline Int bilinear(const CartanMatrix& a0, const RootVector& x, const RootVector& y) {
  return bilinear(a0, x.coords(), y.coords());
}

/// <beta, alpha^vee> = 2(alpha, beta) / (alpha, alpha), exact.
/// Throws NonIntegralPairing if the division is inexact or (alpha, alpha) = 0.
Int pairing(const CartanMatrix& a0, const RootVector& beta, const RootVector& alpha);

/// s_alpha(beta) = beta - <beta, alpha^vee> alpha.
RootVector reflect(const CartanMatrix& a0, const RootVector& alpha, const RootVector& beta);

/// All real roots of height at most h, by closing {+-e_i} under simple
/// reflections while discarding anything above the height bound. For
/// infinite types this is a bounded membership oracle, not the full set.
std::set<RootVector> real_roots_up_to_height(const CartanMatrix& a0, Int h);

}  // namespace mutlab
