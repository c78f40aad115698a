#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "mutlab/integer.hpp"

namespace mutlab {

/// Dense square integer matrix, row-major, 0-based internally.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t size() const noexcept { return n_; }
  Int operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
  Int& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }

  std::vector<std::vector<Int>> rows() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Int> data_;
};

using Symmetrizer = std::vector<Int>;

/// Componentwise-minimal positive D with D*B skew-symmetric.
///
/// Ratios d_j/d_i = -B_ij/B_ji are propagated along a BFS spanning tree of
/// each connected component of the zero pattern, every nonzero pair is then
/// rechecked, denominators are cleared and each component is divided by its
/// gcd. Throws NotSkewSymmetrizable.
Symmetrizer find_symmetrizer(const IntMatrix& entries);

/// Skew-symmetrizable integer matrix B together with its symmetrizer D.
class ExchangeMatrix {
 public:
  /// Validates and computes the minimal symmetrizer.
  explicit ExchangeMatrix(IntMatrix entries);
  /// Validates that d_i B_ij = -d_j B_ji with the supplied positive D.
  ExchangeMatrix(IntMatrix entries, Symmetrizer d);

  std::size_t size() const noexcept { return entries_.size(); }
  Int operator()(std::size_t i, std::size_t j) const noexcept { return entries_(i, j); }
  const IntMatrix& entries() const noexcept { return entries_; }
  const Symmetrizer& symmetrizer() const noexcept { return symmetrizer_; }

  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;
  friend auto operator<=>(const ExchangeMatrix&, const ExchangeMatrix&) = default;

 private:
  IntMatrix entries_;
  Symmetrizer symmetrizer_;
};

/// Nonzero sign-coherent integer vector. Construction rejects the zero
/// vector and vectors with strictly mixed signs.
class CVector {
 public:
  explicit CVector(std::vector<Int> coords);
  static CVector basis(std::size_t n, std::size_t i);

  const std::vector<Int>& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  Int operator[](std::size_t i) const noexcept { return coords_[i]; }
  int sign() const noexcept { return sign_; }
  CVector operator-() const;

  friend bool operator==(const CVector&, const CVector&) = default;
  friend auto operator<=>(const CVector&, const CVector&) = default;

 private:
  std::vector<Int> coords_;
  int sign_ = 1;
};

/// Checks sign coherence without constructing; true iff nonzero and coherent.
bool is_sign_coherent(std::span<const Int> coords) noexcept;

/// (c-tuple, B). The c-tuple has one vector per index of B.
class YSeed {
 public:
  YSeed(std::vector<CVector> cvectors, ExchangeMatrix matrix);

  std::size_t size() const noexcept { return matrix_.size(); }
  const std::vector<CVector>& cvectors() const noexcept { return cvectors_; }
  const CVector& c(std::size_t i) const { return cvectors_[i]; }
  const ExchangeMatrix& matrix() const noexcept { return matrix_; }

  friend bool operator==(const YSeed&, const YSeed&) = default;
  friend auto operator<=>(const YSeed&, const YSeed&) = default;

 private:
  std::vector<CVector> cvectors_;
  ExchangeMatrix matrix_;
};

/// c-tuple is the standard basis.
YSeed initial_seed(const ExchangeMatrix& b);

std::string to_string(const IntMatrix& m);
std::string to_string(std::span<const Int> v);

}  // namespace mutlab
