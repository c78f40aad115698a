#pragma once

#include <random>
#include <string>
#include <vector>

#include "mutlab/core.hpp"

namespace mutlab::testing {

inline ExchangeMatrix a2() { return ExchangeMatrix(IntMatrix{{0, 1}, {-1, 0}}); }
inline ExchangeMatrix a3() { return ExchangeMatrix(IntMatrix{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}); }
inline ExchangeMatrix b2() { return ExchangeMatrix(IntMatrix{{0, 2}, {-1, 0}}); }
inline ExchangeMatrix g2() { return ExchangeMatrix(IntMatrix{{0, 3}, {-1, 0}}); }
/// Path 1-2-3-4 with a weight-2 edge {3,4}; D = (1,1,1,2).
inline ExchangeMatrix b4() {
  return ExchangeMatrix(IntMatrix{{0, 1, 0, 0}, {-1, 0, 1, 0}, {0, -1, 0, 2}, {0, 0, -1, 0}});
}
/// Affine type with a weight-4 edge; walks grow without bound.
inline ExchangeMatrix affine_a11() { return ExchangeMatrix(IntMatrix{{0, 2}, {-2, 0}}); }
/// Rank-4 acyclic with a 4-cycle in the underlying graph (non-oriented).
inline ExchangeMatrix square4() {
  return ExchangeMatrix(IntMatrix{{0, 1, 0, 1}, {-1, 0, 1, 0}, {0, -1, 0, -1}, {-1, 0, 1, 0}});
}
/// 1 -> 2 -> 3 -> 1.
inline ExchangeMatrix triangle() { return ExchangeMatrix(IntMatrix{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}); }

struct Fixture {
  std::string name;
  ExchangeMatrix matrix;
};

inline std::vector<Fixture> acyclic_fixtures() {
  return {{"A2", a2()}, {"A3", a3()}, {"B2", b2()}, {"G2", g2()}, {"B4", b4()}, {"square4", square4()}};
}

/// Random skew-symmetrizable matrix with |entries| <= max_entry: d_i drawn
/// from {1,2,3}, then each pair gets B_ij = m d_j / g, B_ji = -m d_i / g
/// (g = gcd(d_i, d_j)), rejecting pairs that exceed the bound.
inline ExchangeMatrix random_exchange(std::mt19937_64& rng, std::size_t n, Int max_entry = 3) {
  std::uniform_int_distribution<Int> dpick(1, 3), mpick(-3, 3);
  std::vector<Int> d(n);
  for (auto& x : d) x = dpick(rng);
  IntMatrix b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (int attempt = 0; attempt < 8; ++attempt) {
        const Int m = mpick(rng);
        const Int g = std::gcd(d[i], d[j]);
        const Int bij = m * d[j] / g, bji = -m * d[i] / g;
        if (std::abs(bij) <= max_entry && std::abs(bji) <= max_entry) {
          b(i, j) = bij;
          b(j, i) = bji;
          break;
        }
      }
    }
  }
  return ExchangeMatrix(std::move(b));
}

}  // namespace mutlab::testing
