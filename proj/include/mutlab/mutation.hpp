#pragma once

#include <cstddef>
#include <vector>

#include "mutlab/core.hpp"

namespace mutlab {

/// A path in the n-regular tree from the initial vertex, as a sequence of
/// edge labels. Letters are 0-based internally; file formats and the CLI
/// use 1-based letters. Words are applied left to right.
struct MutationWord {
  std::vector<std::size_t> letters;

  static MutationWord from_one_based(const std::vector<Int>& letters, std::size_t n);
  std::vector<Int> to_one_based() const;

  friend bool operator==(const MutationWord&, const MutationWord&) = default;
};

/// Matrix mutation at k. The result keeps the symmetrizer of b.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k);

/// Y-seed mutation at k: c'_k = -c_k and c'_i = c_i + [sgn(c_k) B_ki]_+ c_k.
/// Throws SignCoherenceViolation if a resulting vector is not sign-coherent.
YSeed mutate_seed(const YSeed& seed, std::size_t k);

YSeed apply_word(const YSeed& seed, const MutationWord& word);

}  // namespace mutlab
