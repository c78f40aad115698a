#include "mutlab/mutation.hpp"

#include <string>
#include <utility>

namespace mutlab {

namespace {

void check_index(std::size_t k, std::size_t n) {
  if (k >= n)
    throw IndexOutOfRange("mutation index " + std::to_string(k + 1) + " out of range 1.." + std::to_string(n));
}

}  // namespace

MutationWord MutationWord::from_one_based(const std::vector<Int>& letters, std::size_t n) {
  MutationWord w;
  w.letters.reserve(letters.size());
  for (Int k : letters) {
    if (k < 1 || static_cast<std::size_t>(k) > n)
      throw IndexOutOfRange("mutation index " + std::to_string(k) + " out of range 1.." + std::to_string(n));
    w.letters.push_back(static_cast<std::size_t>(k - 1));
  }
  return w;
}

std::vector<Int> MutationWord::to_one_based() const {
  std::vector<Int> out;
  out.reserve(letters.size());
  for (std::size_t k : letters) out.push_back(static_cast<Int>(k) + 1);
  return out;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k) {
  const std::size_t n = b.size();
  check_index(k, n);
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out(i, j) = checked_neg(b(i, j));
      } else {
        const Int up = checked_mul(positive_part(b(i, k)), positive_part(b(k, j)));
        const Int down = checked_mul(positive_part(checked_neg(b(i, k))), positive_part(checked_neg(b(k, j))));
        out(i, j) = checked_sub(checked_add(b(i, j), up), down);
      }
    }
  }
  return ExchangeMatrix(std::move(out), b.symmetrizer());
}

YSeed mutate_seed(const YSeed& seed, std::size_t k) {
  const std::size_t n = seed.size();
  check_index(k, n);
  const CVector& ck = seed.c(k);
  const ExchangeMatrix& b = seed.matrix();

  std::vector<CVector> next;
  next.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k) {
      next.push_back(-ck);
      continue;
    }
    const Int factor = positive_part(checked_mul(ck.sign(), b(k, i)));
    if (factor == 0) {
      next.push_back(seed.c(i));
      continue;
    }
    std::vector<Int> coords(seed.c(i).coords());
    for (std::size_t t = 0; t < n; ++t) coords[t] = checked_add(coords[t], checked_mul(factor, ck[t]));
    if (!is_sign_coherent(coords))
      throw SignCoherenceViolation("mutation at " + std::to_string(k + 1) + " produced non-sign-coherent c-vector " +
                                   std::to_string(i + 1) + " = " + to_string(coords));
    next.emplace_back(std::move(coords));
  }
  return YSeed(std::move(next), mutate_matrix(b, k));
}

YSeed apply_word(const YSeed& seed, const MutationWord& word) {
  YSeed current = seed;
  for (std::size_t k : word.letters) current = mutate_seed(current, k);
  return current;
}

}  // namespace mutlab
