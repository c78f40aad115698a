#include "mutlab/companion.hpp"

#include <deque>
#include <string>
#include <utility>

namespace mutlab {

namespace {

std::string at(std::size_t i, std::size_t j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

}  // namespace

Companion::Companion(IntMatrix entries, Symmetrizer d) : entries_(std::move(entries)), symmetrizer_(std::move(d)) {
  const std::size_t n = entries_.size();
  if (symmetrizer_.size() != n) throw ValidationError("symmetrizer length does not match companion");
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_(i, i) != 2) throw ValidationError("companion diagonal entry " + at(i, i) + " must be 2");
    for (std::size_t j = i + 1; j < n; ++j)
      if (checked_mul(symmetrizer_[i], entries_(i, j)) != checked_mul(symmetrizer_[j], entries_(j, i)))
        throw ValidationError("D*A is not symmetric at " + at(i, j));
  }
}

bool is_companion_of(const Companion& a, const ExchangeMatrix& b) {
  if (a.size() != b.size() || a.symmetrizer() != b.symmetrizer()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j && checked_abs(a(i, j)) != checked_abs(b(i, j))) return false;
  return true;
}

void require_companion_of(const Companion& a, const ExchangeMatrix& b) {
  if (a.size() != b.size()) throw CompanionMismatch("companion dimension does not match exchange matrix");
  if (a.symmetrizer() != b.symmetrizer()) throw CompanionMismatch("companion symmetrizer differs from exchange matrix");
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j && checked_abs(a(i, j)) != checked_abs(b(i, j)))
        throw CompanionMismatch("|A" + at(i, j) + "| = " + std::to_string(checked_abs(a(i, j))) + " but |B" + at(i, j) +
                                "| = " + std::to_string(checked_abs(b(i, j))));
}

Companion pairing_companion(const YSeed& seed, const CartanMatrix& a0) {
  const std::size_t n = seed.size();
  if (a0.size() != n) throw ValidationError("Cartan matrix dimension does not match seed");
  if (a0.symmetrizer() != seed.matrix().symmetrizer())
    throw CompanionMismatch("Cartan symmetrizer differs from the seed's symmetrizer");
  std::vector<RootVector> roots;
  roots.reserve(n);
  for (const CVector& c : seed.cvectors()) roots.emplace_back(c);
  IntMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = pairing(a0, roots[j], roots[i]);
  Companion out(std::move(a), a0.symmetrizer());
  require_companion_of(out, seed.matrix());
  return out;
}

Companion explicit_companion(const YSeed& seed) {
  const std::size_t n = seed.size();
  const ExchangeMatrix& b = seed.matrix();
  IntMatrix a(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) {
        a(j, i) = 2;
      } else if (b(j, i) == 0) {
        a(j, i) = 0;
      } else if (sgn(b(j, i)) == seed.c(j).sign()) {
        a(j, i) = checked_neg(checked_abs(b(j, i)));
      } else {
        a(j, i) = checked_mul(seed.c(i).sign(), b(j, i));
      }
    }
  }
  return Companion(std::move(a), b.symmetrizer());
}

Companion companion_mutation(const Companion& a, const ExchangeMatrix& b, std::size_t k, int eps) {
  const std::size_t n = a.size();
  if (k >= n) throw IndexOutOfRange("mutation index " + std::to_string(k + 1) + " out of range 1.." + std::to_string(n));
  if (eps != 1 && eps != -1) throw ValidationError("epsilon must be +1 or -1");
  require_companion_of(a, b);
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        out(i, j) = 2;
      } else if (j == k) {
        out(i, k) = checked_mul(eps * sgn(b(k, i)), a(i, k));
      } else if (i == k) {
        out(k, j) = checked_mul(eps * sgn(b(k, j)), a(k, j));
      } else {
        const Int correction = positive_part(checked_mul(b(i, k), b(k, j)));
        const int s = sgn(a(i, k)) * sgn(a(k, j));
        out(i, j) = checked_sub(a(i, j), checked_mul(s, correction));
      }
    }
  }
  return Companion(std::move(out), a.symmetrizer());
}

Companion sign_change(const Companion& a, const std::vector<std::size_t>& flipped) {
  const std::size_t n = a.size();
  std::vector<int> e(n, 1);
  for (std::size_t i : flipped) {
    if (i >= n) throw IndexOutOfRange("sign change index " + std::to_string(i + 1) + " out of range");
    e[i] = -1;
  }
  IntMatrix out(a.entries());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = checked_mul(e[i] * e[j], a(i, j));
  return Companion(std::move(out), a.symmetrizer());
}

std::optional<std::vector<int>> sign_equivalent(const Companion& lhs, const Companion& rhs) {
  const std::size_t n = lhs.size();
  if (rhs.size() != n) throw PatternMismatch("companions have different dimensions");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (checked_abs(lhs(i, j)) != checked_abs(rhs(i, j)))
        throw PatternMismatch("|A" + at(i, j) + "| differs between the two companions");

  std::vector<int> s(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (s[root] != 0) continue;
    s[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || lhs(i, j) == 0) continue;
        const int want = s[i] * (sgn(lhs(i, j)) == sgn(rhs(i, j)) ? 1 : -1);
        if (s[j] == 0) {
          s[j] = want;
          queue.push_back(j);
        } else if (s[j] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return s;
}

}  // namespace mutlab
