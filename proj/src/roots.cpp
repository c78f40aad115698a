#include "mutlab/roots.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "mutlab/diagram.hpp"

namespace mutlab {

CartanMatrix::CartanMatrix(IntMatrix entries, Symmetrizer d)
    : entries_(std::move(entries)), symmetrizer_(std::move(d)), gram_(entries_.size()) {
  const std::size_t n = entries_.size();
  if (symmetrizer_.size() != n) throw ValidationError("symmetrizer length does not match Cartan matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_(i, i) != 2) throw ValidationError("Cartan matrix diagonal must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && entries_(i, j) > 0) throw ValidationError("Cartan matrix off-diagonal entries must be <= 0");
      gram_(i, j) = checked_mul(symmetrizer_[i], entries_(i, j));
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram_(i, j) != gram_(j, i)) throw ValidationError("D*A0 is not symmetric");
}

RootVector::RootVector(std::vector<Int> coords) : coords_(std::move(coords)) {
  if (std::all_of(coords_.begin(), coords_.end(), [](Int x) { return x == 0; }))
    throw ValidationError("root vector must be nonzero");
}

RootVector RootVector::simple(std::size_t n, std::size_t i) {
  std::vector<Int> e(n, 0);
  e.at(i) = 1;
  return RootVector(std::move(e));
}

Int RootVector::height() const {
  Int s = 0;
  for (Int x : coords_) s = checked_add(s, x);
  return checked_abs(s);
}

RootVector RootVector::operator-() const {
  std::vector<Int> v(coords_.size());
  std::transform(coords_.begin(), coords_.end(), v.begin(), [](Int x) { return checked_neg(x); });
  return RootVector(std::move(v));
}

CartanMatrix cartan_from_acyclic(const ExchangeMatrix& b0) {
  if (!is_acyclic(diagram_of(b0))) throw NotAcyclic("diagram of the initial matrix has an oriented cycle");
  const std::size_t n = b0.size();
  IntMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = i == j ? 2 : checked_neg(checked_abs(b0(i, j)));
  return CartanMatrix(std::move(a), b0.symmetrizer());
}

Int bilinear(const CartanMatrix& a0, std::span<const Int> x, std::span<const Int> y) {
  const std::size_t n = a0.size();
  if (x.size() != n || y.size() != n) throw ValidationError("root vector dimension does not match Cartan matrix");
  const IntMatrix& g = a0.gram();
  Int acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    Int row = 0;
    for (std::size_t j = 0; j < n; ++j) row = checked_add(row, checked_mul(g(i, j), y[j]));
    acc = checked_add(acc, checked_mul(x[i], row));
  }
  return acc;
}

Int pairing(const CartanMatrix& a0, const RootVector& beta, const RootVector& alpha) {
  const Int aa = bilinear(a0, alpha, alpha);
  const Int ab2 = checked_mul(2, bilinear(a0, alpha, beta));
  if (aa == 0 || ab2 % aa != 0)
    throw NonIntegralPairing("pairing 2(a,b)/(a,a) = " + std::to_string(ab2) + "/" + std::to_string(aa) +
                             " is not an integer for alpha = " + to_string(alpha.coords()));
  return ab2 / aa;
}

RootVector reflect(const CartanMatrix& a0, const RootVector& alpha, const RootVector& beta) {
  const Int p = pairing(a0, beta, alpha);
  std::vector<Int> out(beta.coords());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_sub(out[i], checked_mul(p, alpha.coords()[i]));
  return RootVector(std::move(out));
}

std::set<RootVector> real_roots_up_to_height(const CartanMatrix& a0, Int h) {
  if (h < 1) throw ValidationError("height bound must be positive");
  const std::size_t n = a0.size();
  std::set<RootVector> found;
  std::deque<RootVector> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    for (const RootVector& r : {RootVector::simple(n, i), -RootVector::simple(n, i)})
      if (found.insert(r).second) frontier.push_back(r);
  }
  while (!frontier.empty()) {
    RootVector beta = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i
      std::vector<Int> coords(beta.coords());
      Int p = 0;
      for (std::size_t j = 0; j < n; ++j) p = checked_add(p, checked_mul(a0(i, j), beta.coords()[j]));
      coords[i] = checked_sub(coords[i], p);
      RootVector image(std::move(coords));
      if (image.height() > h) continue;
      if (found.insert(image).second) frontier.push_back(std::move(image));
    }
  }
  return found;
}

}  // namespace mutlab
