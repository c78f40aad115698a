#include "mutlab/core.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <utility>

namespace mutlab {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
    : n_(rows.size()), data_() {
  data_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw ValidationError("matrix is not square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw ValidationError("matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<Int>> IntMatrix::rows() const {
  std::vector<std::vector<Int>> out(n_, std::vector<Int>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

namespace {

struct Ratio {
  Int num = 1;
  Int den = 1;
};

Ratio reduce(Int num, Int den) {
  if (den < 0) {
    num = checked_neg(num);
    den = checked_neg(den);
  }
  Int g = std::gcd(num, den);
  return {num / g, den / g};
}

void check_pattern(const IntMatrix& b) {
  const std::size_t n = b.size();
  if (n == 0) throw ValidationError("matrix must have positive dimension");
  for (std::size_t i = 0; i < n; ++i) {
    if (b(i, i) != 0) throw NotSkewSymmetrizable("diagonal entry B_" + std::to_string(i + 1) + std::to_string(i + 1) + " is nonzero");
    for (std::size_t j = i + 1; j < n; ++j) {
      const Int x = b(i, j), y = b(j, i);
      if ((x == 0) != (y == 0))
        throw NotSkewSymmetrizable("zero pattern is not symmetric at (" + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + ")");
      if (x != 0 && sgn(x) == sgn(y))
        throw NotSkewSymmetrizable("signs do not oppose at (" + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + ")");
    }
  }
}

}  // namespace

Symmetrizer find_symmetrizer(const IntMatrix& b) {
  check_pattern(b);
  const std::size_t n = b.size();
  std::vector<Ratio> ratio(n);
  std::vector<std::size_t> component(n, n);

  std::size_t n_components = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (component[root] != n) continue;
    const std::size_t comp = n_components++;
    component[root] = comp;
    ratio[root] = {1, 1};
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (b(i, j) == 0 || component[j] != n) continue;
        // d_j = -d_i * B_ij / B_ji
        component[j] = comp;
        ratio[j] = reduce(checked_mul(checked_neg(ratio[i].num), b(i, j)), checked_mul(ratio[i].den, b(j, i)));
        queue.push_back(j);
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (b(i, j) == 0) continue;
      // d_i B_ij + d_j B_ji == 0, cross-multiplied
      const Int lhs = checked_mul(checked_mul(ratio[i].num, b(i, j)), ratio[j].den);
      const Int rhs = checked_mul(checked_mul(ratio[j].num, b(j, i)), ratio[i].den);
      if (checked_add(lhs, rhs) != 0)
        throw NotSkewSymmetrizable("inconsistent symmetrizer ratios around a cycle through (" +
                                   std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  }

  std::vector<Int> lcm(n_components, 1);
  for (std::size_t i = 0; i < n; ++i) lcm[component[i]] = checked_lcm(lcm[component[i]], ratio[i].den);
  Symmetrizer d(n);
  std::vector<Int> g(n_components, 0);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = checked_mul(ratio[i].num, lcm[component[i]] / ratio[i].den);
    g[component[i]] = std::gcd(g[component[i]], d[i]);
  }
  for (std::size_t i = 0; i < n; ++i) d[i] /= g[component[i]];
  return d;
}

ExchangeMatrix::ExchangeMatrix(IntMatrix entries)
    : entries_(std::move(entries)), symmetrizer_(find_symmetrizer(entries_)) {}

ExchangeMatrix::ExchangeMatrix(IntMatrix entries, Symmetrizer d)
    : entries_(std::move(entries)), symmetrizer_(std::move(d)) {
  check_pattern(entries_);
  const std::size_t n = entries_.size();
  if (symmetrizer_.size() != n) throw ValidationError("symmetrizer length does not match matrix dimension");
  for (Int di : symmetrizer_)
    if (di <= 0) throw ValidationError("symmetrizer entries must be positive");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (checked_mul(symmetrizer_[i], entries_(i, j)) != checked_neg(checked_mul(symmetrizer_[j], entries_(j, i))))
        throw NotSkewSymmetrizable("D*B is not skew-symmetric at (" + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + ")");
}

bool is_sign_coherent(std::span<const Int> coords) noexcept {
  bool pos = false, neg = false;
  for (Int x : coords) {
    pos |= x > 0;
    neg |= x < 0;
  }
  return pos != neg;
}

CVector::CVector(std::vector<Int> coords) : coords_(std::move(coords)) {
  if (!is_sign_coherent(coords_))
    throw SignCoherenceViolation("c-vector " + to_string(coords_) + " is zero or has mixed signs");
  sign_ = std::any_of(coords_.begin(), coords_.end(), [](Int x) { return x > 0; }) ? 1 : -1;
}

CVector CVector::basis(std::size_t n, std::size_t i) {
  std::vector<Int> e(n, 0);
  e.at(i) = 1;
  return CVector(std::move(e));
}

CVector CVector::operator-() const {
  std::vector<Int> v(coords_.size());
  std::transform(coords_.begin(), coords_.end(), v.begin(), [](Int x) { return checked_neg(x); });
  return CVector(std::move(v));
}

YSeed::YSeed(std::vector<CVector> cvectors, ExchangeMatrix matrix)
    : cvectors_(std::move(cvectors)), matrix_(std::move(matrix)) {
  if (cvectors_.size() != matrix_.size()) throw ValidationError("seed needs exactly one c-vector per index");
  for (const auto& c : cvectors_)
    if (c.size() != matrix_.size()) throw ValidationError("c-vector length does not match matrix dimension");
}

YSeed initial_seed(const ExchangeMatrix& b) {
  std::vector<CVector> c;
  c.reserve(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c.push_back(CVector::basis(b.size(), i));
  return YSeed(std::move(c), b);
}

std::string to_string(std::span<const Int> v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  const auto rows = m.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) os << (i ? "," : "") << to_string(rows[i]);
  os << ']';
  return os.str();
}

}  // namespace mutlab
