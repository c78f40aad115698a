#include "mutlab/oracle.hpp"

#include <bit>
#include <string>

namespace mutlab {

Companion companion_from_signs(const ExchangeMatrix& b, const SignAssignment& sigma) {
  const Diagram g = diagram_of(b);
  if (sigma.signs.size() != g.edges().size())
    throw ValidationError("sign assignment must cover exactly the diagram's edges");
  IntMatrix a(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a(i, i) = 2;
  for (const auto& [edge, s] : sigma.signs) {
    const auto [i, j] = edge;
    if (i >= b.size() || j >= b.size() || !g.adjacent(i, j))
      throw ValidationError("sign assignment names a non-edge {" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + "}");
    if (s != 1 && s != -1) throw ValidationError("edge signs must be +1 or -1");
    a(i, j) = checked_mul(s, checked_abs(b(i, j)));
    a(j, i) = checked_mul(s, checked_abs(b(j, i)));
  }
  return Companion(std::move(a), b.symmetrizer());
}

namespace {

struct CycleMask {
  std::uint64_t edges;
  bool oriented;
};

class Search {
 public:
  Search(const ExchangeMatrix& b, const OracleOptions& options) : b_(b), options_(options) {
    const Diagram g = diagram_of(b);
    for (const Edge& e : g.edges()) edges_.push_back(unordered(e.source, e.target));
    if (edges_.size() > options.max_edges || edges_.size() >= 64)
      throw SearchBudgetExceeded("diagram has " + std::to_string(edges_.size()) + " edges; exhaustive search is capped at " +
                                 std::to_string(options.max_edges));
    for (const Cycle& c : enumerate_cycles(g, options.cycles)) {
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < c.vertices.size(); ++i)
        mask |= std::uint64_t{1} << index_of(unordered(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]));
      cycles_.push_back({mask, c.oriented});
    }
  }

  std::uint64_t total() const { return std::uint64_t{1} << edges_.size(); }

  bool admissible(std::uint64_t positive) const {
    for (const CycleMask& c : cycles_) {
      const int count = std::popcount(positive & c.edges);
      if (c.oriented) {
        if (options_.rule == OrientedRule::exactly_one ? count != 1 : count % 2 == 0) return false;
      } else if (count % 2 != 0) {
        return false;
      }
    }
    return true;
  }

  Companion build(std::uint64_t positive) const {
    SignAssignment sigma;
    for (std::size_t e = 0; e < edges_.size(); ++e) sigma.signs[edges_[e]] = (positive >> e) & 1 ? 1 : -1;
    return companion_from_signs(b_, sigma);
  }

 private:
  std::size_t index_of(UnorderedEdge e) const {
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (edges_[i] == e) return i;
    throw ValidationError("cycle uses an unknown edge");
  }

  const ExchangeMatrix& b_;
  const OracleOptions& options_;
  std::vector<UnorderedEdge> edges_;
  std::vector<CycleMask> cycles_;
};

}  // namespace

OracleResult enumerate_admissible_companions(const ExchangeMatrix& b, const OracleOptions& options) {
  const Search search(b, options);
  OracleResult result;
  for (std::uint64_t mask = 0; mask < search.total(); ++mask) {
    ++result.assignments_checked;
    if (search.admissible(mask)) result.companions.push_back(search.build(mask));
  }
  return result;
}

ExistenceResult exists_admissible_companion(const ExchangeMatrix& b, const OracleOptions& options) {
  const Search search(b, options);
  ExistenceResult result;
  for (std::uint64_t mask = 0; mask < search.total(); ++mask) {
    ++result.assignments_checked;
    if (search.admissible(mask)) {
      result.exists = true;
      result.witness = search.build(mask);
      break;
    }
  }
  return result;
}

ExchangeMatrix figure1_matrix() {
  return ExchangeMatrix(IntMatrix{{0, 1, -1, -1}, {-1, 0, 1, -1}, {2, -2, 0, -2}, {1, 1, 1, 0}});
}

}  // namespace mutlab
