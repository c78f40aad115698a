#include "mutlab/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace mutlab {

Diagram::Diagram(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), dir_(n * n, 0), neighbors_(n) {
  std::sort(edges_.begin(), edges_.end());
  for (const Edge& e : edges_) {
    if (e.source >= n || e.target >= n) throw ValidationError("edge endpoint out of range");
    if (e.source == e.target) throw ValidationError("diagram edges cannot be self-loops");
    if (e.weight <= 0) throw ValidationError("diagram edge weights must be positive");
    if (dir_[e.source * n + e.target] != 0) throw ValidationError("at most one edge per vertex pair");
    dir_[e.source * n + e.target] = 1;
    dir_[e.target * n + e.source] = -1;
    neighbors_[e.source].push_back(e.target);
    neighbors_[e.target].push_back(e.source);
  }
  for (auto& adj : neighbors_) std::sort(adj.begin(), adj.end());
}

std::size_t default_cycle_budget() {
  if (const char* env = std::getenv("MUTLAB_CYCLE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

Diagram diagram_of(const ExchangeMatrix& b) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b(j, i) > 0) edges.push_back({i, j, checked_abs(checked_mul(b(i, j), b(j, i)))});
  return Diagram(b.size(), std::move(edges));
}

bool is_acyclic(const Diagram& g) {
  // 0 = unvisited, 1 = on stack, 2 = done
  std::vector<int> state(g.size(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t root = 0; root < g.size(); ++root) {
    if (state[root] != 0) continue;
    stack.push_back({root, 0});
    state[root] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      const auto& adj = g.neighbors(u);
      if (next == adj.size()) {
        state[u] = 2;
        stack.pop_back();
        continue;
      }
      const std::size_t w = adj[next++];
      if (!g.points(u, w)) continue;
      if (state[w] == 1) return false;
      if (state[w] == 0) {
        state[w] = 1;
        stack.push_back({w, 0});
      }
    }
  }
  return true;
}

namespace {

bool is_oriented(const Diagram& g, const std::vector<std::size_t>& cyc) {
  std::size_t forward = 0;
  for (std::size_t i = 0; i < cyc.size(); ++i)
    if (g.points(cyc[i], cyc[(i + 1) % cyc.size()])) ++forward;
  return forward == 0 || forward == cyc.size();
}

bool is_chordless(const Diagram& g, const std::vector<std::size_t>& cyc) {
  const std::size_t m = cyc.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;
      if (g.adjacent(cyc[i], cyc[j])) return false;
    }
  return true;
}

class CycleFinder {
 public:
  CycleFinder(const Diagram& g, std::size_t budget) : g_(g), budget_(budget), on_path_(g.size(), false) {}

  std::vector<std::vector<std::size_t>> run() {
    for (std::size_t s = 0; s < g_.size(); ++s) {
      start_ = s;
      path_ = {s};
      on_path_[s] = true;
      extend();
      on_path_[s] = false;
    }
    return std::move(found_);
  }

 private:
  void extend() {
    const std::size_t u = path_.back();
    for (std::size_t w : g_.neighbors(u)) {
      if (w == start_) {
        if (path_.size() >= 3 && path_[1] < path_.back()) {
          if (found_.size() >= budget_)
            throw CycleBudgetExceeded("more than " + std::to_string(budget_) + " cycles in diagram");
          found_.push_back(path_);
        }
        continue;
      }
      if (w < start_ || on_path_[w]) continue;
      on_path_[w] = true;
      path_.push_back(w);
      extend();
      path_.pop_back();
      on_path_[w] = false;
    }
  }

  const Diagram& g_;
  std::size_t budget_;
  std::size_t start_ = 0;
  std::vector<bool> on_path_;
  std::vector<std::size_t> path_;
  std::vector<std::vector<std::size_t>> found_;
};

std::vector<std::size_t> sorted_copy(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const Diagram& g, const CycleOptions& options) {
  auto raw = CycleFinder(g, options.budget).run();
  std::vector<Cycle> out;
  out.reserve(raw.size());
  for (auto& cyc : raw) {
    if (options.mode == CycleMode::chordless && !is_chordless(g, cyc)) continue;
    const bool oriented = is_oriented(g, cyc);
    out.push_back({std::move(cyc), oriented});
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    const auto sa = sorted_copy(a.vertices), sb = sorted_copy(b.vertices);
    if (sa != sb) return sa < sb;
    return a.vertices < b.vertices;
  });
  return out;
}

EdgeCut positive_edges(const ExchangeMatrix& b, const Companion& a) {
  require_companion_of(a, b);
  EdgeCut cut;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a(i, j) > 0) cut.edges.insert({i, j});
  return cut;
}

std::size_t count_in_cut(const Cycle& cycle, const EdgeCut& cut) {
  const auto& v = cycle.vertices;
  std::size_t count = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (cut.contains(v[i], v[(i + 1) % v.size()])) ++count;
  return count;
}

namespace {

class PathChecker {
 public:
  PathChecker(const Diagram& g, const EdgeCut& cut, std::size_t budget, PathMode mode)
      : g_(g), cut_(cut), budget_(budget), induced_(mode == PathMode::induced), on_path_(g.size(), false) {}

  /// First directed path with two or more cut edges, if any.
  std::optional<std::vector<std::size_t>> run() {
    for (std::size_t s = 0; s < g_.size(); ++s) {
      path_ = {s};
      on_path_[s] = true;
      const bool bad = extend(0);
      on_path_[s] = false;
      if (bad) return path_;
    }
    return std::nullopt;
  }

 private:
  bool extend(std::size_t positives) {
    const std::size_t u = path_.back();
    for (std::size_t w : g_.neighbors(u)) {
      if (!g_.points(u, w) || on_path_[w] || (induced_ && has_chord(w))) continue;
      if (++visited_ > budget_)
        throw CycleBudgetExceeded("more than " + std::to_string(budget_) + " directed paths in diagram");
      const std::size_t p = positives + (cut_.contains(u, w) ? 1 : 0);
      path_.push_back(w);
      if (p > 1) return true;
      on_path_[w] = true;
      if (extend(p)) return true;
      on_path_[w] = false;
      path_.pop_back();
    }
    return false;
  }

  // w adjacent to some path vertex other than the current end
  bool has_chord(std::size_t w) const {
    for (std::size_t i = 0; i + 1 < path_.size(); ++i)
      if (g_.adjacent(path_[i], w)) return true;
    return false;
  }

  const Diagram& g_;
  const EdgeCut& cut_;
  std::size_t budget_;
  bool induced_;
  std::size_t visited_ = 0;
  std::vector<bool> on_path_;
  std::vector<std::size_t> path_;
};

}  // namespace

ConditionReport check_companion_conditions(const ExchangeMatrix& b, const Companion& a, const CycleOptions& options) {
  const EdgeCut cut = positive_edges(b, a);
  const Diagram g = diagram_of(b);
  ConditionReport report;
  report.path_witness = PathChecker(g, cut, options.budget, options.paths).run();
  report.paths_ok = !report.path_witness.has_value();
  for (const Cycle& c : enumerate_cycles(g, options)) {
    const std::size_t count = count_in_cut(c, cut);
    if (c.oriented && count != 1 && report.oriented_cycles_ok) {
      report.oriented_cycles_ok = false;
      report.oriented_witness = c;
    }
    if (!c.oriented && count % 2 != 0 && report.nonoriented_cycles_ok) {
      report.nonoriented_cycles_ok = false;
      report.nonoriented_witness = c;
    }
  }
  return report;
}

bool is_admissible_cut(const Diagram& g, const EdgeCut& cut, const CycleOptions& options) {
  for (const auto& [i, j] : cut.edges)
    if (i >= g.size() || j >= g.size() || !g.adjacent(i, j))
      throw ValidationError("cut edge {" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            "} is not an edge of the diagram");
  for (const Cycle& c : enumerate_cycles(g, options)) {
    const std::size_t count = count_in_cut(c, cut);
    if (c.oriented ? count != 1 : count % 2 != 0) return false;
  }
  return true;
}

std::string to_dot(const Diagram& g, const std::optional<Companion>& a) {
  if (a && a->size() != g.size()) throw ValidationError("companion dimension does not match diagram");
  std::ostringstream os;
  os << "digraph G {\n";
  for (std::size_t i = 0; i < g.size(); ++i) os << "  " << i + 1 << ";\n";
  for (const Edge& e : g.edges()) {
    const bool positive = a && (*a)(e.source, e.target) > 0;
    std::string label = e.weight > 1 ? std::to_string(e.weight) : "";
    if (positive) label += "+";
    os << "  " << e.source + 1 << " -> " << e.target + 1;
    if (positive)
      os << " [style=\"dashed\", label=\"" << label << "\"]";
    else if (!label.empty())
      os << " [label=\"" << label << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_string(const Cycle& cycle) {
  std::ostringstream os;
  for (std::size_t i = 0; i < cycle.vertices.size(); ++i) os << (i ? "-" : "") << cycle.vertices[i] + 1;
  os << (cycle.oriented ? " (oriented)" : " (non-oriented)");
  return os.str();
}

}  // namespace mutlab
