#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"
#include "mutlab/diagram.hpp"
#include "mutlab/explorer.hpp"
#include "mutlab/mutation.hpp"
#include "mutlab/oracle.hpp"
#include "oracles.hpp"

using namespace mutlab;
using namespace mutlab::testing;

namespace {

Companion comp(IntMatrix a, const ExchangeMatrix& b) { return Companion(std::move(a), b.symmetrizer()); }

std::vector<std::vector<bool>> adjacency(const Diagram& g) {
  std::vector<std::vector<bool>> adj(g.size(), std::vector<bool>(g.size(), false));
  for (const Edge& e : g.edges()) adj[e.source][e.target] = adj[e.target][e.source] = true;
  return adj;
}

const IntMatrix kTriangleOne12{{2, 1, -1}, {1, 2, -1}, {-1, -1, 2}};
const IntMatrix kTriangleNone{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};

}  // namespace

TEST_CASE("diagram_of examples", "[diagram]") {
  CHECK(diagram_of(a3()).edges() == std::vector<Edge>{{1, 0, 1}, {2, 1, 1}});
  CHECK(diagram_of(triangle()).edges() == std::vector<Edge>{{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
  CHECK(diagram_of(b2()).edges() == std::vector<Edge>{{1, 0, 2}});
  CHECK(diagram_of(figure1_matrix()).edges() ==
        std::vector<Edge>{{0, 2, 2}, {0, 3, 1}, {1, 0, 1}, {1, 3, 1}, {2, 1, 2}, {2, 3, 2}});
  const Diagram g = diagram_of(a3());
  CHECK(g.points(1, 0));
  CHECK_FALSE(g.points(0, 1));
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("is_acyclic examples", "[diagram]") {
  CHECK(is_acyclic(diagram_of(a3())));
  CHECK(is_acyclic(diagram_of(square4())));
  CHECK_FALSE(is_acyclic(diagram_of(triangle())));
  CHECK_FALSE(is_acyclic(diagram_of(figure1_matrix())));
}

TEST_CASE("enumerate_cycles examples", "[diagram]") {
  CHECK(enumerate_cycles(diagram_of(a3())).empty());
  const auto tri = enumerate_cycles(diagram_of(triangle()));
  REQUIRE(tri.size() == 1);
  CHECK(tri[0].oriented);
  CHECK(tri[0].vertices == std::vector<std::size_t>{0, 1, 2});
  CHECK(to_string(tri[0]) == "1-2-3 (oriented)");

  const auto fig = enumerate_cycles(diagram_of(figure1_matrix()));
  REQUIRE(fig.size() == 7);
  std::size_t triangles = 0, oriented = 0;
  for (const Cycle& c : fig) {
    triangles += c.vertices.size() == 3;
    oriented += c.oriented;
  }
  CHECK(triangles == 4);
  CHECK(oriented == 1);  // only 1 -> 3 -> 2 -> 1
  CHECK(fig[0].vertices == std::vector<std::size_t>{0, 1, 2});
  CHECK(fig[0].oriented);

  // K4 has no chordless 4-cycles
  CHECK(enumerate_cycles(diagram_of(figure1_matrix()), {CycleMode::chordless, 100}).size() == 4);
  const auto sq = enumerate_cycles(diagram_of(square4()), {CycleMode::chordless, 100});
  REQUIRE(sq.size() == 1);
  CHECK_FALSE(sq[0].oriented);
}

TEST_CASE("cycle budget is enforced", "[diagram]") {
  CHECK_THROWS_AS(enumerate_cycles(diagram_of(figure1_matrix()), {CycleMode::all_simple, 6}), CycleBudgetExceeded);
  CHECK_NOTHROW(enumerate_cycles(diagram_of(figure1_matrix()), {CycleMode::all_simple, 7}));
}

TEST_CASE("cycle enumeration agrees with subset-permutation search", "[diagram][property]") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const ExchangeMatrix b = random_exchange(rng, 3 + trial % 4, 2);
    const Diagram g = diagram_of(b);
    const auto adj = adjacency(g);
    const auto expected = brute_cycles(adj);
    const auto got = enumerate_cycles(g);
    std::set<std::vector<std::size_t>> got_set;
    for (const Cycle& c : got) {
      REQUIRE(got_set.insert(c.vertices).second);
      bool fwd = true, bwd = true;
      const std::size_t m = c.vertices.size();
      for (std::size_t i = 0; i < m; ++i) {
        fwd = fwd && g.points(c.vertices[i], c.vertices[(i + 1) % m]);
        bwd = bwd && g.points(c.vertices[(i + 1) % m], c.vertices[i]);
      }
      REQUIRE(c.oriented == (fwd || bwd));
    }
    REQUIRE(got_set == expected);

    for (const Cycle& c : enumerate_cycles(g, {CycleMode::chordless, 1'000'000})) {
      const std::size_t m = c.vertices.size();
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 2; j < m; ++j)
          if (!(i == 0 && j == m - 1)) REQUIRE_FALSE(adj[c.vertices[i]][c.vertices[j]]);
    }
  }
}

TEST_CASE("positive_edges examples", "[diagram]") {
  const Companion a0 = explicit_companion(initial_seed(a3()));
  CHECK(positive_edges(a3(), a0).edges.empty());
  const YSeed s = apply_word(initial_seed(a3()), MutationWord::from_one_based({2}, 3));
  CHECK(positive_edges(s.matrix(), explicit_companion(s)).edges == std::set<UnorderedEdge>{{0, 1}});
  CHECK(positive_edges(a3(), sign_change(a0, {1})).edges == std::set<UnorderedEdge>{{0, 1}, {1, 2}});
}

TEST_CASE("check_companion_conditions examples", "[diagram]") {
  for (const auto& fx : acyclic_fixtures()) {
    INFO(fx.name);
    CHECK(check_companion_conditions(fx.matrix, explicit_companion(initial_seed(fx.matrix))).all());
  }
  const ConditionReport one = check_companion_conditions(triangle(), comp(kTriangleOne12, triangle()));
  CHECK(one.all());
  const ConditionReport none = check_companion_conditions(triangle(), comp(kTriangleNone, triangle()));
  CHECK_FALSE(none.oriented_cycles_ok);
  CHECK(none.nonoriented_cycles_ok);
  CHECK(none.paths_ok);
  REQUIRE(none.oriented_witness.has_value());
  CHECK(none.oriented_witness->vertices == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("directed path condition", "[diagram]") {
  // A3 with both edges positive: path 3 -> 2 -> 1 carries two of them
  const Companion a = sign_change(explicit_companion(initial_seed(a3())), {1});
  const ConditionReport r = check_companion_conditions(a3(), a);
  CHECK_FALSE(r.paths_ok);
  REQUIRE(r.path_witness.has_value());
  CHECK(*r.path_witness == std::vector<std::size_t>{2, 1, 0});
  CHECK(r.admissible());
  // alternating orientation: no directed path of length two
  const ExchangeMatrix alt(IntMatrix{{0, 1, 0}, {-1, 0, -1}, {0, 1, 0}});
  CHECK(check_companion_conditions(alt, sign_change(explicit_companion(initial_seed(alt)), {1})).paths_ok);
}

TEST_CASE("directed paths with a chord can carry two positive edges", "[diagram]") {
  // A5 after [2,4,3]: two oriented triangles 1->3->5 and 3->2->4 sharing
  // vertex 3. The path 1 -> 3 -> 2 -> 4 has chord {3,4} and meets one
  // positive edge from each triangle.
  const ExchangeMatrix a5(
      IntMatrix{{0, 1, 0, 0, 0}, {-1, 0, 1, 0, 0}, {0, -1, 0, 1, 0}, {0, 0, -1, 0, 1}, {0, 0, 0, -1, 0}});
  const YSeed s = apply_word(initial_seed(a5), MutationWord::from_one_based({2, 4, 3}, 5));
  const Companion a = pairing_companion(s, cartan_from_acyclic(a5));
  CHECK(positive_edges(s.matrix(), a).edges == std::set<UnorderedEdge>{{0, 2}, {1, 3}});

  const ConditionReport induced = check_companion_conditions(s.matrix(), a);
  CHECK(induced.all());
  CycleOptions every;
  every.paths = PathMode::all_simple;
  const ConditionReport all = check_companion_conditions(s.matrix(), a, every);
  CHECK_FALSE(all.paths_ok);
  CHECK(all.admissible());
  REQUIRE(all.path_witness.has_value());
  CHECK(all.path_witness->size() == 4);
}

TEST_CASE("is_admissible_cut examples", "[diagram]") {
  CHECK(is_admissible_cut(diagram_of(a3()), {}));
  CHECK(is_admissible_cut(diagram_of(triangle()), EdgeCut{{{0, 2}}}));
  CHECK_FALSE(is_admissible_cut(diagram_of(triangle()), {}));
  CHECK_FALSE(is_admissible_cut(diagram_of(square4()), EdgeCut{{{0, 1}}}));
  CHECK(is_admissible_cut(diagram_of(square4()), EdgeCut{{{0, 1}, {2, 3}}}));
  CHECK_THROWS_AS(is_admissible_cut(diagram_of(a3()), EdgeCut{{{0, 2}}}), ValidationError);
}

TEST_CASE("to_dot examples", "[diagram]") {
  CHECK(to_dot(diagram_of(a3())) == "digraph G {\n  1;\n  2;\n  3;\n  2 -> 1;\n  3 -> 2;\n}\n");
  CHECK(to_dot(diagram_of(b2())) == "digraph G {\n  1;\n  2;\n  2 -> 1 [label=\"2\"];\n}\n");
  const std::string dot = to_dot(diagram_of(triangle()), comp(kTriangleOne12, triangle()));
  CHECK(dot ==
        "digraph G {\n  1;\n  2;\n  3;\n  1 -> 2 [style=\"dashed\", label=\"+\"];\n  2 -> 3;\n  3 -> 1;\n}\n");
  CHECK(to_dot(diagram_of(a3())) == to_dot(diagram_of(a3())));
}

TEST_CASE("sign changes preserve cycle parities", "[diagram][property]") {
  // Each flipped vertex meets a cycle in zero or two edges, so the parity of
  // positive edges on every cycle is unchanged. On acyclic diagrams this
  // makes admissibility invariant.
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const ExchangeMatrix b = random_exchange(rng, 3 + trial % 3, 2);
    SignAssignment sigma;
    std::bernoulli_distribution coin(0.5);
    const Diagram g = diagram_of(b);
    for (const Edge& e : g.edges()) sigma.signs[unordered(e.source, e.target)] = coin(rng) ? 1 : -1;
    const Companion a = companion_from_signs(b, sigma);
    std::vector<std::size_t> flip;
    for (std::size_t i = 0; i < b.size(); ++i)
      if (coin(rng)) flip.push_back(i);
    const Companion a2 = sign_change(a, flip);
    const EdgeCut c1 = positive_edges(b, a), c2 = positive_edges(b, a2);
    for (const Cycle& c : enumerate_cycles(g)) REQUIRE(count_in_cut(c, c1) % 2 == count_in_cut(c, c2) % 2);
    if (is_acyclic(g))
      REQUIRE(check_companion_conditions(b, a).admissible() == check_companion_conditions(b, a2).admissible());
  }
}

TEST_CASE("mutation changes only edges near k", "[diagram][property]") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 300; ++trial) {
    const ExchangeMatrix b = random_exchange(rng, 2 + trial % 5);
    const std::size_t k = trial % b.size();
    const Diagram before = diagram_of(b), after = diagram_of(mutate_matrix(b, k));
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (i == k || j == k || (before.adjacent(i, k) && before.adjacent(k, j))) continue;
        REQUIRE(before.points(i, j) == after.points(i, j));
      }
  }
}

TEST_CASE("pairing companions satisfy every condition on reachable seeds", "[diagram][property]") {
  for (const auto& fx : acyclic_fixtures()) {
    const ExploreResult r = bfs_explore(fx.matrix, fx.matrix.size() <= 2 ? 8 : 5);
    const CartanMatrix a0 = cartan_from_acyclic(fx.matrix);
    for (const YSeed& s : r.seeds) {
      const Companion a = pairing_companion(s, a0);
      const ConditionReport rep = check_companion_conditions(s.matrix(), a);
      INFO(fx.name << " B=" << to_string(s.matrix().entries()) << " A=" << to_string(a.entries()) << " paths "
                   << rep.paths_ok << " oriented " << rep.oriented_cycles_ok << " nonoriented "
                   << rep.nonoriented_cycles_ok << " path " << (rep.path_witness ? rep.path_witness->size() : 0));
      REQUIRE(rep.all());
      REQUIRE(is_admissible_cut(diagram_of(s.matrix()), positive_edges(s.matrix(), a)));
    }
  }
}
