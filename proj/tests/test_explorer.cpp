#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "mutlab/explorer.hpp"

using namespace mutlab;
using namespace mutlab::testing;

TEST_CASE("verify_step on a single A3 mutation", "[explorer]") {
  const CartanMatrix a0 = cartan_from_acyclic(a3());
  const StepOutcome out = verify_step(initial_seed(a3()), 1, a0);
  CHECK(out.record.passed());
  CHECK(out.record.k == 1);
  CHECK(out.record.results.size() == std::size(kAllChecks));
  CHECK(out.record.failures.empty());
  REQUIRE(out.next.has_value());
  CHECK(out.next->matrix() == triangle());
}

TEST_CASE("verify_step records failures instead of throwing", "[explorer]") {
  // a Cartan matrix that does not belong to the seed's initial matrix
  const CartanMatrix wrong(IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}, {1, 1, 1});
  const StepOutcome out = verify_step(initial_seed(a3()), 0, wrong);
  CHECK_FALSE(out.record.passed());
  CHECK(out.record.results.at(Check::sign_coherence));
  CHECK_FALSE(out.record.results.at(Check::companion_match));
  REQUIRE_FALSE(out.record.failures.empty());
  CHECK(out.next.has_value());

  const StepOutcome bad_index = verify_step(initial_seed(a3()), 5, cartan_from_acyclic(a3()));
  CHECK_FALSE(bad_index.next.has_value());
  CHECK_FALSE(bad_index.record.passed());
  CHECK(bad_index.record.failures.size() == std::size(kAllChecks));
}

TEST_CASE("verify_step hand examples", "[explorer]") {
  const StepOutcome b = verify_step(initial_seed(b2()), 0, cartan_from_acyclic(b2()));
  CHECK(b.record.passed());
  REQUIRE(b.next.has_value());
  CHECK(b.next->c(1).coords() == std::vector<Int>{2, 1});

  const CartanMatrix a0 = cartan_from_acyclic(a3());
  const StepOutcome once = verify_step(initial_seed(a3()), 0, a0);
  REQUIRE(once.next.has_value());
  const StepOutcome twice = verify_step(*once.next, 0, a0);
  CHECK(twice.record.passed());
  CHECK(*twice.next == initial_seed(a3()));
}

TEST_CASE("failed steps keep their witnesses", "[explorer]") {
  // edge {2,3} doubled: s_{e2}(e3) = e3 + 2 e2, but the seed gets c'_3 = e2 + e3
  const CartanMatrix wrong(IntMatrix{{2, -1, 0}, {-1, 2, -2}, {0, -2, 2}}, {1, 1, 1});
  const StepOutcome out = verify_step(initial_seed(a3()), 1, wrong);
  CHECK_FALSE(out.record.results.at(Check::reflection));
  CHECK_FALSE(out.record.results.at(Check::length));
  bool has_vector = false;
  for (const Witness& w : out.record.failures) has_vector = has_vector || w.vector.has_value();
  CHECK(has_vector);
}

TEST_CASE("check names", "[explorer]") {
  CHECK(std::string(check_name(Check::sign_coherence)) == "sign_coherence");
  CHECK(std::string(check_name(Check::length)) == "length");
}

TEST_CASE("verify_word", "[explorer]") {
  const WalkReport r = verify_word(b2(), MutationWord::from_one_based({1, 2, 1, 2, 1, 2}, 2));
  CHECK(r.verdict());
  CHECK(r.records.size() == 6);
  CHECK(r.initial_id == "B0");
  CHECK_THROWS_AS(verify_word(triangle(), MutationWord::from_one_based({1}, 3)), NotAcyclic);
}

TEST_CASE("random walks are reproducible and avoid immediate repeats", "[explorer]") {
  const auto first = random_walks(a3(), 12, 20, 99);
  const auto second = random_walks(a3(), 12, 20, 99);
  REQUIRE(first.size() == 20);
  for (std::size_t t = 0; t < first.size(); ++t) {
    CHECK(first[t].word.letters == second[t].word.letters);
    CHECK(first[t].word.letters.size() == 12);
    for (std::size_t i = 1; i < 12; ++i) CHECK(first[t].word.letters[i] != first[t].word.letters[i - 1]);
    CHECK(first[t].verdict());
  }
  const auto other = random_walks(a3(), 12, 20, 100);
  bool differs = false;
  for (std::size_t t = 0; t < 20; ++t) differs = differs || other[t].word.letters != first[t].word.letters;
  CHECK(differs);
  CHECK_THROWS_AS(random_walks(a3(), 0, 1, 1), ValidationError);
  const auto single = random_walks(b2(), 1, 1, 1);
  REQUIRE(single.size() == 1);
  CHECK(single[0].records.size() == 1);
  for (const WalkReport& r : random_walks(a3(), 8, 100, 1)) CHECK(r.verdict());
  CHECK_THROWS_AS(random_walks(triangle(), 3, 1, 1), NotAcyclic);
}

TEST_CASE("walks on every acyclic fixture pass every check", "[explorer][property]") {
  for (const auto& fx : acyclic_fixtures()) {
    for (const WalkReport& r : random_walks(fx.matrix, 10, 30, 5)) {
      INFO(fx.name);
      for (const StepRecord& rec : r.records)
        for (const Witness& w : rec.failures) INFO(check_name(w.check) << ": " << w.message);
      REQUIRE(r.verdict());
    }
  }
}

TEST_CASE("bfs_explore on rank two finite types", "[explorer]") {
  const ExploreResult a = bfs_explore(a2(), 10, {100'000, true});
  CHECK(a.seeds.size() == 10);
  CHECK(a.permutation_classes == 5u);
  CHECK(a.level_sizes.size() == 11);
  CHECK(a.level_sizes[0] == 1);
  CHECK(a.cvector_counts.size() == 6);

  // D = (1,2) tells the two indices apart, so no relabelled copies
  const ExploreResult b = bfs_explore(b2(), 12);
  CHECK(b.seeds.size() == 6);
  CHECK(b.cvector_counts.size() == 8);
  CHECK(bfs_explore(g2(), 12).seeds.size() == 8);
}

TEST_CASE("bfs_explore c-vectors lie in the reflection closure", "[explorer][property]") {
  for (const auto& fx : acyclic_fixtures()) {
    if (fx.name == "square4") continue;  // affine: no finite closure to compare against
    const auto roots = real_roots_up_to_height(cartan_from_acyclic(fx.matrix), 64);
    const ExploreResult r = bfs_explore(fx.matrix, 6);
    for (const auto& [c, count] : r.cvector_counts) {
      INFO(fx.name << " " << to_string(c));
      REQUIRE(roots.count(RootVector(c)) == 1);
    }
  }
}

TEST_CASE("bfs_explore at depth zero", "[explorer]") {
  const ExploreResult r = bfs_explore(b4(), 0);
  CHECK(r.seeds.size() == 1);
  CHECK(*r.seeds.begin() == initial_seed(b4()));
  CHECK(r.level_sizes == std::vector<std::size_t>{1});
}

TEST_CASE("bfs_explore budget", "[explorer]") {
  CHECK_THROWS_AS(bfs_explore(affine_a11(), 50, {20, false}), FrontierBudgetExceeded);
  CHECK_NOTHROW(bfs_explore(affine_a11(), 5, {20, false}));
}
