#include <catch2/catch_amalgamated.hpp>

#include <limits>
#include <random>

#include "fixtures.hpp"
#include "mutlab/mutation.hpp"
#include "oracles.hpp"

using namespace mutlab;
using namespace mutlab::testing;

namespace {

std::vector<Int> e(std::initializer_list<Int> v) { return v; }

YSeed random_reachable_seed(std::mt19937_64& rng, const ExchangeMatrix& b, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), letter(0, b.size() - 1);
  YSeed s = initial_seed(b);
  for (std::size_t t = len(rng); t > 0; --t) s = mutate_seed(s, letter(rng));
  return s;
}

}  // namespace

TEST_CASE("mutate_matrix examples", "[mutation]") {
  CHECK(mutate_matrix(b2(), 0).entries() == IntMatrix{{0, -2}, {1, 0}});
  CHECK(mutate_matrix(a3(), 1).entries() == IntMatrix{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}});
  const ExchangeMatrix b(IntMatrix{{0, -1, 0}, {1, 0, 1}, {0, -1, 0}});
  CHECK(mutate_matrix(b, 1).entries() == IntMatrix{{0, 1, 0}, {-1, 0, -1}, {0, 1, 0}});
}

TEST_CASE("mutate_matrix rejects bad indices", "[mutation]") {
  CHECK_THROWS_AS(mutate_matrix(a3(), 3), IndexOutOfRange);
  CHECK_THROWS_AS(mutate_seed(initial_seed(a3()), 7), IndexOutOfRange);
  CHECK_THROWS_AS(MutationWord::from_one_based({1, 4}, 3), IndexOutOfRange);
  CHECK_THROWS_AS(MutationWord::from_one_based({0}, 3), IndexOutOfRange);
}

TEST_CASE("mutate_seed examples", "[mutation]") {
  const YSeed s1 = mutate_seed(initial_seed(a3()), 0);
  CHECK(s1.c(0).coords() == e({-1, 0, 0}));
  CHECK(s1.c(1).coords() == e({1, 1, 0}));
  CHECK(s1.c(2).coords() == e({0, 0, 1}));

  const YSeed s2 = mutate_seed(initial_seed(a3()), 1);
  CHECK(s2.c(0).coords() == e({1, 0, 0}));
  CHECK(s2.c(1).coords() == e({0, -1, 0}));
  CHECK(s2.c(2).coords() == e({0, 1, 1}));
  CHECK(s2.matrix().entries() == IntMatrix{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}});
}

TEST_CASE("apply_word examples", "[mutation]") {
  const YSeed s = initial_seed(a3());
  CHECK(apply_word(s, {}) == s);
  CHECK(apply_word(s, MutationWord::from_one_based({1, 1}, 3)) == s);
  const YSeed t = apply_word(s, MutationWord::from_one_based({1, 2}, 3));
  CHECK(t.c(0).coords() == e({0, 1, 0}));
  CHECK(t.c(1).coords() == e({-1, -1, 0}));
  CHECK(t.c(2).coords() == e({1, 1, 1}));
  CHECK(MutationWord::from_one_based({1, 2}, 3).to_one_based() == std::vector<Int>{1, 2});
}

TEST_CASE("B2 mutation at 1 gives c'_2 = e_2 + 2 e_1", "[mutation]") {
  const YSeed s = mutate_seed(initial_seed(b2()), 0);
  CHECK(s.c(0).coords() == e({-1, 0}));
  CHECK(s.c(1).coords() == e({2, 1}));
}

TEST_CASE("mutate_matrix matches the matrix-product formula for both signs", "[mutation][property]") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 500; ++trial) {
    const ExchangeMatrix b = random_exchange(rng, 2 + trial % 5);
    const std::size_t k = trial % b.size();
    const auto expected_plus = product_mutation(b.entries().rows(), k, 1);
    const auto expected_minus = product_mutation(b.entries().rows(), k, -1);
    const auto got = mutate_matrix(b, k).entries().rows();
    REQUIRE(got == expected_plus);
    REQUIRE(got == expected_minus);
  }
}

TEST_CASE("c-vector mutation matches the principal-coefficient extended matrix", "[mutation][property]") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 400; ++trial) {
    const ExchangeMatrix b = random_exchange(rng, 2 + trial % 4);
    const YSeed s = random_reachable_seed(rng, b, 5);
    const std::size_t k = trial % b.size();
    std::vector<std::vector<Int>> c_rows;
    for (const auto& c : s.cvectors()) c_rows.push_back(c.coords());
    const auto expected = extended_cvector_mutation(s.matrix().entries().rows(), c_rows, k);
    const YSeed m = mutate_seed(s, k);
    for (std::size_t i = 0; i < b.size(); ++i) REQUIRE(m.c(i).coords() == expected[i]);
  }
}

TEST_CASE("seed mutation is an involution and keeps D", "[mutation][property]") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 500; ++trial) {
    const ExchangeMatrix b = random_exchange(rng, 1 + trial % 6);
    const YSeed s = random_reachable_seed(rng, b, 6);
    const std::size_t k = trial % b.size();
    const YSeed once = mutate_seed(s, k);
    REQUIRE(once.matrix().symmetrizer() == s.matrix().symmetrizer());
    REQUIRE(find_symmetrizer(once.matrix().entries()) == s.matrix().symmetrizer());
    REQUIRE(once.matrix() == mutate_matrix(s.matrix(), k));
    REQUIRE(mutate_seed(once, k) == s);
  }
}

TEST_CASE("sign coherence survives random words", "[mutation][property]") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    const ExchangeMatrix b = random_exchange(rng, 2 + trial % 4, 2);
    // construction would throw on a mixed vector; reaching the end is the check
    const YSeed s = random_reachable_seed(rng, b, 10);
    for (const auto& c : s.cvectors()) REQUIRE(is_sign_coherent(c.coords()));
  }
}

TEST_CASE("mutation reports overflow instead of wrapping", "[mutation]") {
  constexpr Int big = std::numeric_limits<Int>::max() / 2;
  const ExchangeMatrix b(IntMatrix{{0, big, 0}, {-big, 0, big}, {0, -big, 0}});
  CHECK_THROWS_AS(mutate_matrix(b, 1), OverflowError);
}

TEST_CASE("mixed-sign input c-vectors cannot form a seed", "[mutation]") {
  CHECK_THROWS_AS(YSeed({CVector({1, -1}), CVector({0, 1})}, a2()), SignCoherenceViolation);
}
