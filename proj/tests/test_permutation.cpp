#include <catch2/catch_amalgamated.hpp>

#include "fillpair/permutation.hpp"
#include "test_support.hpp"

using namespace fillpair;

namespace {

Permutation cycle(int n, std::initializer_list<int> word) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i)
    images[i] = i;
  std::vector<int> w(word);
  for (size_t i = 0; i < w.size(); ++i)
    images[w[i]] = w[(i + 1) % w.size()];
  return Permutation(images);
}

} // namespace

TEST_CASE("permutation construction validates bijections") {
  REQUIRE_THROWS_AS(Permutation({0, 0, 2}), error);
  REQUIRE_THROWS_AS(Permutation({0, 3, 1}), error);
  REQUIRE_THROWS_AS(Permutation(std::vector<int>{}), error);
  REQUIRE(Permutation({1, 2, 0}).degree() == 3);
}

TEST_CASE("compose") {
  SECTION("identity absorbs") {
    const Permutation five = Permutation::rotation(5);
    REQUIRE(compose(Permutation::identity(5), five) == five);
  }
  SECTION("involution squared") {
    const Permutation swap = cycle(2, {0, 1});
    REQUIRE(compose(swap, swap) == Permutation::identity(2));
  }
  SECTION("three-cycle times its inverse") {
    REQUIRE(compose(cycle(3, {0, 1, 2}), cycle(3, {0, 2, 1})) ==
            Permutation::identity(3));
  }
  SECTION("degree mismatch") {
    REQUIRE_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)),
                      error);
  }
}

TEST_CASE("inverse composes to identity on random samples") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    const Permutation p = testing::random_permutation(n, rng);
    REQUIRE(compose(p, p.inverse()) == Permutation::identity(n));
    REQUIRE(compose(p.inverse(), p) == Permutation::identity(n));
  }
}

TEST_CASE("cycle decomposition is canonical") {
  const Permutation p({1, 0, 2, 4, 3});
  const auto dec = p.cycles();
  REQUIRE(dec.cycles == std::vector<std::vector<int>>{{0, 1}, {2}, {3, 4}});
  REQUIRE(p.cycle_count() == 3);
}

TEST_CASE("is_full_cycle") {
  REQUIRE(Permutation::rotation(5).is_full_cycle());
  REQUIRE_FALSE(Permutation::identity(3).is_full_cycle());
  REQUIRE(Permutation::identity(1).is_full_cycle());
}

TEST_CASE("commutator of commuting elements is trivial") {
  const Permutation three = cycle(3, {0, 1, 2});
  REQUIRE(commutator(three, three) == Permutation::identity(3));
  for (int n : {2, 5, 9}) {
    const Permutation c = Permutation::rotation(n);
    REQUIRE(commutator(c, c) == Permutation::identity(n));
  }
}

TEST_CASE("commutator cycle count is a simultaneous conjugacy invariant") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 12)(rng);
    const Permutation h = testing::random_permutation(n, rng);
    const Permutation v = testing::random_permutation(n, rng);
    const Permutation s = testing::random_permutation(n, rng);
    REQUIRE(commutator(conjugate(s, h), conjugate(s, v)).cycle_count() ==
            commutator(h, v).cycle_count());
  }
}

TEST_CASE("simultaneous conjugacy") {
  std::mt19937 rng(13);

  SECTION("identical pairs yield the identity witness") {
    const Permutation h = testing::random_full_cycle(8, rng);
    const Permutation v = testing::random_full_cycle(8, rng);
    const auto witness = simultaneous_conjugacy(h, v, h, v);
    REQUIRE(witness);
    REQUIRE(witness->is_identity());
  }

  SECTION("constructed conjugates are recovered") {
    for (int trial = 0; trial < 30; ++trial) {
      const int n = std::uniform_int_distribution<int>(2, 10)(rng);
      const Permutation h = testing::random_full_cycle(n, rng);
      const Permutation v = testing::random_full_cycle(n, rng);
      const Permutation s = testing::random_permutation(n, rng);
      const auto witness =
          simultaneous_conjugacy(h, v, conjugate(s, h), conjugate(s, v));
      REQUIRE(witness);
      REQUIRE(conjugate(*witness, h) == conjugate(s, h));
      REQUIRE(conjugate(*witness, v) == conjugate(s, v));
    }
  }

  SECTION("different cycle structures are rejected") {
    const Permutation h1 = Permutation::rotation(4);
    const Permutation v1 = Permutation::rotation(4);
    const Permutation h2 = Permutation({1, 0, 3, 2});
    REQUIRE_FALSE(simultaneous_conjugacy(h1, v1, h2, v1));
  }

  SECTION("intransitive pairs are handled") {
    const Permutation id = Permutation::identity(4);
    const auto witness = simultaneous_conjugacy(id, id, id, id);
    REQUIRE(witness);
    REQUIRE(witness->is_identity());
  }

  SECTION("degree mismatch throws") {
    REQUIRE_THROWS_AS(simultaneous_conjugacy(Permutation::identity(3),
                                             Permutation::identity(3),
                                             Permutation::identity(4),
                                             Permutation::identity(4)),
                      error);
  }
}

TEST_CASE("is_transitive") {
  REQUIRE(is_transitive(Permutation::rotation(6), Permutation::identity(6)));
  REQUIRE_FALSE(is_transitive(Permutation::identity(4), Permutation({1, 0, 3, 2})));
}
