#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "laced/brute_oracle.hpp"
#include "laced/counting_dp.hpp"
#include "laced/random_util.hpp"

using namespace laced;

TEST_CASE("residue multiset validation") {
  CHECK_THROWS_AS(ResidueMultiset(6, {1}), std::invalid_argument);   // 6 not prime
  CHECK_THROWS_AS(ResidueMultiset(5, {5}), std::invalid_argument);   // outside [0, p-1]
  CHECK_THROWS_AS(ResidueMultiset(5, {-1}), std::invalid_argument);
  CHECK(ResidueMultiset(5, {0, 1, 2}).duplicate_free());
  CHECK(!ResidueMultiset(5, {1, 1}).duplicate_free());
  CHECK(ResidueMultiset::full(5).size() == 5);
  CHECK(ResidueMultiset::complement(7, {0, 3}).elements == std::vector<int>{1, 2, 4, 5, 6});
}

TEST_CASE("all-sizes subset-sum table") {
  const SumCountTable t = count_subsets_mod_p(ResidueMultiset(3, {1, 2}));
  CHECK(t.counts == std::vector<Bigint>{2, 1, 1});

  const SumCountTable empty = count_subsets_mod_p(ResidueMultiset(5, {}));
  CHECK(empty.at(0) == 1);
  CHECK(empty.at(1) == 0);
  CHECK(empty.at(-4) == 0);
  CHECK(empty.at(5) == 1);  // index reduction

  CHECK(count_subsets_mod_p(ResidueMultiset(5, {1, 2, 3, 4})).at(0) == 4);
}

TEST_CASE("size-k subset-sum table") {
  const ResidueMultiset d(5, {1, 2, 3, 4});
  CHECK(count_k_subsets_mod_p(d, 2).at(0) == 2);

  const SumCountTable k0 = count_k_subsets_mod_p(d, 0);
  CHECK(k0.at(0) == 1);
  CHECK(k0.total() == 1);

  const SumCountTable kfull = count_k_subsets_mod_p(d, 4);
  CHECK(kfull.at(1 + 2 + 3 + 4) == 1);
  CHECK(kfull.total() == 1);

  CHECK(count_k_subsets_mod_p(d, 5).total() == 0);  // k > |D|: zero table, not an error
  CHECK_THROWS_AS(count_k_subsets_mod_p(d, -1), std::invalid_argument);
}

TEST_CASE("size slices partition the all-sizes table") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const int p = 7;
    const int size = 1 + static_cast<int>(bounded_uniform(rng, 9));
    std::vector<int> elems(size);
    for (int& e : elems) e = static_cast<int>(bounded_uniform(rng, p));
    const ResidueMultiset d(p, elems);
    const SumCountTable all = count_subsets_mod_p(d);
    std::vector<Bigint> summed(p);
    for (int k = 0; k <= size; ++k) {
      const SumCountTable slice = count_k_subsets_mod_p(d, k);
      for (int b = 0; b < p; ++b) summed[b] += slice.at(b);
      CHECK(slice.total() == binomial(size, k));
    }
    for (int b = 0; b < p; ++b) CHECK(summed[b] == all.at(b));
    CHECK(all.total() == Bigint(1) << size);
  }
}

TEST_CASE("DP agrees with subset enumeration") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int p = (trial % 3 == 0) ? 5 : ((trial % 3 == 1) ? 11 : 13);
    const int size = 1 + static_cast<int>(bounded_uniform(rng, 16));
    std::vector<int> elems(size);
    for (int& e : elems) e = static_cast<int>(bounded_uniform(rng, p));
    const ResidueMultiset d(p, elems);
    const SumCountTable all = count_subsets_mod_p(d);
    for (int b = 0; b < p; ++b) CHECK(all.at(b) == brute_count_subsets(d, b));
  }
}

TEST_CASE("k! times the size slice counts ordered distinct tuples") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const int p = 13;
    const int size = 1 + static_cast<int>(bounded_uniform(rng, 12));
    const int k = 1 + static_cast<int>(bounded_uniform(rng, 5));
    const ResidueMultiset d(p, sample_distinct_residues(rng, p, size));
    const SumCountTable slice = count_k_subsets_mod_p(d, k);
    for (int b = 0; b < p; ++b) {
      CHECK(factorial(k) * slice.at(b) == brute_count_distinct_tuples(d, b, k));
    }
  }
}

TEST_CASE("laced weight multiset") {
  const LacedParams n4 = LacedParams::for_n(4);
  CHECK(laced_weight_multiset(n4, {1}).elements == std::vector<int>{2, 3, 4});
  CHECK(laced_weight_multiset(n4, {2, 4}).elements == std::vector<int>{1, 3});
  const LacedParams n5 = LacedParams::for_n(5);
  CHECK(laced_weight_multiset(n5, {}).elements == std::vector<int>{1, 2, 3, 4, 0});
  CHECK_THROWS_AS(laced_weight_multiset(n4, {5}), std::invalid_argument);
  CHECK_THROWS_AS(laced_weight_multiset(n4, {0}), std::invalid_argument);
}

TEST_CASE("full weight set is nearly equidistributed") {
  // max_b |counts[b] - 2^n/p| / (2^n/p), compared exactly in rationals.
  auto max_relative_deviation = [](int n) {
    const LacedParams params = LacedParams::for_n(n);
    const SumCountTable t = count_subsets_mod_p(laced_weight_multiset(params, {}));
    const Rational mean(Bigint(1) << n, params.p);
    Rational worst(0);
    for (int b = 0; b < params.p; ++b) {
      Rational dev = Rational(t.at(b)) - mean;
      if (dev < 0) dev = -dev;
      dev /= mean;
      dev.canonicalize();
      if (dev > worst) worst = dev;
    }
    return worst;
  };
  const Rational bound(1, 100);
  const Rational w32 = max_relative_deviation(32);
  const Rational w48 = max_relative_deviation(48);
  const Rational w64 = max_relative_deviation(64);
  CHECK(w32 <= bound);
  CHECK(w48 <= bound);
  CHECK(w64 <= bound);
  // and the deviation shrinks as n grows
  CHECK(w64 <= w32);
  MESSAGE("deviation n=32: ", w32.get_d(), "  n=48: ", w48.get_d(), "  n=64: ", w64.get_d());
}
