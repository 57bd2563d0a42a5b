#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "laced/brute_oracle.hpp"
#include "laced/random_util.hpp"
#include "laced/sieve.hpp"

using namespace laced;

namespace {

// Independent partition-count oracle (coin-change recurrence).
long long partition_count(int k) {
  std::vector<long long> ways(k + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= k; ++part) {
    for (int v = part; v <= k; ++v) ways[v] += ways[v - part];
  }
  return ways[k];
}

}  // namespace

TEST_CASE("permutation type invariants") {
  const PermutationType transposition_and_fixed(3, {1, 1, 0});
  CHECK(transposition_and_fixed.length() == 2);
  CHECK(transposition_and_fixed.sign() == -1);
  CHECK(transposition_and_fixed.class_size() == 3);

  CHECK_THROWS_AS(PermutationType(3, {1, 1, 1}), std::invalid_argument);  // sums to 6
  CHECK_THROWS_AS(PermutationType(3, {1, 1}), std::invalid_argument);     // wrong arity
  CHECK_THROWS_AS(PermutationType(0, {}), std::invalid_argument);
}

TEST_CASE("type enumeration covers every partition once, largest parts first") {
  const auto t3 = enumerate_types(3);
  REQUIRE(t3.size() == 3);
  CHECK(t3[0].cycle_counts == std::vector<int>{0, 0, 1});  // 3-cycle
  CHECK(t3[1].cycle_counts == std::vector<int>{1, 1, 0});  // transposition
  CHECK(t3[2].cycle_counts == std::vector<int>{3, 0, 0});  // identity

  CHECK(enumerate_types(1).size() == 1);
  CHECK(enumerate_types(5).size() == 7);
  for (int k = 1; k <= 14; ++k) {
    CHECK(static_cast<long long>(enumerate_types(k).size()) == partition_count(k));
  }
  CHECK_THROWS_AS(enumerate_types(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_types(max_sieve_k + 1), std::invalid_argument);
}

TEST_CASE("class sizes for k = 3 and their sum") {
  CHECK(type_count(PermutationType(3, {3, 0, 0})) == 1);
  CHECK(type_count(PermutationType(3, {1, 1, 0})) == 3);
  CHECK(type_count(PermutationType(3, {0, 0, 1})) == 2);
  for (int k = 1; k <= 12; ++k) {
    Bigint sum = 0;
    for (const PermutationType& t : enumerate_types(k)) sum += type_count(t);
    CHECK(sum == factorial(k));
  }
}

TEST_CASE("cycle index identity") {
  CHECK(cycle_index_identity(3, Bigint(1)) == std::pair{Bigint(6), Bigint(6)});
  CHECK(cycle_index_identity(3, Bigint(2)) == std::pair{Bigint(24), Bigint(24)});
  CHECK(cycle_index_identity(1, Bigint(5)) == std::pair{Bigint(5), Bigint(5)});
  for (int k = 1; k <= 12; ++k) {
    for (int q = 0; q <= 10; ++q) {
      const auto [lhs, rhs] = cycle_index_identity(k, Bigint(q));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("type-restricted counts by convolution") {
  const ResidueMultiset d(5, {1, 2, 3, 4});
  CHECK(type_restricted_count(PermutationType(2, {2, 0}), d, 0) == 4);
  CHECK(type_restricted_count(PermutationType(2, {0, 1}), d, 0) == 0);  // 2y = 0 unsolvable in D
  CHECK(type_restricted_count(PermutationType(2, {0, 1}), d, 2) == 1);  // 2y = 2 -> y = 1
  const ResidueMultiset empty(5, {});
  CHECK(type_restricted_count(PermutationType(3, {3, 0, 0}), empty, 0) == 0);
  CHECK_THROWS_AS(type_restricted_count(PermutationType(1, {1}), ResidueMultiset(5, {2, 2}), 0),
                  std::invalid_argument);
}

TEST_CASE("sieve on the worked 2-tuple example") {
  const ResidueMultiset d(5, {1, 2, 3, 4});
  CHECK(sieve_distinct_count(d, 0, 2) == 4);
  CHECK(sieve_distinct_count(d, 2, 1) == 1);
  CHECK(sieve_distinct_count(d, 0, 1) == 0);
}

TEST_CASE("sieve cancels to zero when k exceeds |D|") {
  const ResidueMultiset d(7, {1, 3, 4});
  for (int k = 4; k <= 6; ++k) {
    for (int b = 0; b < 7; ++b) CHECK(sieve_distinct_count(d, b, k) == 0);
  }
}

TEST_CASE("three-way agreement on random sets") {
  std::mt19937_64 rng(101);
  const int primes[] = {5, 7, 11, 13};
  for (int trial = 0; trial < 40; ++trial) {
    const int p = primes[bounded_uniform(rng, 4)];
    const int size = 1 + static_cast<int>(bounded_uniform(rng, std::min(8, p)));
    const int k = 1 + static_cast<int>(bounded_uniform(rng, 5));
    const ResidueMultiset d(p, sample_distinct_residues(rng, p, size));
    const SumCountTable dp = count_k_subsets_mod_p(d, k);
    for (int b = 0; b < p; ++b) {
      const Bigint via_sieve = sieve_distinct_count(d, b, k);
      CHECK(via_sieve == brute_count_distinct_tuples(d, b, k));
      CHECK(via_sieve == factorial(k) * dp.at(b));
    }
  }
}

TEST_CASE("sieve counts partition the falling factorial") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 12; ++trial) {
    const int p = 11;
    const int size = 1 + static_cast<int>(bounded_uniform(rng, 8));
    const int k = 1 + static_cast<int>(bounded_uniform(rng, 4));
    const ResidueMultiset d(p, sample_distinct_residues(rng, p, size));
    Bigint sum = 0;
    for (int b = 0; b < p; ++b) sum += sieve_distinct_count(d, b, k);
    CHECK(sum == falling_factorial(Bigint(size), k));
  }
}

TEST_CASE("character power sums") {
  const ResidueMultiset full = ResidueMultiset::full(7);
  CHECK(std::abs(power_sum(full, CharacterIndex{3, 7}, 1)) < tol::character_sum_abs);
  CHECK(power_sum(full, CharacterIndex{0, 7}, 1).real() == doctest::Approx(7.0));

  const ResidueMultiset d(5, {1, 2, 3, 4});
  const auto s = power_sum(d, CharacterIndex{1, 5}, 1);
  CHECK(std::abs(s - std::complex<double>(-1.0, 0.0)) < tol::character_sum_abs);
  CHECK_THROWS_AS(power_sum(d, CharacterIndex{5, 5}, 1), std::invalid_argument);
  CHECK_THROWS_AS(power_sum(d, CharacterIndex{1, 7}, 1), std::invalid_argument);
}

TEST_CASE("fourier bias") {
  CHECK(fourier_bias(ResidueMultiset::full(5)).phi < tol::character_sum_abs);
  const BiasReport b = fourier_bias(ResidueMultiset(5, {1, 2, 3, 4}));
  CHECK(b.phi == doctest::Approx(1.0));
  CHECK(b.witness.t == 1);  // smallest witness on ties

  // bias of a singleton is 1 (a unit vector)
  CHECK(fourier_bias(ResidueMultiset(7, {3})).phi == doctest::Approx(1.0));
}

TEST_CASE("bias of a complement is at most the removed count") {
  std::mt19937_64 rng(77);
  const int primes[] = {11, 31, 61, 101};
  for (int trial = 0; trial < 24; ++trial) {
    const int p = primes[bounded_uniform(rng, 4)];
    const int c = 1 + static_cast<int>(bounded_uniform(rng, 10));
    const auto removed = sample_distinct_residues(rng, p, c);
    const ResidueMultiset d = ResidueMultiset::complement(p, removed);
    const double phi = fourier_bias(d).phi;
    CHECK(phi <= c + tol::character_sum_abs);
    CHECK(phi >= 0.0);
    CHECK(phi <= d.size() + tol::character_sum_abs);
  }
}

TEST_CASE("character expansion reproduces the exact sieve") {
  const ResidueMultiset d(5, {1, 2, 3, 4});
  CHECK(character_sieve_count(d, 0, 2) == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(character_sieve_count(d, 2, 1) == doctest::Approx(1.0).epsilon(1e-9));

  // full set: every count is exactly k! * (k-subsets of Z_p summing to b)
  const ResidueMultiset full = ResidueMultiset::full(7);
  for (int k = 1; k <= 4; ++k) {
    const SumCountTable dp = count_k_subsets_mod_p(full, k);
    for (int b = 0; b < 7; ++b) {
      const double approx = character_sieve_count(full, b, k);
      const double exact = Bigint(factorial(k) * dp.at(b)).get_d();
      CHECK(std::abs(approx - exact) < 0.5);
    }
  }

  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 20; ++trial) {
    const int p = (trial % 2) ? 11 : 13;
    const int size = 1 + static_cast<int>(bounded_uniform(rng, 8));
    const int k = 1 + static_cast<int>(bounded_uniform(rng, 5));
    const ResidueMultiset d2(p, sample_distinct_residues(rng, p, size));
    for (int b = 0; b < p; ++b) {
      const double approx = character_sieve_count(d2, b, k);
      const double exact = sieve_distinct_count(d2, b, k).get_d();
      CHECK(std::abs(approx - exact) < 0.5);
    }
  }

  // largest working prime: the rounding margin must survive p = 101, k = 6
  std::mt19937_64 rng_big(404);
  for (int trial = 0; trial < 3; ++trial) {
    const int size = 6 + static_cast<int>(bounded_uniform(rng_big, 20));
    const ResidueMultiset big(101, sample_distinct_residues(rng_big, 101, size));
    for (int k = 1; k <= 6; ++k) {
      for (int b : {0, 17, 100}) {
        const double approx = character_sieve_count(big, b, k);
        const double exact = sieve_distinct_count(big, b, k).get_d();
        CHECK(std::abs(approx - exact) < 0.5);
      }
    }
  }
}

TEST_CASE("bias lower bound on the worked example") {
  const ResidueMultiset d(5, {1, 2, 3, 4});
  const BoundReport r = distinct_sum_lower_bound(d, 0, 2);
  CHECK(r.exact_over_kfact == Rational(2));
  CHECK(r.rhs == doctest::Approx(0.2));
  CHECK(r.phi == doctest::Approx(1.0));
  CHECK(r.holds);

  // k = 1: exact is 0/1, rhs = n/p - phi
  for (int b = 0; b < 5; ++b) {
    const BoundReport r1 = distinct_sum_lower_bound(d, b, 1);
    CHECK((r1.exact_over_kfact == 0 || r1.exact_over_kfact == 1));
    CHECK(r1.rhs == doctest::Approx(4.0 / 5.0 - 1.0));
    CHECK(r1.holds);
  }

  // full set: phi = 0, rhs = binom(p, k)/p
  const BoundReport rf = distinct_sum_lower_bound(ResidueMultiset::full(7), 3, 3);
  CHECK(rf.rhs == doctest::Approx(5.0));
  CHECK(rf.holds);
}

TEST_CASE("bias bound holds across random sets with k < p") {
  std::mt19937_64 rng(303);
  const int primes[] = {5, 7, 11, 13, 31, 101};
  for (int trial = 0; trial < 40; ++trial) {
    const int p = primes[bounded_uniform(rng, 6)];
    const int size = 1 + static_cast<int>(bounded_uniform(rng, std::min(10, p)));
    const int k = 1 + static_cast<int>(bounded_uniform(rng, std::min(6, p - 1)));
    const ResidueMultiset d(p, sample_distinct_residues(rng, p, size));
    for (int b = 0; b < p; ++b) {
      CHECK(distinct_sum_lower_bound(d, b, k).holds);
    }
  }
}

TEST_CASE("bias bound needs k < p: the k = p edge is outside its range") {
  // For k = p a nontrivial character has trivial k-th power, so the bias no
  // longer bounds every factor and the literal formula can overshoot: the
  // only 5-subset of Z_5 sums to 0, yet the formula demands 1/5 per residue.
  const ResidueMultiset d = ResidueMultiset::full(5);
  const BoundReport hit = distinct_sum_lower_bound(d, 0, 5);
  CHECK(hit.exact_over_kfact == 1);
  CHECK(hit.holds);
  const BoundReport miss = distinct_sum_lower_bound(d, 1, 5);
  CHECK(miss.exact_over_kfact == 0);
  CHECK(miss.rhs == doctest::Approx(0.2));
  CHECK(!miss.holds);
}

TEST_CASE("closed-form complement bound") {
  CHECK(complement_bound(5, 1, 2) == Rational(1, 5));  // 6/5 - 1
  CHECK(complement_bound(7, 0, 3) == Rational(5));     // binom(7,3)/7
  CHECK(complement_bound(5, 1, 0) == Rational(-4, 5)); // degenerate k = 0, literal value
  CHECK_THROWS_AS(complement_bound(6, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(complement_bound(5, 5, 0), std::invalid_argument);
  CHECK_THROWS_AS(complement_bound(5, 1, 5), std::invalid_argument);

  // the closed form matches the bias bound's shape on an actual complement
  const ResidueMultiset d = ResidueMultiset::complement(11, {0, 5});
  const BoundReport r = distinct_sum_lower_bound(d, 4, 3);
  const Rational closed = complement_bound(11, 2, 3);
  CHECK(r.exact_over_kfact >= closed);
}

TEST_CASE("smoothness predicate") {
  const SmoothReport full = is_smooth(ResidueMultiset::full(13), 13);
  CHECK(full.smooth);
  CHECK(full.ratio == doctest::Approx(0.0));

  const SmoothReport single = is_smooth(ResidueMultiset(13, {4}), 13);
  CHECK(single.phi == doctest::Approx(1.0));
  CHECK(single.ratio == doctest::Approx(1.0 / std::sqrt(std::log(13.0))));

  // n = 32 gives p = 37, so the weight set is a proper subset with positive bias
  const LacedParams params = LacedParams::for_n(32);
  const SmoothReport derived =
      is_smooth(laced_weight_multiset(params, {}), params.p);
  CHECK(derived.ratio > 0.0);

  CHECK_THROWS_AS(is_smooth(ResidueMultiset(5, {}), 5), std::invalid_argument);
  CHECK_THROWS_AS(is_smooth(ResidueMultiset(5, {1, 2}), 1), std::invalid_argument);
}
