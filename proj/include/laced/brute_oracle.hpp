#pragma once

#include <optional>

#include "laced/counting_dp.hpp"
#include "laced/laced_core.hpp"

namespace laced {

// Exact sensitivity totals. total_flips counts every ordered pair (X, i)
// with f(X) != f(X^(i)), so it is even: each differing hypercube edge is
// seen once per direction.
struct SensitivityReport {
  Bigint total_flips;
  int n = 0;
  Rational average;            // total_flips / 2^n, exact
  std::optional<int> maximum;  // max over X; filled by enumeration only
};

// Enumeration stays feasible up to ~2^24 evaluations; larger n must go
// through the counting decompositions instead.
inline constexpr int default_enumeration_limit = 24;

Bigint brute_weight(const LacedParams& params, int limit = default_enumeration_limit);
int brute_sensitivity_at(const LacedParams& params, const InputVector& x);
int brute_max_sensitivity(const LacedParams& params, int limit = default_enumeration_limit);
SensitivityReport brute_avg_sensitivity(const LacedParams& params,
                                        int limit = default_enumeration_limit);

// Number of position-subsets of D summing to b mod p, restricted to size k
// when k is given.
Bigint brute_count_subsets(const ResidueMultiset& d, int b, std::optional<int> k = std::nullopt,
                           int limit = default_enumeration_limit);

// Number of ordered k-tuples of pairwise-distinct elements of D summing to
// b mod p. D must be duplicate-free (value distinctness is ill-posed
// otherwise).
Bigint brute_count_distinct_tuples(const ResidueMultiset& d, int b, int k,
                                   int limit = default_enumeration_limit);

}  // namespace laced
