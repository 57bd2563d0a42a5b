#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "laced/counting_dp.hpp"

namespace laced {

// Cycle type of a permutation of k symbols: cycle_counts[i-1] = number of
// i-cycles (fixed points are 1-cycles). Determines the conjugacy class.
struct PermutationType {
  int k;
  std::vector<int> cycle_counts;

  PermutationType(int k, std::vector<int> cycle_counts);
  int length() const;  // number of cycles, fixed points included
  int sign() const;    // (-1)^(k - length)
  Bigint class_size() const;
};

// Practical ceiling for cycle-type enumeration; the partition count p(40)
// is ~37k and nothing here needs more.
inline constexpr int max_sieve_k = 40;

// All cycle types of k-permutations, one per integer partition of k, parts
// in decreasing order, partitions in decreasing lexicographic order.
std::vector<PermutationType> enumerate_types(int k);

// Conjugacy-class size k! / prod_i (i^{c_i} c_i!). Sums to k! over all types.
Bigint type_count(const PermutationType& t);

// Left side: sum over types of class_size * q^length. Right side:
// (q+k-1)_k. The two agree identically; both are returned for checking.
std::pair<Bigint, Bigint> cycle_index_identity(int k, const Bigint& q);

// Number of ways to assign one element of D to each cycle of the type so
// that sum_j (cycle_length_j * value_j) == b (mod p). Computed exactly by
// cyclic convolution over Z_p of the per-length count vectors
// u_i[r] = #{a in D : i*a == r}, convolved c_i times for each length i.
Bigint type_restricted_count(const PermutationType& t, const ResidueMultiset& d, int b);

// Exact number of ordered k-tuples of pairwise-distinct elements of D that
// sum to b mod p: the signed sum over cycle types of
// sign * class_size * type_restricted_count. The summand (an indicator of
// the tuple sum) is symmetric, so per-class collapsed counts are
// well-defined. Requires duplicate-free D and k >= 1; k > |D| cancels to
// zero.
Bigint sieve_distinct_count(const ResidueMultiset& d, int b, int k);

// Additive character chi_t(a) = exp(2*pi*i * t*a / p); t = 0 is trivial.
struct CharacterIndex {
  int t;
  int p;
};

// sum_{a in D} chi_t(a)^power, complex floating point.
std::complex<double> power_sum(const ResidueMultiset& d, const CharacterIndex& chi, int power);

// Fourier bias: the maximum absolute character sum over nontrivial t, with
// the witnessing character (smallest t on ties).
struct BiasReport {
  double phi;
  CharacterIndex witness;
};
BiasReport fourier_bias(const ResidueMultiset& d);

// Reassembles the distinct-tuple count through the full character expansion
// in complex floating point. The imaginary part must vanish up to tolerance
// (else a verification_error is thrown); the real part must round to
// sieve_distinct_count.
double character_sieve_count(const ResidueMultiset& d, int b, int k);

// Lower bound on N/k! from the Fourier bias:
//   N/k! >= (1/p) * binom(n, k) - generalized_binomial(phi, k),  n = |D|.
// Valid for k < p (for k >= p a nontrivial character can have a trivial
// k-th power and the bias no longer controls every factor). holds compares
// the exact count against rhs minus the shared float slack.
struct BoundReport {
  Rational exact_over_kfact;
  double rhs;
  double phi;
  bool holds;
};
BoundReport distinct_sum_lower_bound(const ResidueMultiset& d, int b, int k);

// Closed form of the same bound for D = Z_p minus c elements, where the
// bias is at most c:  (1/p) * binom(p-c, k) - binom(c+k-1, k), exact.
// k = 0 degenerates to 1/p - 1; returned literally.
Rational complement_bound(int p, int c, int k);

// Smoothness predicate: phi <= scale * sqrt(|D| * ln(ambient_size)),
// reported with the ratio phi / sqrt(|D| * ln(ambient_size)).
struct SmoothReport {
  bool smooth;
  double ratio;
  double phi;
};
SmoothReport is_smooth(const ResidueMultiset& d, std::int64_t ambient_size, double scale = 1.0);

}  // namespace laced
