#pragma once

#include <cstdint>

#include "laced/common.hpp"

namespace laced {

// Deterministic trial division; intended for the moduli this library works
// with (p stays below ~10^5), not for cryptographic sizes.
bool is_prime(std::int64_t m);

// Smallest prime p with p >= n. Rejects n < 1.
std::int64_t least_prime_geq(std::int64_t n);

// Canonical representative of a residue class in [1, p]: residue 0 prints
// as p. Residue sets elsewhere use the standard [0, p-1] convention; every
// interface states which one it takes.
struct ShiftedResidue {
  int value = 1;
};

// Unique r in [1, p] with r == v (mod p). Accepts any integer v.
ShiftedResidue shifted_residue(std::int64_t v, int p);

// One instance of the weighted-sum function: n variables, p the least prime
// that is >= n. The constructor enforces all three facts about p.
struct LacedParams {
  int n;
  int p;

  LacedParams(int n, int p);
  static LacedParams for_n(int n);
};

Bigint factorial(int k);

// (x)_k = x (x-1) ... (x-k+1); empty product for k = 0.
Bigint falling_factorial(const Bigint& x, int k);
double falling_factorial(double x, int k);

// Exact binomial coefficient, 0 when m < k.
Bigint binomial(std::int64_t m, int k);

// (x+k-1)_k / k!. For integer x >= 1 this is the binomial coefficient of
// x+k-1 over k; the double overload exists because bound right-hand sides
// plug in a real-valued bias.
Rational generalized_binomial(const Bigint& x, int k);
double generalized_binomial(double x, int k);

}  // namespace laced
