#include "laced/modmath.hpp"

#include <algorithm>
#include <string>

namespace laced {

bool is_prime(std::int64_t m) {
  if (m < 2) return false;
  if (m < 4) return true;
  if (m % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= m; d += 2) {
    if (m % d == 0) return false;
  }
  return true;
}

std::int64_t least_prime_geq(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("least_prime_geq: n must be >= 1");
  std::int64_t p = std::max<std::int64_t>(n, 2);
  while (!is_prime(p)) ++p;
  return p;
}

ShiftedResidue shifted_residue(std::int64_t v, int p) {
  if (p < 1) throw std::invalid_argument("shifted_residue: p must be >= 1");
  std::int64_t r = v % p;
  if (r <= 0) r += p;
  return ShiftedResidue{static_cast<int>(r)};
}

LacedParams::LacedParams(int n_, int p_) : n(n_), p(p_) {
  if (n < 1) throw std::invalid_argument("LacedParams: n must be >= 1");
  if (least_prime_geq(n) != p) {
    throw std::invalid_argument("LacedParams: p=" + std::to_string(p) +
                                " is not the least prime >= n=" + std::to_string(n));
  }
}

LacedParams LacedParams::for_n(int n) {
  if (n < 1) throw std::invalid_argument("LacedParams: n must be >= 1");
  return LacedParams(n, static_cast<int>(least_prime_geq(n)));
}

Bigint factorial(int k) {
  if (k < 0) throw std::invalid_argument("factorial: k must be >= 0");
  Bigint r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

Bigint falling_factorial(const Bigint& x, int k) {
  if (k < 0) throw std::invalid_argument("falling_factorial: k must be >= 0");
  Bigint r = 1;
  for (int j = 0; j < k; ++j) r *= x - j;
  return r;
}

double falling_factorial(double x, int k) {
  if (k < 0) throw std::invalid_argument("falling_factorial: k must be >= 0");
  double r = 1.0;
  for (int j = 0; j < k; ++j) r *= x - j;
  return r;
}

Bigint binomial(std::int64_t m, int k) {
  if (m < 0 || k < 0) throw std::invalid_argument("binomial: arguments must be >= 0");
  Bigint r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
  return r;
}

Rational generalized_binomial(const Bigint& x, int k) {
  Rational r(falling_factorial(Bigint(x + k - 1), k), factorial(k));
  r.canonicalize();
  return r;
}

double generalized_binomial(double x, int k) {
  return falling_factorial(x + k - 1, k) / factorial(k).get_d();
}

}  // namespace laced
