#include "laced/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace laced {

PermutationType::PermutationType(int k_, std::vector<int> cycle_counts_)
    : k(k_), cycle_counts(std::move(cycle_counts_)) {
  if (k < 1) throw std::invalid_argument("PermutationType: k must be >= 1");
  if (static_cast<int>(cycle_counts.size()) != k) {
    throw std::invalid_argument("PermutationType: cycle_counts must have k entries");
  }
  long long weighted = 0;
  for (int i = 1; i <= k; ++i) {
    if (cycle_counts[i - 1] < 0) {
      throw std::invalid_argument("PermutationType: cycle counts must be >= 0");
    }
    weighted += static_cast<long long>(i) * cycle_counts[i - 1];
  }
  if (weighted != k) {
    throw std::invalid_argument("PermutationType: cycle lengths must sum to k");
  }
}

int PermutationType::length() const {
  int l = 0;
  for (int c : cycle_counts) l += c;
  return l;
}

int PermutationType::sign() const { return ((k - length()) % 2 == 0) ? 1 : -1; }

Bigint PermutationType::class_size() const {
  Bigint denom = 1;
  for (int i = 1; i <= k; ++i) {
    const int c = cycle_counts[i - 1];
    if (c == 0) continue;
    Bigint pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(c));
    denom *= pw * factorial(c);
  }
  Bigint num = factorial(k);
  if (!mpz_divisible_p(num.get_mpz_t(), denom.get_mpz_t())) {
    throw std::logic_error("PermutationType: class size formula did not divide exactly");
  }
  Bigint out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
  return out;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& parts,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(parts);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    parts.push_back(part);
    gen_partitions(remaining - part, part, parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<PermutationType> enumerate_types(int k) {
  if (k < 1) throw std::invalid_argument("enumerate_types: k must be >= 1");
  if (k > max_sieve_k) {
    throw std::invalid_argument("enumerate_types: k=" + std::to_string(k) + " exceeds the cap " +
                                std::to_string(max_sieve_k));
  }
  std::vector<std::vector<int>> partitions;
  std::vector<int> parts;
  gen_partitions(k, k, parts, partitions);
  std::vector<PermutationType> types;
  types.reserve(partitions.size());
  for (const auto& pa : partitions) {
    std::vector<int> counts(k, 0);
    for (int part : pa) ++counts[part - 1];
    types.emplace_back(k, std::move(counts));
  }
  return types;
}

Bigint type_count(const PermutationType& t) { return t.class_size(); }

std::pair<Bigint, Bigint> cycle_index_identity(int k, const Bigint& q) {
  if (q < 0) throw std::invalid_argument("cycle_index_identity: q must be >= 0");
  Bigint lhs = 0;
  for (const PermutationType& t : enumerate_types(k)) {
    Bigint pw;
    mpz_pow_ui(pw.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(t.length()));
    lhs += t.class_size() * pw;
  }
  Bigint rhs = falling_factorial(Bigint(q + k - 1), k);
  return {lhs, rhs};
}

namespace {

std::vector<Bigint> cyclic_convolve(const std::vector<Bigint>& a, const std::vector<Bigint>& b,
                                    int p) {
  std::vector<Bigint> out(p);
  for (int r1 = 0; r1 < p; ++r1) {
    if (a[r1] == 0) continue;
    for (int r2 = 0; r2 < p; ++r2) {
      if (b[r2] == 0) continue;
      int r = r1 + r2;
      if (r >= p) r -= p;
      out[r] += a[r1] * b[r2];
    }
  }
  return out;
}

}  // namespace

Bigint type_restricted_count(const PermutationType& t, const ResidueMultiset& d, int b) {
  if (!d.duplicate_free()) {
    throw std::invalid_argument("type_restricted_count: D must be duplicate-free");
  }
  const int p = d.p;
  std::vector<Bigint> acc(p);
  acc[0] = 1;
  for (int len = 1; len <= t.k; ++len) {
    const int c = t.cycle_counts[len - 1];
    if (c == 0) continue;
    std::vector<Bigint> u(p);
    for (int a : d.elements) {
      u[static_cast<int>((static_cast<std::int64_t>(len) * a) % p)] += 1;
    }
    for (int rep = 0; rep < c; ++rep) acc = cyclic_convolve(acc, u, p);
  }
  int r = b % p;
  if (r < 0) r += p;
  return acc[r];
}

Bigint sieve_distinct_count(const ResidueMultiset& d, int b, int k) {
  if (!d.duplicate_free()) {
    throw std::invalid_argument("sieve_distinct_count: D must be duplicate-free");
  }
  Bigint total = 0;
  for (const PermutationType& t : enumerate_types(k)) {
    Bigint term = t.class_size() * type_restricted_count(t, d, b);
    if (t.sign() < 0) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

std::complex<double> power_sum(const ResidueMultiset& d, const CharacterIndex& chi, int power) {
  if (chi.p != d.p) throw std::invalid_argument("power_sum: modulus mismatch");
  if (chi.t < 0 || chi.t >= chi.p) {
    throw std::invalid_argument("power_sum: character index outside [0, p-1]");
  }
  if (power < 0) throw std::invalid_argument("power_sum: power must be >= 0");
  const double step = 2.0 * std::numbers::pi / d.p;
  std::complex<double> sum{0.0, 0.0};
  for (int a : d.elements) {
    const std::int64_t e =
        (static_cast<std::int64_t>(chi.t) * power % d.p) * a % d.p;
    const double angle = step * static_cast<double>(e);
    sum += std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

BiasReport fourier_bias(const ResidueMultiset& d) {
  double best = 0.0;
  int best_t = 1;
  for (int t = 1; t < d.p; ++t) {
    const double mag = std::abs(power_sum(d, CharacterIndex{t, d.p}, 1));
    if (mag > best) {
      best = mag;
      best_t = t;
    }
  }
  return BiasReport{best, CharacterIndex{best_t, d.p}};
}

double character_sieve_count(const ResidueMultiset& d, int b, int k) {
  if (!d.duplicate_free()) {
    throw std::invalid_argument("character_sieve_count: D must be duplicate-free");
  }
  const int p = d.p;
  const auto types = enumerate_types(k);
  const double step = 2.0 * std::numbers::pi / p;

  // Power sums for every nontrivial character and cycle length up front.
  std::vector<std::vector<std::complex<double>>> ps(p);
  for (int t = 1; t < p; ++t) {
    ps[t].resize(k + 1);
    for (int i = 1; i <= k; ++i) ps[t][i] = power_sum(d, CharacterIndex{t, p}, i);
  }

  std::complex<double> nontrivial{0.0, 0.0};
  const int b_red = ((b % p) + p) % p;
  for (int t = 1; t < p; ++t) {
    std::complex<double> inner{0.0, 0.0};
    for (const PermutationType& ty : types) {
      std::complex<double> f{1.0, 0.0};
      for (int i = 1; i <= k; ++i) {
        for (int c = 0; c < ty.cycle_counts[i - 1]; ++c) f *= ps[t][i];
      }
      inner += static_cast<double>(ty.sign()) * ty.class_size().get_d() * f;
    }
    const double angle = -step * static_cast<double>(static_cast<std::int64_t>(t) * b_red % p);
    nontrivial += std::complex<double>(std::cos(angle), std::sin(angle)) * inner;
  }

  const double nk = falling_factorial(static_cast<double>(d.size()), k);
  const std::complex<double> total = (nk + nontrivial) / static_cast<double>(p);
  // Scale the vanishing-imaginary check by the count magnitude, floored at 1
  // so that k > |D| (where (n)_k = 0) is not an automatic fault.
  const double scale = std::max(1.0, std::abs(nk));
  if (std::abs(total.imag()) > tol::assembled_sum_rel * scale) {
    throw verification_error("character_sieve_count: imaginary residue " +
                             std::to_string(total.imag()) + " exceeds tolerance");
  }
  return total.real();
}

BoundReport distinct_sum_lower_bound(const ResidueMultiset& d, int b, int k) {
  if (!d.duplicate_free()) {
    throw std::invalid_argument("distinct_sum_lower_bound: D must be duplicate-free");
  }
  if (k < 0) throw std::invalid_argument("distinct_sum_lower_bound: k must be >= 0");
  const int n = d.size();
  const BiasReport bias = fourier_bias(d);

  // N/k! equals the number of size-k position-subsets when D is duplicate-free.
  Rational exact(count_k_subsets_mod_p(d, k).at(b));
  exact.canonicalize();

  Rational main_term(binomial(n, k), d.p);
  main_term.canonicalize();
  const double rhs = main_term.get_d() - generalized_binomial(bias.phi, k);

  // Compare exactly: a double converts to a dyadic rational without loss.
  Rational rhs_q = main_term - Rational(generalized_binomial(bias.phi, k)) -
                   Rational(tol::bound_slack);
  rhs_q.canonicalize();
  return BoundReport{exact, rhs, bias.phi, exact >= rhs_q};
}

Rational complement_bound(int p, int c, int k) {
  if (!is_prime(p)) throw std::invalid_argument("complement_bound: p must be prime");
  if (c < 0 || c >= p) throw std::invalid_argument("complement_bound: c must be in [0, p-1]");
  if (k < 0 || k > p - c) {
    throw std::invalid_argument("complement_bound: k must be in [0, p-c]");
  }
  Rational r(binomial(p - c, k), p);
  r.canonicalize();
  r -= Rational(binomial(c + k - 1, k));
  r.canonicalize();
  return r;
}

SmoothReport is_smooth(const ResidueMultiset& d, std::int64_t ambient_size, double scale) {
  if (d.size() < 1) throw std::invalid_argument("is_smooth: D must be nonempty");
  if (ambient_size < d.size()) {
    throw std::invalid_argument("is_smooth: ambient size must be >= |D|");
  }
  const double phi = fourier_bias(d).phi;
  const double denom = std::sqrt(static_cast<double>(d.size()) *
                                 std::log(static_cast<double>(ambient_size)));
  double ratio;
  if (denom > 0.0) {
    ratio = phi / denom;
  } else {
    ratio = (phi == 0.0) ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return SmoothReport{phi <= scale * denom, ratio, phi};
}

}  // namespace laced
