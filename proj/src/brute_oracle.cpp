#include "laced/brute_oracle.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace laced {

namespace {

void check_enumeration_size(int n, int limit, const char* what) {
  if (limit < 0 || limit > 62) {
    throw std::invalid_argument("enumeration limit must be in [0, 62]");
  }
  if (n > limit) {
    throw std::invalid_argument(std::string(what) + ": size " + std::to_string(n) +
                                " exceeds the enumeration limit " + std::to_string(limit) +
                                "; use the DP method");
  }
}

// f(X) for the mask encoding, given the shifted residue s = s(X).
inline int eval_mask(const LacedParams& params, std::uint64_t mask, int s) {
  const int a = (s <= params.n) ? s : 1;
  return static_cast<int>((mask >> (a - 1)) & 1u);
}

// Walks all of Z_2^n in Gray-code order, maintaining the weighted sum mod p
// incrementally, and invokes visit(mask, s) with s = s(X) in [1, p].
template <typename Visit>
void for_each_input(const LacedParams& params, Visit&& visit) {
  const std::uint64_t total = std::uint64_t{1} << params.n;
  std::uint64_t gray = 0;
  int w = 0;  // weighted sum mod p, in [0, p-1]
  for (std::uint64_t m = 0;; ++m) {
    visit(gray, w == 0 ? params.p : w);
    const std::uint64_t next = m + 1;
    if (next == total) break;
    const int pos = std::countr_zero(next);
    const int k = pos + 1;
    if ((gray >> pos) & 1u) {
      w -= k;
      if (w < 0) w += params.p;
    } else {
      w += k;
      if (w >= params.p) w -= params.p;
    }
    gray ^= std::uint64_t{1} << pos;
  }
}

}  // namespace

Bigint brute_weight(const LacedParams& params, int limit) {
  check_enumeration_size(params.n, limit, "brute_weight");
  std::uint64_t ones = 0;
  for_each_input(params, [&](std::uint64_t mask, int s) {
    ones += static_cast<std::uint64_t>(eval_mask(params, mask, s));
  });
  return Bigint(static_cast<unsigned long>(ones));
}

int brute_sensitivity_at(const LacedParams& params, const InputVector& x) {
  const int fx = eval_f(params, x);
  int count = 0;
  for (int i = 1; i <= params.n; ++i) {
    if (eval_f(params, flip(x, i)) != fx) ++count;
  }
  return count;
}

namespace {

// Sensitivity of the masked input in O(n): s(X^(i)) = s(X) +- i.
int sensitivity_of_mask(const LacedParams& params, std::uint64_t mask, int s) {
  const int n = params.n;
  const int p = params.p;
  const int f = eval_mask(params, mask, s);
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    int sp;
    if ((mask >> (i - 1)) & 1u) {
      sp = s - i;
      if (sp < 1) sp += p;
    } else {
      sp = s + i;
      if (sp > p) sp -= p;
    }
    const std::uint64_t flipped = mask ^ (std::uint64_t{1} << (i - 1));
    if (eval_mask(params, flipped, sp) != f) ++count;
  }
  return count;
}

}  // namespace

int brute_max_sensitivity(const LacedParams& params, int limit) {
  check_enumeration_size(params.n, limit, "brute_max_sensitivity");
  int best = 0;
  for_each_input(params, [&](std::uint64_t mask, int s) {
    const int v = sensitivity_of_mask(params, mask, s);
    if (v > best) best = v;
  });
  return best;
}

SensitivityReport brute_avg_sensitivity(const LacedParams& params, int limit) {
  check_enumeration_size(params.n, limit, "brute_avg_sensitivity");
  std::uint64_t total = 0;
  int best = 0;
  for_each_input(params, [&](std::uint64_t mask, int s) {
    const int v = sensitivity_of_mask(params, mask, s);
    total += static_cast<std::uint64_t>(v);
    if (v > best) best = v;
  });
  SensitivityReport report;
  report.total_flips = Bigint(static_cast<unsigned long>(total));
  report.n = params.n;
  report.average = Rational(report.total_flips, Bigint(1) << params.n);
  report.average.canonicalize();
  report.maximum = best;
  return report;
}

Bigint brute_count_subsets(const ResidueMultiset& d, int b, std::optional<int> k, int limit) {
  check_enumeration_size(d.size(), limit, "brute_count_subsets");
  if (k && *k < 0) throw std::invalid_argument("brute_count_subsets: k must be >= 0");
  const int p = d.p;
  const int target = ((b % p) + p) % p;
  const std::uint64_t total = std::uint64_t{1} << d.size();
  std::uint64_t hits = 0;
  std::uint64_t gray = 0;
  int sum = 0;
  int picked = 0;
  for (std::uint64_t m = 0;; ++m) {
    if (sum == target && (!k || picked == *k)) ++hits;
    const std::uint64_t next = m + 1;
    if (next == total) break;
    const int pos = std::countr_zero(next);
    const int e = d.elements[pos];
    if ((gray >> pos) & 1u) {
      sum -= e;
      if (sum < 0) sum += p;
      --picked;
    } else {
      sum += e;
      if (sum >= p) sum -= p;
      ++picked;
    }
    gray ^= std::uint64_t{1} << pos;
  }
  return Bigint(static_cast<unsigned long>(hits));
}

namespace {

void count_tuples_rec(const ResidueMultiset& d, int target, int k, int depth, int sum,
                      std::vector<bool>& used, Bigint& hits) {
  if (depth == k) {
    if (sum == target) hits += 1;
    return;
  }
  for (int j = 0; j < d.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    int next = sum + d.elements[j];
    if (next >= d.p) next -= d.p;
    count_tuples_rec(d, target, k, depth + 1, next, used, hits);
    used[j] = false;
  }
}

}  // namespace

Bigint brute_count_distinct_tuples(const ResidueMultiset& d, int b, int k, int limit) {
  check_enumeration_size(d.size(), limit, "brute_count_distinct_tuples");
  if (k < 0) throw std::invalid_argument("brute_count_distinct_tuples: k must be >= 0");
  if (!d.duplicate_free()) {
    throw std::invalid_argument("brute_count_distinct_tuples: D must be duplicate-free");
  }
  const int target = ((b % d.p) + d.p) % d.p;
  Bigint hits = 0;
  std::vector<bool> used(d.size(), false);
  count_tuples_rec(d, target, k, 0, 0, used, hits);
  return hits;
}

}  // namespace laced
