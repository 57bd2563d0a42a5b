#include "laced/counting_dp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace laced {

ResidueMultiset::ResidueMultiset(int p_, std::vector<int> elements_)
    : p(p_), elements(std::move(elements_)) {
  if (!is_prime(p)) {
    throw std::invalid_argument("ResidueMultiset: p=" + std::to_string(p) + " is not prime");
  }
  for (int e : elements) {
    if (e < 0 || e >= p) {
      throw std::invalid_argument("ResidueMultiset: element " + std::to_string(e) +
                                  " outside [0, p-1]");
    }
  }
}

bool ResidueMultiset::duplicate_free() const {
  std::vector<int> s = elements;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

ResidueMultiset ResidueMultiset::full(int p) {
  std::vector<int> all(p);
  for (int r = 0; r < p; ++r) all[r] = r;
  return ResidueMultiset(p, std::move(all));
}

ResidueMultiset ResidueMultiset::complement(int p, const std::vector<int>& removed) {
  std::vector<bool> drop(p, false);
  for (int r : removed) {
    if (r < 0 || r >= p) {
      throw std::invalid_argument("ResidueMultiset: removed element outside [0, p-1]");
    }
    drop[r] = true;
  }
  std::vector<int> rest;
  for (int r = 0; r < p; ++r) {
    if (!drop[r]) rest.push_back(r);
  }
  return ResidueMultiset(p, std::move(rest));
}

SumCountTable::SumCountTable(int p_) : p(p_), counts(p_) {
  if (p < 1) throw std::invalid_argument("SumCountTable: p must be >= 1");
}

const Bigint& SumCountTable::at(std::int64_t residue) const {
  std::int64_t r = residue % p;
  if (r < 0) r += p;
  return counts[static_cast<std::size_t>(r)];
}

Bigint SumCountTable::total() const {
  Bigint t = 0;
  for (const Bigint& c : counts) t += c;
  return t;
}

SumCountTable count_subsets_mod_p(const ResidueMultiset& d) {
  SumCountTable table(d.p);
  table.counts[0] = 1;
  std::vector<Bigint> prev(d.p);
  for (int e : d.elements) {
    prev = table.counts;
    for (int r = 0; r < d.p; ++r) {
      int src = r - e;
      if (src < 0) src += d.p;
      table.counts[r] = prev[r] + prev[src];
    }
  }
  return table;
}

SumCountTable count_k_subsets_mod_p(const ResidueMultiset& d, int k) {
  if (k < 0) throw std::invalid_argument("count_k_subsets_mod_p: k must be >= 0");
  const int p = d.p;
  std::vector<std::vector<Bigint>> dp(k + 1, std::vector<Bigint>(p));
  dp[0][0] = 1;
  int seen = 0;
  for (int e : d.elements) {
    ++seen;
    for (int j = std::min(k, seen); j >= 1; --j) {
      for (int r = 0; r < p; ++r) {
        int src = r - e;
        if (src < 0) src += p;
        dp[j][r] += dp[j - 1][src];
      }
    }
  }
  SumCountTable table(p);
  table.counts = std::move(dp[k]);
  return table;
}

ResidueMultiset laced_weight_multiset(const LacedParams& params, const std::set<int>& excluded) {
  for (int k : excluded) {
    if (k < 1 || k > params.n) {
      throw std::invalid_argument("laced_weight_multiset: excluded index " + std::to_string(k) +
                                  " outside {1..n}");
    }
  }
  std::vector<int> elems;
  elems.reserve(params.n - static_cast<int>(excluded.size()));
  for (int k = 1; k <= params.n; ++k) {
    if (!excluded.contains(k)) elems.push_back(k % params.p);
  }
  return ResidueMultiset(params.p, std::move(elems));
}

}  // namespace laced
