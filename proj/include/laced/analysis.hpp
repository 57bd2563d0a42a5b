#pragma once

#include <string>
#include <vector>

#include "laced/brute_oracle.hpp"

namespace laced {

// wt(f) = #{X : f(X) = 1}, computed in polynomial time: group inputs by the
// value s = s(X) and the bit the function reads there, then count the
// completions with one subset-sum DP table per excluded coordinate.
Bigint weight_exact(const LacedParams& params);

// Exact total flip count (and average), grouping inputs by flip index i,
// the flipped bit's value, and s(X). Every boundary and index-collision
// case is enumerated exactly, so the result equals brute enumeration bit
// for bit. maximum is not produced by this route.
SensitivityReport avg_sensitivity_exact(const LacedParams& params);

// One sweep row. weight_ratio = wt / 2^(n-1) and sens_ratio = sigma_av / n
// are the observables that approach 1 and 1/2; the exact integers stay
// available for audits. error is nonempty when that row failed.
struct AsymptoticRow {
  int n = 0;
  int p = 0;
  Bigint weight;
  double weight_ratio = 0.0;
  Bigint sens_total;
  double sens_ratio = 0.0;
  std::string error;
};

// One row per requested n; a failing row carries its error and the sweep
// continues.
std::vector<AsymptoticRow> asymptotic_table(const std::vector<int>& n_values);

}  // namespace laced
