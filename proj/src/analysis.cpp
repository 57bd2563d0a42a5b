#include "laced/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace laced {

Bigint weight_exact(const LacedParams& params) {
  const int n = params.n;
  const int p = params.p;
  Bigint wt = 0;
  // Inputs with s(X) = s <= n read x_s; those contribute when x_s = 1, i.e.
  // when the remaining coordinates sum to 0 mod p.
  for (int s = 1; s <= n; ++s) {
    wt += count_subsets_mod_p(laced_weight_multiset(params, {s})).at(0);
  }
  // Inputs with s(X) > n read x_1; with x_1 = 1 fixed the rest must sum to
  // s - 1. One table serves all p - n values of s.
  if (p > n) {
    const SumCountTable table = count_subsets_mod_p(laced_weight_multiset(params, {1}));
    for (int s = n + 1; s <= p; ++s) wt += table.at(s - 1);
  }
  return wt;
}

SensitivityReport avg_sensitivity_exact(const LacedParams& params) {
  const int n = params.n;
  const int p = params.p;
  Bigint total = 0;

  for (int i = 1; i <= n; ++i) {
    // Tables repeat heavily across (x_i, s) for one flip index; key them by
    // the excluded coordinate set and drop the cache when i advances.
    std::map<std::vector<int>, SumCountTable> tables;

    for (int xi = 0; xi <= 1; ++xi) {
      for (int s = 1; s <= p; ++s) {
        const int sp = shifted_residue(xi == 0 ? s + i : s - i, p).value;
        const int a = (s <= n) ? s : 1;    // coordinate f reads at X
        const int ap = (sp <= n) ? sp : 1;  // coordinate f reads at X^(i)

        // Constrained coordinates, deduplicated; index i first so the loop
        // value below lands on it.
        int idx[3];
        int m = 0;
        idx[m++] = i;
        if (a != i) idx[m++] = a;
        if (ap != i && ap != a) idx[m++] = ap;

        std::vector<int> key(idx, idx + m);
        std::sort(key.begin(), key.end());
        auto it = tables.find(key);
        if (it == tables.end()) {
          std::set<int> excluded(key.begin(), key.end());
          it = tables
                   .emplace(std::move(key),
                            count_subsets_mod_p(laced_weight_multiset(params, excluded)))
                   .first;
        }
        const SumCountTable& table = it->second;

        // All bit assignments of the constrained coordinates with x_i fixed.
        const int free_count = m - 1;
        for (int assign = 0; assign < (1 << free_count); ++assign) {
          int val[3];
          val[0] = xi;
          for (int j = 0; j < free_count; ++j) val[j + 1] = (assign >> j) & 1;

          const auto value_at = [&](int coord) {
            for (int j = 0; j < m; ++j) {
              if (idx[j] == coord) return val[j];
            }
            return -1;  // unreachable: a and ap are always in idx
          };

          const int fx = value_at(a);
          const int fx1 = (ap == i) ? 1 - xi : value_at(ap);
          if (fx == fx1) continue;

          int fixed_sum = 0;
          for (int j = 0; j < m; ++j) {
            if (val[j]) fixed_sum += idx[j];
          }
          total += table.at(s - fixed_sum);
        }
      }
    }
  }

  SensitivityReport report;
  report.total_flips = total;
  report.n = n;
  report.average = Rational(total, Bigint(1) << n);
  report.average.canonicalize();
  return report;
}

std::vector<AsymptoticRow> asymptotic_table(const std::vector<int>& n_values) {
  std::vector<AsymptoticRow> rows;
  rows.reserve(n_values.size());
  for (int n : n_values) {
    AsymptoticRow row;
    row.n = n;
    try {
      const LacedParams params = LacedParams::for_n(n);
      row.p = params.p;
      row.weight = weight_exact(params);
      Rational wr(row.weight, Bigint(1) << (n - 1));
      wr.canonicalize();
      row.weight_ratio = wr.get_d();
      const SensitivityReport sens = avg_sensitivity_exact(params);
      row.sens_total = sens.total_flips;
      Rational sr(sens.total_flips, (Bigint(1) << n) * n);
      sr.canonicalize();
      row.sens_ratio = sr.get_d();
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace laced
