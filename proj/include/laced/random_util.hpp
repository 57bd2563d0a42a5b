#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace laced {

// Uniform draw from [0, m), m >= 1, by rejection. mt19937_64 output is fully
// specified by the standard, so seeded runs are byte-identical everywhere
// (std::uniform_int_distribution is not, which is why it is not used).
inline std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t m) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % m;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % m;
}

// size distinct residues of Z_p, returned sorted ascending.
inline std::vector<int> sample_distinct_residues(std::mt19937_64& rng, int p, int size) {
  std::vector<int> pool(p);
  for (int r = 0; r < p; ++r) pool[r] = r;
  for (int j = 0; j < size; ++j) {
    const int swap_with = j + static_cast<int>(bounded_uniform(rng, p - j));
    std::swap(pool[j], pool[swap_with]);
  }
  pool.resize(size);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace laced
