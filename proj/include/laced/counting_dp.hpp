#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "laced/modmath.hpp"

namespace laced {

// Multiset of residues mod a prime p, standard [0, p-1] convention. For the
// weighted-sum function the weight set is {k mod p : k in {1..n} \ excluded};
// when p = n the coordinate n contributes residue 0, so counting runs over
// positions, never over distinct residue values.
struct ResidueMultiset {
  int p;
  std::vector<int> elements;

  ResidueMultiset(int p, std::vector<int> elements);
  int size() const { return static_cast<int>(elements.size()); }
  bool duplicate_free() const;

  static ResidueMultiset full(int p);  // all of Z_p
  static ResidueMultiset complement(int p, const std::vector<int>& removed);
};

// counts[r] = number of counted position-subsets whose element sum is r mod p.
struct SumCountTable {
  int p;
  std::vector<Bigint> counts;

  explicit SumCountTable(int p);
  // Reduces any integer index into [0, p-1].
  const Bigint& at(std::int64_t residue) const;
  Bigint total() const;
};

// All-sizes subset-sum table: one rotate-and-add pass per element,
// O(|D| * p) big-integer additions. Row sums to 2^|D|.
SumCountTable count_subsets_mod_p(const ResidueMultiset& d);

// Size-k slice, O(|D| * k * p). k > |D| yields the all-zero table.
SumCountTable count_k_subsets_mod_p(const ResidueMultiset& d, int k);

// Weight multiset of the function instance with the given coordinates removed.
ResidueMultiset laced_weight_multiset(const LacedParams& params, const std::set<int>& excluded);

}  // namespace laced
