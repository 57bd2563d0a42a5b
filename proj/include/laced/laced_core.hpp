#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "laced/modmath.hpp"

namespace laced {

// A point of Z_2^n. Coordinates are 1-based on the public surface, matching
// the weights k = 1..n; bit k of the compact mask encoding is x_{k+1}.
class InputVector {
 public:
  InputVector() = default;
  explicit InputVector(std::vector<std::uint8_t> bits);

  static InputVector zeros(int n);
  // Parses a string of '0'/'1' characters, leftmost character = x_1.
  static InputVector from_string(std::string_view s);
  // Bit k-1 of mask = x_k; requires 0 <= n <= 64.
  static InputVector from_mask(std::uint64_t mask, int n);

  int n() const { return static_cast<int>(bits_.size()); }
  int bit(int i) const;  // 1-based, throws on out-of-range i
  InputVector flipped(int i) const;

  std::uint64_t to_mask() const;
  std::string to_string() const;

  bool operator==(const InputVector&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// s(X): the weighted sum of the set bits, coordinate index = weight, reduced
// into [1, p].
ShiftedResidue s_of(const LacedParams& params, const InputVector& x);

// f(X) = x_{s(X)} when s(X) <= n, else x_1. When p = n the fallback branch is
// unreachable (s(X) = p = n already selects a real coordinate).
int eval_f(const LacedParams& params, const InputVector& x);

// X with coordinate i flipped; an involution.
InputVector flip(const InputVector& x, int i);

}  // namespace laced
