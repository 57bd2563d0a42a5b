#pragma once

#include <gmpxx.h>

#include <stdexcept>

namespace laced {

// Arbitrary-precision non-negative counts and exact rationals. Counts reach
// 2^n/p and blow past 64 bits near n = 70, so everything that accumulates
// subset counts works in Bigint from the start.
using Bigint = mpz_class;
using Rational = mpq_class;

// Thrown when a cross-check that must hold mathematically fails numerically:
// oracle disagreement, a violated bound, or a non-vanishing imaginary part in
// an assembled character sum.
class verification_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shared floating-point tolerances. Every float comparison in the library
// uses one of these three constants.
namespace tol {
// Absolute tolerance for a single character sum (one pass of unit vectors).
inline constexpr double character_sum_abs = 1e-9;
// Relative tolerance for assembled character-expansion sums, scaled by the
// magnitude of the quantity being reconstructed.
inline constexpr double assembled_sum_rel = 1e-6;
// Slack subtracted from bound right-hand sides: the bias enters as a float,
// the inequality itself is strict in exact arithmetic.
inline constexpr double bound_slack = 1e-6;
}  // namespace tol

}  // namespace laced
