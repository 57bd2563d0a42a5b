#include "laced/laced_core.hpp"

#include <stdexcept>

namespace laced {

InputVector::InputVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("InputVector: entries must be 0 or 1");
  }
}

InputVector InputVector::zeros(int n) {
  if (n < 0) throw std::invalid_argument("InputVector: negative length");
  return InputVector(std::vector<std::uint8_t>(n, 0));
}

InputVector InputVector::from_string(std::string_view s) {
  std::vector<std::uint8_t> bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("InputVector: bit string must contain only '0' and '1'");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return InputVector(std::move(bits));
}

InputVector InputVector::from_mask(std::uint64_t mask, int n) {
  if (n < 0 || n > 64) throw std::invalid_argument("InputVector: mask length must be in [0, 64]");
  std::vector<std::uint8_t> bits(n);
  for (int k = 0; k < n; ++k) bits[k] = static_cast<std::uint8_t>((mask >> k) & 1u);
  return InputVector(std::move(bits));
}

int InputVector::bit(int i) const {
  if (i < 1 || i > n()) throw std::out_of_range("InputVector: coordinate index out of range");
  return bits_[i - 1];
}

InputVector InputVector::flipped(int i) const {
  if (i < 1 || i > n()) throw std::out_of_range("InputVector: coordinate index out of range");
  InputVector y = *this;
  y.bits_[i - 1] ^= 1u;
  return y;
}

std::uint64_t InputVector::to_mask() const {
  if (n() > 64) throw std::length_error("InputVector: too long for the mask encoding");
  std::uint64_t m = 0;
  for (int k = 0; k < n(); ++k) m |= static_cast<std::uint64_t>(bits_[k]) << k;
  return m;
}

std::string InputVector::to_string() const {
  std::string s(bits_.size(), '0');
  for (int k = 0; k < n(); ++k) s[k] = static_cast<char>('0' + bits_[k]);
  return s;
}

ShiftedResidue s_of(const LacedParams& params, const InputVector& x) {
  if (x.n() != params.n) {
    throw std::invalid_argument("s_of: input length does not match n");
  }
  // Partial sums stay below 2p because each weight k <= n <= p.
  int sum = 0;
  for (int k = 1; k <= params.n; ++k) {
    if (x.bit(k)) {
      sum += k;
      if (sum >= params.p) sum -= params.p;
    }
  }
  return shifted_residue(sum, params.p);
}

int eval_f(const LacedParams& params, const InputVector& x) {
  const int s = s_of(params, x).value;
  return (s <= params.n) ? x.bit(s) : x.bit(1);
}

InputVector flip(const InputVector& x, int i) { return x.flipped(i); }

}  // namespace laced
