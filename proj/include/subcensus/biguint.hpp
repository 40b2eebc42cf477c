#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace subcensus {

/// Unsigned integer of arbitrary size, little-endian base-2^64 limbs.
/// Subgroup counts grow like 2^{k(n-k)} and overflow machine words around
/// n = 14, so every count in this library is carried exactly as a BigUint.
/// An empty limb vector encodes zero; the top limb is never zero otherwise.
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t value) {
    if (value != 0) limbs_.push_back(value);
  }

  static BigUint pow2(unsigned exponent) {
    BigUint r;
    r.limbs_.assign(exponent / 64 + 1, 0);
    r.limbs_.back() = std::uint64_t{1} << (exponent % 64);
    return r;
  }

  bool is_zero() const { return limbs_.empty(); }
  explicit operator bool() const { return !limbs_.empty(); }

  friend bool operator==(const BigUint& a, const BigUint& b) = default;

  friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size())
      return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;)
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    return std::strong_ordering::equal;
  }

  BigUint& operator+=(const BigUint& o) {
    if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      unsigned __int128 s = static_cast<unsigned __int128>(limbs_[i]) + carry;
      if (i < o.limbs_.size()) s += o.limbs_[i];
      limbs_[i] = static_cast<std::uint64_t>(s);
      carry = static_cast<std::uint64_t>(s >> 64);
      if (carry == 0 && i >= o.limbs_.size()) break;
    }
    if (carry) limbs_.push_back(carry);
    return *this;
  }

  /// Throws std::underflow_error if o > *this; counts never go negative.
  BigUint& operator-=(const BigUint& o) {
    if (*this < o) throw std::underflow_error("BigUint subtraction underflow");
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint64_t sub = (i < o.limbs_.size() ? o.limbs_[i] : 0);
      unsigned __int128 d = static_cast<unsigned __int128>(limbs_[i]) - sub - borrow;
      limbs_[i] = static_cast<std::uint64_t>(d);
      borrow = (d >> 64) ? 1 : 0;
      if (borrow == 0 && i >= o.limbs_.size()) break;
    }
    trim();
    return *this;
  }

  BigUint& operator<<=(unsigned n) {
    if (is_zero() || n == 0) return *this;
    const unsigned limb_shift = n / 64, bit_shift = n % 64;
    limbs_.insert(limbs_.begin(), limb_shift, 0);
    if (bit_shift != 0) {
      std::uint64_t carry = 0;
      for (std::size_t i = limb_shift; i < limbs_.size(); ++i) {
        std::uint64_t next = limbs_[i] >> (64 - bit_shift);
        limbs_[i] = (limbs_[i] << bit_shift) | carry;
        carry = next;
      }
      if (carry) limbs_.push_back(carry);
    }
    return *this;
  }

  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
  friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }
  friend BigUint operator<<(BigUint a, unsigned n) { return a <<= n; }

  friend BigUint operator*(const BigUint& a, const BigUint& b) {
    if (a.is_zero() || b.is_zero()) return {};
    BigUint r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        unsigned __int128 cur = static_cast<unsigned __int128>(a.limbs_[i]) * b.limbs_[j] +
                                r.limbs_[i + j] + carry;
        r.limbs_[i + j] = static_cast<std::uint64_t>(cur);
        carry = static_cast<std::uint64_t>(cur >> 64);
      }
      r.limbs_[i + b.limbs_.size()] += carry;
    }
    r.trim();
    return r;
  }

  BigUint& operator*=(const BigUint& o) { return *this = *this * o; }

  /// Divides in place by a nonzero machine word, returns the remainder.
  std::uint64_t divmod_small(std::uint64_t d) {
    if (d == 0) throw std::domain_error("BigUint division by zero");
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      unsigned __int128 cur = (rem << 64) | limbs_[i];
      limbs_[i] = static_cast<std::uint64_t>(cur / d);
      rem = cur % d;
    }
    trim();
    return static_cast<std::uint64_t>(rem);
  }

  std::uint64_t to_u64() const {
    if (limbs_.size() > 1) throw std::overflow_error("BigUint does not fit in 64 bits");
    return limbs_.empty() ? 0 : limbs_[0];
  }

  std::size_t bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint64_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 64;
    while (top) ++bits, top >>= 1;
    return bits;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    // 10^19 is the largest power of ten in a 64-bit word.
    constexpr std::uint64_t kChunk = 10000000000000000000ULL;
    std::vector<std::uint64_t> chunks;
    BigUint tmp = *this;
    while (!tmp.is_zero()) chunks.push_back(tmp.divmod_small(kChunk));
    std::string out = std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
      std::string part = std::to_string(chunks[i]);
      out += std::string(19 - part.size(), '0') + part;
    }
    return out;
  }

 private:
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint64_t> limbs_;
};

}  // namespace subcensus
