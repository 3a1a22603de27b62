#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cgt {

// Sign-magnitude arbitrary precision integer. Only the operations the word
// problem solvers need: add, subtract, compare, shifts, parity, bit counts.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v);  // NOLINT: implicit by design

  static BigInt power_of_two(std::uint64_t k);

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  bool is_odd() const { return !mag_.empty() && (mag_[0] & 1u); }
  bool is_even() const { return !is_odd(); }

  // Number of bits in |x|; 0 for x = 0.
  std::uint64_t bit_length() const;
  // 2-adic valuation: number of trailing zero bits. Undefined for 0.
  std::uint64_t trailing_zero_bits() const;

  BigInt operator-() const;
  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const;

  BigInt shifted_left(std::uint64_t bits) const;
  // Shift of the magnitude; caller is responsible for exactness (we only
  // halve even values).
  BigInt shifted_right(std::uint64_t bits) const;

  bool operator==(const BigInt& o) const = default;
  // -1, 0, +1
  static int compare(const BigInt& a, const BigInt& b);
  bool operator<(const BigInt& o) const { return compare(*this, o) < 0; }
  bool operator>(const BigInt& o) const { return compare(*this, o) > 0; }
  bool operator<=(const BigInt& o) const { return compare(*this, o) <= 0; }
  bool operator>=(const BigInt& o) const { return compare(*this, o) >= 0; }

  bool fits_int64() const;
  std::int64_t to_int64() const;  // requires fits_int64()

  std::string to_string() const;  // decimal

 private:
  static int compare_mag(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);
  static std::vector<std::uint64_t> add_mag(const std::vector<std::uint64_t>& a,
                                            const std::vector<std::uint64_t>& b);
  // requires |a| >= |b|
  static std::vector<std::uint64_t> sub_mag(const std::vector<std::uint64_t>& a,
                                            const std::vector<std::uint64_t>& b);
  void trim();

  int sign_ = 0;
  std::vector<std::uint64_t> mag_;  // little endian limbs, no trailing zeros
};

}  // namespace cgt
