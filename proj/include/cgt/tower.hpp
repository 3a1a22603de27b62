#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cgt/bigint.hpp"

namespace cgt {

inline constexpr std::int64_t kDefaultBitCap = 4096;

// Exact arbitrary-precision integer, or a saturated marker once a value
// outgrows the configured bit cap. A saturated value records its sign, a
// lower bound floor_bits with |value| >= 2^floor_bits, and the parity when
// it is still known. Saturation is one-way: arithmetic never silently
// pretends to be exact again, and any question a saturated value cannot
// answer raises CapError.
class TowerInt {
 public:
  TowerInt() : TowerInt(std::int64_t{0}) {}
  TowerInt(std::int64_t v) : exact_(v) {}  // NOLINT: implicit by design
  explicit TowerInt(BigInt v) : exact_(std::move(v)) {}

  static TowerInt saturated(int sign, std::int64_t floor_bits, std::optional<int> parity);

  bool is_exact() const { return !saturated_; }
  bool is_saturated() const { return saturated_; }
  const BigInt& exact_value() const;  // requires is_exact()

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  std::int64_t floor_bits() const;          // requires is_saturated()
  std::optional<int> parity() const;        // nullopt once parity is lost
  bool is_even_or_throw() const;            // CapError when parity unknown

  // |x| >= 2^floor_bits also holds for exact values (derived bound).
  std::int64_t lower_bound_bits() const;

  TowerInt negated() const;
  // cap = bit cap for exact results; crossing it saturates.
  TowerInt add(const TowerInt& o, std::int64_t cap) const;
  TowerInt shifted_left(const TowerInt& bits, std::int64_t cap) const;
  TowerInt halved() const;  // requires even (CapError / logic error otherwise)

  // Trailing zero bits of |x|; CapError when saturation hides it. 0 is an error.
  std::int64_t trailing_zero_bits() const;

  // Exact comparison; CapError when saturation makes the order unknowable.
  static int compare(const TowerInt& a, const TowerInt& b);
  bool equals(const TowerInt& o) const { return compare(*this, o) == 0; }

  std::int64_t to_int64() const;  // requires exact and in range
  std::string to_string() const;

 private:
  bool saturated_ = false;
  BigInt exact_;
  int sat_sign_ = 0;
  std::int64_t sat_floor_bits_ = 0;
  std::optional<int> sat_parity_;
};

// tower(0, k) = k; tower(h, k) = 2^tower(h-1, k).
TowerInt tower(std::int64_t height, std::int64_t k, std::int64_t cap = kDefaultBitCap);

// 2^e as a TowerInt under the cap; e must be >= 0.
TowerInt pow2(const TowerInt& e, std::int64_t cap);

}  // namespace cgt
