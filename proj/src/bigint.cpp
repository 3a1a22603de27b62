#include "cgt/bigint.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace cgt {

BigInt::BigInt(std::int64_t v) {
  if (v == 0) return;
  sign_ = v > 0 ? 1 : -1;
  // careful with INT64_MIN
  std::uint64_t mag = v > 0 ? static_cast<std::uint64_t>(v) : ~static_cast<std::uint64_t>(v) + 1u;
  mag_.push_back(mag);
}

BigInt BigInt::power_of_two(std::uint64_t k) {
  BigInt r;
  r.sign_ = 1;
  r.mag_.assign(k / 64 + 1, 0);
  r.mag_.back() = std::uint64_t{1} << (k % 64);
  return r;
}

std::uint64_t BigInt::bit_length() const {
  if (mag_.empty()) return 0;
  return 64 * (mag_.size() - 1) + (64 - std::countl_zero(mag_.back()));
}

std::uint64_t BigInt::trailing_zero_bits() const {
  assert(!is_zero());
  for (std::size_t i = 0; i < mag_.size(); ++i) {
    if (mag_[i] != 0) return 64 * i + std::countr_zero(mag_[i]);
  }
  return 0;  // unreachable
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int BigInt::compare_mag(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint64_t> BigInt::add_mag(const std::vector<std::uint64_t>& a,
                                           const std::vector<std::uint64_t>& b) {
  const auto& big = a.size() >= b.size() ? a : b;
  const auto& small = a.size() >= b.size() ? b : a;
  std::vector<std::uint64_t> r(big.size() + 1, 0);
  unsigned __int128 carry = 0;
  for (std::size_t i = 0; i < big.size(); ++i) {
    unsigned __int128 s = carry + big[i] + (i < small.size() ? small[i] : 0);
    r[i] = static_cast<std::uint64_t>(s);
    carry = s >> 64;
  }
  r[big.size()] = static_cast<std::uint64_t>(carry);
  return r;
}

std::vector<std::uint64_t> BigInt::sub_mag(const std::vector<std::uint64_t>& a,
                                           const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> r(a.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    unsigned __int128 ai = a[i];
    unsigned __int128 sub = (i < b.size() ? b[i] : 0);
    sub += (borrow ? 1u : 0u);
    if (ai >= sub) {
      r[i] = static_cast<std::uint64_t>(ai - sub);
      borrow = 0;
    } else {
      r[i] = static_cast<std::uint64_t>((ai + ((unsigned __int128)1 << 64)) - sub);
      borrow = 1;
    }
  }
  assert(borrow == 0);
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  BigInt r;
  if (sign_ == o.sign_) {
    r.sign_ = sign_;
    r.mag_ = add_mag(mag_, o.mag_);
  } else {
    int c = compare_mag(mag_, o.mag_);
    if (c == 0) return BigInt{};
    if (c > 0) {
      r.sign_ = sign_;
      r.mag_ = sub_mag(mag_, o.mag_);
    } else {
      r.sign_ = o.sign_;
      r.mag_ = sub_mag(o.mag_, mag_);
    }
  }
  r.trim();
  return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::shifted_left(std::uint64_t bits) const {
  if (is_zero() || bits == 0) return *this;
  BigInt r;
  r.sign_ = sign_;
  std::size_t limb_shift = bits / 64;
  unsigned bit_shift = bits % 64;
  r.mag_.assign(mag_.size() + limb_shift + 1, 0);
  for (std::size_t i = 0; i < mag_.size(); ++i) {
    r.mag_[i + limb_shift] |= bit_shift ? (mag_[i] << bit_shift) : mag_[i];
    if (bit_shift) r.mag_[i + limb_shift + 1] |= mag_[i] >> (64 - bit_shift);
  }
  r.trim();
  return r;
}

BigInt BigInt::shifted_right(std::uint64_t bits) const {
  if (is_zero()) return *this;
  if (bits >= bit_length()) return BigInt{};
  BigInt r;
  r.sign_ = sign_;
  std::size_t limb_shift = bits / 64;
  unsigned bit_shift = bits % 64;
  r.mag_.assign(mag_.size() - limb_shift, 0);
  for (std::size_t i = limb_shift; i < mag_.size(); ++i) {
    r.mag_[i - limb_shift] |= bit_shift ? (mag_[i] >> bit_shift) : mag_[i];
    if (bit_shift && i + 1 < mag_.size()) {
      r.mag_[i - limb_shift] |= mag_[i + 1] << (64 - bit_shift);
    }
  }
  r.trim();
  return r;
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
  int c = compare_mag(a.mag_, b.mag_);
  return a.sign_ >= 0 ? c : -c;
}

bool BigInt::fits_int64() const {
  if (mag_.size() > 1) return false;
  if (mag_.empty()) return true;
  if (sign_ > 0) return mag_[0] <= static_cast<std::uint64_t>(INT64_MAX);
  return mag_[0] <= static_cast<std::uint64_t>(INT64_MAX) + 1u;
}

std::int64_t BigInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("BigInt::to_int64: out of range");
  if (mag_.empty()) return 0;
  if (sign_ > 0) return static_cast<std::int64_t>(mag_[0]);
  return -static_cast<std::int64_t>(mag_[0] - 1u) - 1;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::uint64_t> work = mag_;
  std::string digits;
  constexpr std::uint64_t chunk = 10'000'000'000'000'000'000ull;  // 10^19
  while (!work.empty()) {
    unsigned __int128 rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      unsigned __int128 cur = (rem << 64) | work[i];
      work[i] = static_cast<std::uint64_t>(cur / chunk);
      rem = cur % chunk;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    std::uint64_t r = static_cast<std::uint64_t>(rem);
    for (int d = 0; d < 19; ++d) {
      digits.push_back(static_cast<char>('0' + r % 10));
      r /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

}  // namespace cgt
