#include "cgt/tower.hpp"

#include <algorithm>
#include <cassert>

#include "cgt/errors.hpp"

namespace cgt {

namespace {
// floor_bits is a lower bound, so clamping keeps it sound.
constexpr std::int64_t kFloorMax = std::int64_t{1} << 60;

std::int64_t clamp_floor(std::int64_t f) { return std::min(f, kFloorMax); }
}  // namespace

TowerInt TowerInt::saturated(int sign, std::int64_t floor_bits, std::optional<int> parity) {
  if (sign != 1 && sign != -1) throw ParamError("saturated TowerInt needs sign +-1");
  if (floor_bits < 1) throw CapError("saturated TowerInt eroded below certainty");
  TowerInt t;
  t.saturated_ = true;
  t.sat_sign_ = sign;
  t.sat_floor_bits_ = clamp_floor(floor_bits);
  t.sat_parity_ = parity;
  return t;
}

const BigInt& TowerInt::exact_value() const {
  if (saturated_) throw CapError("exact value requested from saturated TowerInt");
  return exact_;
}

int TowerInt::sign() const { return saturated_ ? sat_sign_ : exact_.sign(); }

std::int64_t TowerInt::floor_bits() const {
  if (!saturated_) throw Error("floor_bits only defined for saturated values");
  return sat_floor_bits_;
}

std::optional<int> TowerInt::parity() const {
  if (!saturated_) return exact_.is_odd() ? 1 : 0;
  return sat_parity_;
}

bool TowerInt::is_even_or_throw() const {
  auto p = parity();
  if (!p) throw CapError("parity lost at saturation cap");
  return *p == 0;
}

std::int64_t TowerInt::lower_bound_bits() const {
  if (saturated_) return sat_floor_bits_;
  auto b = exact_.bit_length();
  return b == 0 ? 0 : static_cast<std::int64_t>(b) - 1;
}

TowerInt TowerInt::negated() const {
  TowerInt t = *this;
  if (t.saturated_) {
    t.sat_sign_ = -t.sat_sign_;
  } else {
    t.exact_ = -t.exact_;
  }
  return t;
}

namespace {
TowerInt from_bigint(BigInt v, std::int64_t cap) {
  if (static_cast<std::int64_t>(v.bit_length()) > cap) {
    return TowerInt::saturated(v.sign(), static_cast<std::int64_t>(v.bit_length()) - 1,
                               v.is_odd() ? 1 : 0);
  }
  return TowerInt{std::move(v)};
}
}  // namespace

TowerInt TowerInt::add(const TowerInt& o, std::int64_t cap) const {
  if (!saturated_ && !o.saturated_) return from_bigint(exact_ + o.exact_, cap);
  if (saturated_ && o.saturated_) {
    if (sat_sign_ != o.sat_sign_) {
      throw CapError("sum of opposite-sign saturated values is indeterminate");
    }
    std::optional<int> p;
    if (sat_parity_ && o.sat_parity_) p = *sat_parity_ ^ *o.sat_parity_;
    return saturated(sat_sign_, std::max(sat_floor_bits_, o.sat_floor_bits_), p);
  }
  const TowerInt& sat = saturated_ ? *this : o;
  const TowerInt& ex = saturated_ ? o : *this;
  if (ex.exact_.is_zero()) return sat;
  std::int64_t erosion = static_cast<std::int64_t>(ex.exact_.bit_length()) + 1;
  std::int64_t floor = sat.sat_floor_bits_ - erosion;
  std::optional<int> p;
  if (sat.sat_parity_) p = *sat.sat_parity_ ^ (ex.exact_.is_odd() ? 1 : 0);
  return saturated(sat.sat_sign_, floor, p);  // throws CapError when floor < 1
}

TowerInt TowerInt::shifted_left(const TowerInt& bits, std::int64_t cap) const {
  if (bits.sign() < 0) throw ParamError("negative shift");
  if (is_zero()) return TowerInt{0};
  if (bits.is_zero()) return *this;
  if (bits.is_exact() && bits.exact_.fits_int64()) {
    std::int64_t k = std::min(bits.exact_.to_int64(), kFloorMax);
    if (!saturated_) {
      std::int64_t bl = static_cast<std::int64_t>(exact_.bit_length());
      if (bl + k <= cap) return TowerInt{exact_.shifted_left(static_cast<std::uint64_t>(k))};
      return saturated(exact_.sign(), clamp_floor(bl - 1 + k), 0);
    }
    return saturated(sat_sign_, clamp_floor(clamp_floor(sat_floor_bits_) + k), 0);
  }
  // Astronomically large shift amount: result far beyond any cap.
  return saturated(sign(), kFloorMax, 0);
}

TowerInt TowerInt::halved() const {
  if (!saturated_) {
    if (exact_.is_odd()) throw Error("halved() on odd value");
    return TowerInt{exact_.shifted_right(1)};
  }
  if (!sat_parity_) throw CapError("halving needs parity of a saturated value");
  if (*sat_parity_ != 0) throw Error("halved() on odd value");
  return saturated(sat_sign_, sat_floor_bits_ - 1, std::nullopt);
}

std::int64_t TowerInt::trailing_zero_bits() const {
  if (!saturated_) {
    if (exact_.is_zero()) throw Error("trailing_zero_bits of zero");
    return static_cast<std::int64_t>(exact_.trailing_zero_bits());
  }
  if (sat_parity_ && *sat_parity_ == 1) return 0;
  throw CapError("2-adic valuation lost at saturation cap");
}

int TowerInt::compare(const TowerInt& a, const TowerInt& b) {
  if (a.is_exact() && b.is_exact()) return BigInt::compare(a.exact_, b.exact_);
  if (a.sign() != b.sign()) return a.sign() < b.sign() ? -1 : 1;
  if (a.is_saturated() && b.is_saturated()) {
    throw CapError("comparison of same-sign saturated values is indeterminate");
  }
  const TowerInt& sat = a.is_saturated() ? a : b;
  const TowerInt& ex = a.is_saturated() ? b : a;
  if (static_cast<std::int64_t>(ex.exact_.bit_length()) > sat.sat_floor_bits_) {
    throw CapError("comparison near the saturation floor is indeterminate");
  }
  int mag = a.is_saturated() ? 1 : -1;  // saturated magnitude strictly larger
  return sat.sat_sign_ > 0 ? mag : -mag;
}

std::int64_t TowerInt::to_int64() const { return exact_value().to_int64(); }

std::string TowerInt::to_string() const {
  if (!saturated_) return exact_.to_string();
  std::string p = sat_parity_ ? (*sat_parity_ ? "odd" : "even") : "unknown";
  return std::string(sat_sign_ > 0 ? "+" : "-") + "saturated(floor_bits=" +
         std::to_string(sat_floor_bits_) + ",parity=" + p + ")";
}

TowerInt pow2(const TowerInt& e, std::int64_t cap) {
  if (e.sign() < 0) throw ParamError("pow2 of negative exponent");
  return TowerInt{1}.shifted_left(e, cap);
}

TowerInt tower(std::int64_t height, std::int64_t k, std::int64_t cap) {
  if (height < 0 || k < 0) throw ParamError("tower(h, k) needs h, k >= 0");
  TowerInt t{k};
  for (std::int64_t i = 0; i < height; ++i) t = pow2(t, cap);
  return t;
}

}  // namespace cgt
