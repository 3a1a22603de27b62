#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgt/families.hpp"
#include "cgt/tower.hpp"
#include "cgt/words.hpp"

namespace cgt {

struct WpCaps {
  std::int64_t bit_cap = kDefaultBitCap;
};

struct WpVerdict {
  enum class Kind { Trivial, Nontrivial, Undecided };
  Kind kind = Kind::Undecided;
  std::string reason;

  static WpVerdict trivial() { return {Kind::Trivial, {}}; }
  static WpVerdict nontrivial() { return {Kind::Nontrivial, {}}; }
  static WpVerdict undecided(std::string why) { return {Kind::Undecided, std::move(why)}; }
  bool is_trivial() const { return kind == Kind::Trivial; }
  bool is_nontrivial() const { return kind == Kind::Nontrivial; }
  bool is_undecided() const { return kind == Kind::Undecided; }
  std::string str() const;  // "trivial" | "nontrivial" | "undecided(<reason>)"
};

// Britton normal form in BS(1,2) = <x1, x2 | x2 x1 x2^-1 = x1^2>:
// w = x2^-p x1^m x2^q with p, q >= 0 and m odd whenever p > 0 and q > 0.
// Equality of normal forms is equality in the group.
struct BsNormalForm {
  std::int64_t p = 0;
  std::int64_t q = 0;
  TowerInt m;

  bool equals(const BsNormalForm& o) const {
    return p == o.p && q == o.q && m.equals(o.m);
  }
  bool is_identity() const { return p == 0 && q == 0 && m.is_zero(); }
};

// Throws CapError when a halving step needs parity lost to saturation.
BsNormalForm normal_form_bs(const Word& w, const WpCaps& caps = {});

// Decides w = e in G_n by recursive Britton pinch elimination, treating each
// x_i as stable letter over G_{i-1} with x_i x_{i-1} x_i^-1 = x_{i-1}^2.
// Sound and complete while exponents stay exact; saturation turns into an
// Undecided verdict, never a wrong one.
WpVerdict is_trivial_G(int n, const Word& w, const WpCaps& caps = {});

// The exponent e with w = x1^e in G_n, when w lies in <x1>.
// Returns nullopt when it provably does not; throws CapError when saturation
// hides the answer.
std::optional<TowerInt> is_power_of_x1(int n, const Word& w, const WpCaps& caps = {});

// A replayable derivation that every x_i = e in P_n, reducing P_n to Z = <t>.
struct CertStep {
  enum class Kind { WitnessTrivial, RelatorSubstitution, GeneratorDescent };
  Kind kind = Kind::WitnessTrivial;
  std::string claim;
  std::string justification;
  int relator_index = -1;
  Word word;                                       // the trivial witness word
  std::vector<std::pair<int, int>> spans;          // (offset, length) deletions
  std::vector<int> known_trivial_gens;
  int concluded_generator = 0;
};

struct ZCertificate {
  int n = 0;
  std::vector<CertStep> steps;
  std::string conclusion;
};

// Throws CapError when the G_n solver saturates (raise the bit cap).
ZCertificate z_certificate(int n, const WpCaps& caps = {});

// Mechanically re-checks every step using the G_n solver and free-group
// algebra alone.
bool replay_certificate(const ZCertificate& cert, const WpCaps& caps = {});

// w = e in P_n iff the t-exponent sum vanishes, justified by the certificate.
bool is_trivial_P(int n, const Word& w, const WpCaps& caps = {});

}  // namespace cgt
