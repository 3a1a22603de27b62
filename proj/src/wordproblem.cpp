#include "cgt/wordproblem.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace cgt {

std::string WpVerdict::str() const {
  switch (kind) {
    case Kind::Trivial:
      return "trivial";
    case Kind::Nontrivial:
      return "nontrivial";
    case Kind::Undecided:
      return "undecided(" + reason + ")";
  }
  return "undecided()";
}

namespace {

// ---- power words: syllable sequences with TowerInt exponents ----
//
// Britton pinches create powers like x1^(2^65536); spelling those out as
// letters is hopeless, so the solver works on compressed syllables
// throughout.

struct Syllable {
  int gen = 0;
  TowerInt exp;
};
using PowerWord = std::vector<Syllable>;

void append_syllable(PowerWord& w, int gen, const TowerInt& exp, std::int64_t cap) {
  if (exp.is_zero()) return;
  if (!w.empty() && w.back().gen == gen) {
    TowerInt merged = w.back().exp.add(exp, cap);
    w.pop_back();
    if (!merged.is_zero()) w.push_back({gen, merged});
    return;
  }
  w.push_back({gen, exp});
}

PowerWord power_from_word(const Word& w, std::int64_t cap) {
  PowerWord out;
  for (Letter l : w.letters()) {
    append_syllable(out, std::abs(l), TowerInt{l > 0 ? 1 : -1}, cap);
  }
  return out;
}

// min of two values known positive
TowerInt min_positive(const TowerInt& a, const TowerInt& b) {
  return TowerInt::compare(a, b) <= 0 ? a : b;
}

TowerInt shift_right_exact(const TowerInt& e, std::int64_t a) {
  if (e.is_saturated()) throw CapError("2-adic division of a saturated value");
  return TowerInt{e.exact_value().shifted_right(static_cast<std::uint64_t>(a))};
}

// Sum of x_g exponents over a power word. Invariant under G-relations when g
// is the top generator of the subword's level.
TowerInt power_exponent_sum(const PowerWord& w, int gen, std::int64_t cap) {
  TowerInt e{0};
  for (const auto& s : w) {
    if (s.gen == gen) e = e.add(s.exp, cap);
  }
  return e;
}

bool is_trivial_power(int level, PowerWord w, std::int64_t cap);

// Membership of u (a power word over generators < level+1, i.e. <= level) in
// the cyclic subgroup <x_level>; returns the exponent when it is a member.
std::optional<TowerInt> cyclic_membership(int level, const PowerWord& u, std::int64_t cap) {
  if (u.empty()) return TowerInt{0};
  if (u.size() == 1 && u[0].gen == level) return u[0].exp;
  // exponent sum of the top generator is invariant, so it is the only
  // candidate exponent
  TowerInt e = power_exponent_sum(u, level, cap);
  PowerWord test = u;
  append_syllable(test, level, e.negated(), cap);
  if (is_trivial_power(level, std::move(test), cap)) return e;
  return std::nullopt;
}

// One Britton elimination pass for the stable letter x_level over the base
// G_{level-1}, using x_level u x_level^-1 = u^2 for u in <x_{level-1}>.
// Pinches are applied in bulk so tower-sized stable exponents terminate.
// Returns the x_level-free result, or nullopt when a Britton-reduced word
// with x_level syllables remains (then the word is not in the base group).
std::optional<PowerWord> eliminate_level(int level, PowerWord w, std::int64_t cap) {
  struct Item {
    bool stable = false;
    TowerInt exp;    // stable syllable exponent
    PowerWord run;   // maximal run of lower syllables
  };

  auto build_items = [&](const PowerWord& pw) {
    std::vector<Item> items;
    for (const auto& s : pw) {
      if (s.gen == level) {
        items.push_back({true, s.exp, {}});
      } else {
        if (items.empty() || items.back().stable) items.push_back({false, TowerInt{0}, {}});
        append_syllable(items.back().run, s.gen, s.exp, cap);
        if (items.back().run.empty()) items.pop_back();  // fully cancelled
      }
    }
    return items;
  };

  auto flatten = [&](const std::vector<Item>& items) {
    PowerWord pw;
    for (const auto& it : items) {
      if (it.stable) {
        append_syllable(pw, level, it.exp, cap);
      } else {
        for (const auto& s : it.run) append_syllable(pw, s.gen, s.exp, cap);
      }
    }
    return pw;
  };

  std::vector<Item> items = build_items(w);

  bool changed = true;
  while (changed) {
    changed = false;
    // scan left to right, restart after the first rewrite
    for (std::size_t k = 0; k + 1 < items.size(); ++k) {
      if (!items[k].stable) continue;
      // pattern: stable, lower-run, stable (the run is absent when two
      // stable syllables merged during flatten; build_items remerges those)
      std::size_t mid = k + 1;
      std::size_t rhs = (mid < items.size() && !items[mid].stable) ? mid + 1 : mid;
      if (rhs >= items.size() || !items[rhs].stable) continue;
      const TowerInt& ea = items[k].exp;
      const TowerInt& eb = items[rhs].exp;
      const PowerWord run = (rhs == mid) ? PowerWord{} : items[mid].run;

      auto member = cyclic_membership(level - 1, run, cap);
      if (!member) continue;  // definitively blocked at this junction
      const TowerInt& e = *member;

      PowerWord replacement;
      TowerInt ea2{0}, eb2{0};
      if (e.is_zero()) {
        // u = e: merge the two stable syllables
        ea2 = ea.add(eb, cap);
      } else if (ea.sign() > 0 && eb.sign() < 0) {
        TowerInt a = min_positive(ea, eb.negated());
        append_syllable(replacement, level - 1, e.shifted_left(a, cap), cap);
        ea2 = ea.add(a.negated(), cap);
        eb2 = eb.add(a, cap);
      } else if (ea.sign() < 0 && eb.sign() > 0) {
        // throws CapError when saturation hides the 2-adic valuation
        std::int64_t v2 = e.trailing_zero_bits();
        if (v2 == 0) continue;  // odd exponent: Britton-blocked here
        TowerInt a = min_positive(min_positive(ea.negated(), eb), TowerInt{v2});
        append_syllable(replacement, level - 1, shift_right_exact(e, a.to_int64()), cap);
        ea2 = ea.add(a, cap);
        eb2 = eb.add(a.negated(), cap);
      } else {
        continue;  // same-sign junction, nothing to pinch
      }

      // splice [k .. rhs] -> ea2, replacement, eb2
      std::vector<Item> next(items.begin(), items.begin() + static_cast<std::ptrdiff_t>(k));
      PowerWord spliced;
      if (!ea2.is_zero()) append_syllable(spliced, level, ea2, cap);
      for (const auto& s : replacement) append_syllable(spliced, s.gen, s.exp, cap);
      if (!eb2.is_zero()) append_syllable(spliced, level, eb2, cap);
      // stitch: previous items before k stay; rebuild from flattened tail
      PowerWord tail = spliced;
      for (std::size_t t = rhs + 1; t < items.size(); ++t) {
        if (items[t].stable) {
          append_syllable(tail, level, items[t].exp, cap);
        } else {
          for (const auto& s : items[t].run) append_syllable(tail, s.gen, s.exp, cap);
        }
      }
      PowerWord head = flatten(next);
      for (const auto& s : tail) append_syllable(head, s.gen, s.exp, cap);
      items = build_items(head);
      changed = true;
      break;
    }
  }

  for (const auto& it : items) {
    if (it.stable) return std::nullopt;
  }
  return flatten(items);
}

bool is_trivial_power(int level, PowerWord w, std::int64_t cap) {
  for (int i = level; i >= 2; --i) {
    auto reduced = eliminate_level(i, std::move(w), cap);
    if (!reduced) return false;
    w = std::move(*reduced);
  }
  // free group on x1
  return w.empty();
}

void check_alphabet(const Word& w, const Presentation& p, const char* what) {
  if (!(*w.alphabet() == *p.alphabet()) && !(w.empty() && w.alphabet()->size() == 0)) {
    throw AlphabetMismatchError(std::string("word is not over the ") + what + " alphabet");
  }
}

}  // namespace

BsNormalForm normal_form_bs(const Word& w, const WpCaps& caps) {
  check_alphabet(w, make_G(2), "G(2)");
  const std::int64_t cap = caps.bit_cap;
  BsNormalForm nf;
  for (Letter l : w.letters()) {
    switch (l) {
      case 1:
      case -1: {
        TowerInt delta = pow2(TowerInt{nf.q}, cap);
        nf.m = nf.m.add(l > 0 ? delta : delta.negated(), cap);
        break;
      }
      case 2:
        if (nf.q > 0) {
          ++nf.q;
        } else if (nf.p > 0 && nf.m.is_even_or_throw()) {
          --nf.p;
          nf.m = nf.m.halved();
        } else {
          nf.q = 1;
        }
        break;
      case -2:
        if (nf.q > 0) {
          --nf.q;
        } else {
          nf.m = nf.m.shifted_left(TowerInt{1}, cap);
          ++nf.p;
        }
        break;
      default:
        throw ParamError("normal_form_bs: unexpected letter");
    }
  }
  return nf;
}

WpVerdict is_trivial_G(int n, const Word& w, const WpCaps& caps) {
  check_alphabet(w, make_G(n), "G(n)");
  try {
    return is_trivial_power(n, power_from_word(w, caps.bit_cap), caps.bit_cap)
               ? WpVerdict::trivial()
               : WpVerdict::nontrivial();
  } catch (const CapError& e) {
    return WpVerdict::undecided(e.what());
  }
}

std::optional<TowerInt> is_power_of_x1(int n, const Word& w, const WpCaps& caps) {
  check_alphabet(w, make_G(n), "G(n)");
  PowerWord pw = power_from_word(w, caps.bit_cap);
  for (int i = n; i >= 2; --i) {
    auto reduced = eliminate_level(i, std::move(pw), caps.bit_cap);
    if (!reduced) return std::nullopt;  // Britton-reduced with x_i left: not in the base
    pw = std::move(*reduced);
  }
  if (pw.empty()) return TowerInt{0};
  assert(pw.size() == 1 && pw[0].gen == 1);
  return pw[0].exp;
}

ZCertificate z_certificate(int n, const WpCaps& caps) {
  if (n < 2) throw ParamError("z_certificate needs n >= 2");
  Word v = v_word(n);
  WpVerdict base = is_trivial_G(n, v, caps);
  if (!base.is_trivial()) {
    throw CapError("z_certificate: G_n solver did not certify v_n = e (" + base.str() + ")");
  }

  ZCertificate cert;
  cert.n = n;

  CertStep witness;
  witness.kind = CertStep::Kind::WitnessTrivial;
  witness.claim = "v_" + std::to_string(n) + " = e in G_" + std::to_string(n);
  witness.justification = "Britton pinch reduction over the HNN tower";
  witness.word = v;
  cert.steps.push_back(std::move(witness));

  const int len_v = static_cast<int>(v.size());
  CertStep subst;
  subst.kind = CertStep::Kind::RelatorSubstitution;
  subst.claim = "x" + std::to_string(n) + " = e in P_" + std::to_string(n);
  subst.justification = "substitute v_n = e into the relator t v_n t^-1 x_n^-1 v_n^-1";
  subst.relator_index = n - 1;
  subst.word = v;
  subst.spans = {{1, len_v}, {len_v + 3, len_v}};
  subst.concluded_generator = n;
  cert.steps.push_back(std::move(subst));

  for (int i = n - 1; i >= 1; --i) {
    CertStep desc;
    desc.kind = CertStep::Kind::GeneratorDescent;
    desc.claim = "x" + std::to_string(i) + " = e in P_" + std::to_string(n);
    desc.justification = "x_i = x_i^2 follows from the relator once x_" + std::to_string(i + 1) +
                         " = e";
    desc.relator_index = i - 1;
    desc.known_trivial_gens = {i + 1};
    desc.concluded_generator = i;
    cert.steps.push_back(std::move(desc));
  }

  cert.conclusion = "every x_i = e in P_" + std::to_string(n) + "; P_" + std::to_string(n) +
                    " presents Z = <t>";
  return cert;
}

bool replay_certificate(const ZCertificate& cert, const WpCaps& caps) {
  const int n = cert.n;
  Presentation p = make_P(n);
  std::vector<bool> shown(static_cast<std::size_t>(n) + 2, false);
  std::vector<Word> trivial_words;

  for (const auto& step : cert.steps) {
    switch (step.kind) {
      case CertStep::Kind::WitnessTrivial: {
        if (!is_trivial_G(n, step.word, caps).is_trivial()) return false;
        trivial_words.push_back(step.word);
        break;
      }
      case CertStep::Kind::RelatorSubstitution: {
        if (step.relator_index < 0 ||
            static_cast<std::size_t>(step.relator_index) >= p.relators().size()) {
          return false;
        }
        const auto& rel = p.relators()[static_cast<std::size_t>(step.relator_index)].letters();
        // the deleted spans must literally spell the witness or its inverse
        const auto& wl = step.word.letters();
        auto span_matches = [&](std::pair<int, int> span) {
          if (span.first < 0 || span.second < 0 ||
              static_cast<std::size_t>(span.first + span.second) > rel.size()) {
            return false;
          }
          std::vector<Letter> sub(rel.begin() + span.first, rel.begin() + span.first + span.second);
          std::vector<Letter> inv(sub.rbegin(), sub.rend());
          for (auto& l : inv) l = -l;
          return sub == wl || inv == wl;
        };
        bool known =
            std::any_of(trivial_words.begin(), trivial_words.end(),
                        [&](const Word& t) { return t.letters() == wl; });
        if (!known) return false;
        std::vector<bool> keep(rel.size(), true);
        for (auto span : step.spans) {
          if (!span_matches(span)) return false;
          for (int k = 0; k < span.second; ++k) keep[static_cast<std::size_t>(span.first + k)] = false;
        }
        std::vector<Letter> rest;
        for (std::size_t k = 0; k < rel.size(); ++k) {
          if (keep[k]) rest.push_back(rel[k]);
        }
        auto reduced = reduce_letters(rest);
        if (reduced.size() != 1 || std::abs(reduced[0]) != step.concluded_generator) return false;
        shown[static_cast<std::size_t>(step.concluded_generator)] = true;
        break;
      }
      case CertStep::Kind::GeneratorDescent: {
        if (step.relator_index < 0 ||
            static_cast<std::size_t>(step.relator_index) >= p.relators().size()) {
          return false;
        }
        for (int g : step.known_trivial_gens) {
          if (g <= 0 || static_cast<std::size_t>(g) >= shown.size() ||
              !shown[static_cast<std::size_t>(g)]) {
            return false;
          }
        }
        const auto& rel = p.relators()[static_cast<std::size_t>(step.relator_index)].letters();
        std::vector<Letter> rest;
        for (Letter l : rel) {
          bool erased = std::any_of(step.known_trivial_gens.begin(), step.known_trivial_gens.end(),
                                    [&](int g) { return std::abs(l) == g; });
          if (!erased) rest.push_back(l);
        }
        auto reduced = reduce_letters(rest);
        if (reduced.size() != 1 || std::abs(reduced[0]) != step.concluded_generator) return false;
        shown[static_cast<std::size_t>(step.concluded_generator)] = true;
        break;
      }
    }
  }

  for (int i = 1; i <= n; ++i) {
    if (!shown[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

bool is_trivial_P(int n, const Word& w, const WpCaps& caps) {
  check_alphabet(w, make_P(n), "P(n)");
  ZCertificate cert = z_certificate(n, caps);
  if (!replay_certificate(cert, caps)) {
    throw CapError("is_trivial_P: certificate replay failed");
  }
  return exponent_sum(w, n + 1) == 0;
}

}  // namespace cgt
