#include <doctest.h>

#include <random>

#include "cgt/wordproblem.hpp"

using namespace cgt;

namespace {

Word bs_word(std::initializer_list<Letter> ls) {
  return Word::from_letters(make_G(2).alphabet(), ls);
}

// spell out a BS normal form with a small exact exponent
Word nf_to_word(const BsNormalForm& nf, const AlphabetRef& a) {
  Word w = power(Word::generator(a, 2, -1), nf.p);
  w = concat(w, power(Word::generator(a, 1), nf.m.to_int64()));
  return concat(w, power(Word::generator(a, 2), nf.q));
}

Word rand_word(const AlphabetRef& a, std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> letter_d(0, 2 * static_cast<int>(a->size()) - 1);
  std::vector<Letter> ls;
  for (int i = 0; i < len; ++i) {
    int c = letter_d(rng);
    ls.push_back((c % 2) ? -(c / 2 + 1) : (c / 2 + 1));
  }
  return Word::from_letters(a, ls);
}

}  // namespace

TEST_CASE("BS(1,2) normal forms of the defining identities") {
  BsNormalForm a = normal_form_bs(bs_word({2, 1, -2}));
  CHECK(a.p == 0);
  CHECK(a.q == 0);
  CHECK(a.m.to_int64() == 2);

  BsNormalForm b = normal_form_bs(bs_word({2, 2, 2, 1, -2, -2, -2}));
  CHECK(b.p == 0);
  CHECK(b.q == 0);
  CHECK(b.m.to_int64() == 8);

  BsNormalForm c = normal_form_bs(bs_word({1, 2, -1}));
  CHECK(c.p == 0);
  CHECK(c.m.to_int64() == -1);
  CHECK(c.q == 1);

  CHECK(normal_form_bs(Word{make_G(2).alphabet()}).is_identity());
}

TEST_CASE("BS normal form is a group invariant on random words") {
  auto alpha = make_G(2).alphabet();
  std::mt19937 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    Word u = rand_word(alpha, rng, trial % 12);
    Word v = rand_word(alpha, rng, (trial * 7) % 12);
    BsNormalForm nu = normal_form_bs(u);
    BsNormalForm nv = normal_form_bs(v);
    // composing the normal-form representatives matches composing the words
    BsNormalForm direct = normal_form_bs(concat(u, v));
    BsNormalForm via_nf = normal_form_bs(concat(nf_to_word(nu, alpha), nf_to_word(nv, alpha)));
    CHECK(direct.equals(via_nf));
    // the representative is in the same class as the word
    CHECK(normal_form_bs(concat(u, inverse(nf_to_word(nu, alpha)))).is_identity());
    // invariants of the form
    CHECK(nu.p >= 0);
    CHECK(nu.q >= 0);
    if (nu.p > 0 && nu.q > 0) CHECK(nu.m.parity() == 1);
  }
}

TEST_CASE("triviality in G_n for the tower witnesses") {
  for (int n = 2; n <= 3; ++n) {
    CHECK(is_trivial_G(n, v_word(n)).is_trivial());
  }
  WpCaps raised;
  raised.bit_cap = std::int64_t{1} << 17;
  CHECK(is_trivial_G(4, v_word(4), raised).is_trivial());

  CHECK(is_trivial_G(2, Word::generator(make_G(2).alphabet(), 1)).is_nontrivial());
  for (int m = 0; m <= 20; ++m) {
    CHECK(is_trivial_G(2, w_word(m)).is_trivial());
  }
  // commutator of non-commuting elements
  auto a = make_G(3).alphabet();
  CHECK(is_trivial_G(3, commutator(Word::generator(a, 2), Word::generator(a, 3))).is_nontrivial());

  // pinches at the top level: x3 x2^2 x3^-1 = x2^4
  Word lhs = conjugate(power(Word::generator(a, 2), 2), Word::generator(a, 3));
  CHECK(is_trivial_G(3, concat(lhs, power(Word::generator(a, 2), -4))).is_trivial());
  // x3 x1 x3^-1 is Britton-blocked (x1 is not a power of x2)
  CHECK(is_trivial_G(3, conjugate(Word::generator(a, 1), Word::generator(a, 3))).is_nontrivial());
  // a mixed-letter middle that is trivial in G_2 still pinches:
  // x3 (x2 r x2^-1 x2^2) x3^-1 x2^-4 with r a relator conjugate
  Word r = Word::from_letters(a, {2, 1, -2, -1, -1});
  Word mid = concat(conjugate(r, Word::generator(a, 2)), power(Word::generator(a, 2), 2));
  Word test = concat(conjugate(mid, Word::generator(a, 3)), power(Word::generator(a, 2), -4));
  CHECK(is_trivial_G(3, test).is_trivial());
}

TEST_CASE("saturation produces undecided, never a flipped verdict") {
  WpCaps tiny;
  tiny.bit_cap = 64;
  WpCaps raised;
  raised.bit_cap = std::int64_t{1} << 17;

  WpVerdict low = is_trivial_G(4, v_word(4), tiny);
  CHECK(low.is_undecided());
  WpVerdict def = is_trivial_G(4, v_word(4));
  CHECK((def.is_undecided() || def.is_trivial()));
  CHECK(is_trivial_G(4, v_word(4), raised).is_trivial());

  // v_5 needs ~2^32-bit exponents: honestly undecided even at a large cap
  WpCaps big;
  big.bit_cap = std::int64_t{1} << 21;
  CHECK(is_trivial_G(5, v_word(5), big).is_undecided());

  // raising the cap can only resolve undecided verdicts
  std::mt19937 rng(99);
  auto alpha = make_G(2).alphabet();
  for (int trial = 0; trial < 200; ++trial) {
    Word w = rand_word(alpha, rng, trial % 10);
    WpVerdict small = is_trivial_G(2, w, tiny);
    WpVerdict big = is_trivial_G(2, w, raised);
    if (!small.is_undecided()) CHECK(small.kind == big.kind);
  }
}

TEST_CASE("powers of x1") {
  for (int k = 1; k <= 30; ++k) {
    auto e = is_power_of_x1(2, g_word(2, k));
    REQUIRE(e.has_value());
    CHECK(e->to_int64() == std::int64_t{1} << k);
  }
  auto e33 = is_power_of_x1(3, g_word(3, 3));
  REQUIRE(e33.has_value());
  CHECK(e33->to_int64() == 256);

  CHECK(!is_power_of_x1(2, Word::generator(make_G(2).alphabet(), 2)).has_value());
  CHECK(is_power_of_x1(2, Word{make_G(2).alphabet()})->is_zero());
}

TEST_CASE("Britton route agrees with the BS automaton") {
  auto alpha = make_G(2).alphabet();
  std::mt19937 rng(52);
  for (int trial = 0; trial < 500; ++trial) {
    Word w = rand_word(alpha, rng, trial % 11);
    CHECK(is_trivial_G(2, w).is_trivial() == normal_form_bs(w).is_identity());
  }
}

TEST_CASE("the Z certificate replays and justifies is_trivial_P") {
  for (int n = 2; n <= 3; ++n) {
    ZCertificate cert = z_certificate(n);
    CHECK(cert.steps.size() == static_cast<std::size_t>(n + 1));
    CHECK(replay_certificate(cert));
  }
  WpCaps raised;
  raised.bit_cap = std::int64_t{1} << 17;
  CHECK(replay_certificate(z_certificate(4, raised), raised));
  WpCaps tiny;
  tiny.bit_cap = 64;
  CHECK_THROWS_AS((void)z_certificate(4, tiny), CapError);

  auto p2 = make_P(2).alphabet();
  CHECK(is_trivial_P(2, Word::generator(p2, 2)));
  CHECK(!is_trivial_P(2, Word::generator(p2, 3)));
  CHECK(is_trivial_P(2, conjugate(Word::generator(p2, 1), Word::generator(p2, 3))));
  // every generator except t dies in P_n
  for (int n = 2; n <= 3; ++n) {
    auto pa = make_P(n).alphabet();
    for (int i = 1; i <= n; ++i) CHECK(is_trivial_P(n, Word::generator(pa, i)));
    CHECK(!is_trivial_P(n, Word::generator(pa, n + 1)));
  }
}

TEST_CASE("a corrupted certificate fails replay") {
  ZCertificate cert = z_certificate(2);
  ZCertificate broken = cert;
  broken.steps[1].concluded_generator = 1;  // claims the wrong generator
  CHECK(!replay_certificate(broken));
  broken = cert;
  broken.steps.erase(broken.steps.begin());  // missing witness
  CHECK(!replay_certificate(broken));
}
