#include <doctest.h>

#include <random>

#include "cgt/words.hpp"

using namespace cgt;

namespace {

AlphabetRef two_gen() { return Alphabet::make({"x1", "x2"}); }

Word rand_word(const AlphabetRef& a, std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len_d(0, max_len);
  std::uniform_int_distribution<int> letter_d(0, 2 * static_cast<int>(a->size()) - 1);
  std::vector<Letter> ls;
  int len = len_d(rng);
  for (int i = 0; i < len; ++i) {
    int c = letter_d(rng);
    ls.push_back((c % 2) ? -(c / 2 + 1) : (c / 2 + 1));
  }
  return Word::from_letters(a, ls);
}

}  // namespace

TEST_CASE("free reduction cancels adjacent inverse pairs") {
  auto a = two_gen();
  CHECK(Word::from_letters(a, {1, -1}).empty());
  CHECK(Word::from_letters(a, {2, 1, -1, 2}) == Word::from_letters(a, {2, 2}));
  // w_1 spelled out is already reduced
  Word w1 = Word::from_letters(a, {2, 1, -2, 1, 2, -1, -2, -1});
  CHECK(w1.size() == 8);
}

TEST_CASE("word combinators satisfy the free group identities") {
  auto a = two_gen();
  Word x1 = Word::generator(a, 1);
  Word x2 = Word::generator(a, 2);
  CHECK(commutator(x1, x1).empty());
  CHECK(conjugate(x1, x2) == Word::from_letters(a, {2, 1, -2}));
  CHECK(inverse(concat(x2, x1)) == Word::from_letters(a, {-1, -2}));
  CHECK(conjugate(x1, Word{}) == x1);
  CHECK(inverse(inverse(conjugate(x2, x1))) == conjugate(x2, x1));
}

TEST_CASE("alphabet mismatch is an error") {
  Word x1 = Word::generator(two_gen(), 1);
  Word y = Word::generator(Alphabet::make({"a"}), 1);
  CHECK_THROWS_AS((void)concat(x1, y), AlphabetMismatchError);
}

TEST_CASE("exponent sums") {
  auto a = Alphabet::make({"x1", "x2", "t"});
  Word w = Word::from_letters(a, {3, 1, 2, -3, -1, -2, -1});
  CHECK(exponent_sum(w, 3) == 0);
  CHECK(exponent_sum(w, 1) == -1);
  CHECK(exponent_sum(Word{}, 1) == 0);
}

TEST_CASE("cyclic reduction peels matching ends") {
  auto a = two_gen();
  auto [core1, conj1] = cyclically_reduce(Word::from_letters(a, {1, 2, -1}));
  CHECK(core1 == Word::generator(a, 2));
  CHECK(conj1 == Word::generator(a, 1));
  auto [core2, conj2] = cyclically_reduce(Word::from_letters(a, {-1, 2, 2, 1}));
  CHECK(core2 == Word::from_letters(a, {2, 2}));
  CHECK(conj2 == Word::generator(a, 1, -1));
  auto [core3, conj3] = cyclically_reduce(Word::from_letters(a, {2, 1}));
  CHECK(core3 == Word::from_letters(a, {2, 1}));
  CHECK(conj3.empty());
}

TEST_CASE("reduction preserves length parity") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> letter_d(0, 3);
  std::uniform_int_distribution<int> len_d(0, 20);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Letter> raw;
    int len = len_d(rng);
    for (int i = 0; i < len; ++i) {
      int c = letter_d(rng);
      raw.push_back((c % 2) ? -(c / 2 + 1) : (c / 2 + 1));
    }
    auto reduced = reduce_letters(raw);
    CHECK(reduced.size() % 2 == raw.size() % 2);
    CHECK(reduced.size() <= raw.size());
  }
}

TEST_CASE("word properties over random samples") {
  auto a = two_gen();
  std::mt19937 rng(20231108);
  for (int trial = 0; trial < 300; ++trial) {
    Word u = rand_word(a, rng, 12);
    Word v = rand_word(a, rng, 12);
    Word w = rand_word(a, rng, 12);
    // associativity on reduced representatives
    CHECK(concat(concat(u, v), w) == concat(u, concat(v, w)));
    // inverse is an involution and an anti-homomorphism
    CHECK(inverse(inverse(u)) == u);
    CHECK(inverse(concat(u, v)) == concat(inverse(v), inverse(u)));
    // exponent sums add
    CHECK(exponent_sum(concat(u, v), 1) == exponent_sum(u, 1) + exponent_sum(v, 1));
    // conjugation preserves triviality structure
    CHECK(concat(u, inverse(u)).empty());
    // cyclic reduction reassembles
    auto [core, conj] = cyclically_reduce(u);
    CHECK(conjugate(core, conj) == u);
    if (!core.empty()) CHECK(core.letters().front() != -core.letters().back());
  }
}
