#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cgt/errors.hpp"

namespace cgt {

// Letters are signed generator indices: +i is generator i (1-based), -i is
// its inverse. This is also the interchange encoding.
using Letter = std::int32_t;

class Alphabet;
using AlphabetRef = std::shared_ptr<const Alphabet>;

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  static AlphabetRef make(std::vector<std::string> names);
  static const AlphabetRef& empty();

  std::size_t size() const { return names_.size(); }
  const std::string& name(int index) const;  // 1-based
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;  // 0 when absent

  bool operator==(const Alphabet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

// A freely reduced word over an alphabet. Words are immutable values; every
// combinator returns a new reduced word, so they can be hashed and shared
// freely as search states.
class Word {
 public:
  Word() : alphabet_(Alphabet::empty()) {}
  explicit Word(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {}

  // Reduces the given letter sequence.
  static Word from_letters(AlphabetRef alphabet, std::span<const Letter> letters);
  static Word from_letters(AlphabetRef alphabet, std::initializer_list<Letter> letters);
  // Single letter g^sign.
  static Word generator(const AlphabetRef& alphabet, int index, int sign = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const AlphabetRef& alphabet() const { return alphabet_; }

  bool operator==(const Word& o) const;

  std::string str() const;  // e.g. "x2.x1.x2^-1"

 private:
  friend Word from_reduced_unchecked(AlphabetRef, std::vector<Letter>);
  AlphabetRef alphabet_;
  std::vector<Letter> letters_;
};

// Free reduction of a raw letter sequence (cancel adjacent g g^-1 pairs).
std::vector<Letter> reduce_letters(std::span<const Letter> letters);

// Internal fast path: the caller guarantees `letters` is already reduced.
Word from_reduced_unchecked(AlphabetRef alphabet, std::vector<Letter> letters);

Word free_reduce(const Word& w);  // identity on the reduced representation
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
// u w u^-1, the x^y = y x y^-1 convention.
Word conjugate(const Word& w, const Word& u);
// a b a^-1 b^-1
Word commutator(const Word& a, const Word& b);
std::int64_t exponent_sum(const Word& w, int generator_index);
// w = conjugate(core, conjugator) with core cyclically reduced.
std::pair<Word, Word> cyclically_reduce(const Word& w);
Word power(const Word& w, std::int64_t e);  // w^e, reduced

// Throws AlphabetMismatchError unless equal (empty-alphabet empty words are
// compatible with everything). Returns the common alphabet.
const AlphabetRef& common_alphabet(const Word& a, const Word& b);

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

}  // namespace cgt
