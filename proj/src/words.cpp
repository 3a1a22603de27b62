#include "cgt/words.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace cgt {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw ParamError("empty generator name");
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) throw ParamError("duplicate generator name: " + names_[i]);
    }
  }
}

AlphabetRef Alphabet::make(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

const AlphabetRef& Alphabet::empty() {
  static const AlphabetRef instance = std::make_shared<const Alphabet>();
  return instance;
}

const std::string& Alphabet::name(int index) const {
  if (index < 1 || static_cast<std::size_t>(index) > names_.size()) {
    throw ParamError("generator index out of range: " + std::to_string(index));
  }
  return names_[static_cast<std::size_t>(index) - 1];
}

int Alphabet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i) + 1;
  }
  return 0;
}

std::vector<Letter> reduce_letters(std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (Letter l : letters) {
    if (l == 0) throw ParamError("letter 0 is not a generator");
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

namespace {
void check_letters(const Alphabet& alphabet, std::span<const Letter> letters) {
  for (Letter l : letters) {
    int idx = std::abs(l);
    if (idx < 1 || static_cast<std::size_t>(idx) > alphabet.size()) {
      throw ParamError("letter " + std::to_string(l) + " outside alphabet of size " +
                       std::to_string(alphabet.size()));
    }
  }
}
}  // namespace

Word Word::from_letters(AlphabetRef alphabet, std::span<const Letter> letters) {
  if (!alphabet) alphabet = Alphabet::empty();
  check_letters(*alphabet, letters);
  return from_reduced_unchecked(std::move(alphabet), reduce_letters(letters));
}

Word Word::from_letters(AlphabetRef alphabet, std::initializer_list<Letter> letters) {
  return from_letters(std::move(alphabet), std::span<const Letter>(letters.begin(), letters.size()));
}

Word Word::generator(const AlphabetRef& alphabet, int index, int sign) {
  if (sign != 1 && sign != -1) throw ParamError("generator sign must be +-1");
  return from_letters(alphabet, {sign > 0 ? index : -index});
}

Word from_reduced_unchecked(AlphabetRef alphabet, std::vector<Letter> letters) {
  Word w;
  w.alphabet_ = std::move(alphabet);
  w.letters_ = std::move(letters);
  return w;
}

bool Word::operator==(const Word& o) const {
  return letters_ == o.letters_ && *alphabet_ == *o.alphabet_;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ".";
    s += alphabet_->name(std::abs(letters_[i]));
    if (letters_[i] < 0) s += "^-1";
  }
  return s;
}

const AlphabetRef& common_alphabet(const Word& a, const Word& b) {
  if (*a.alphabet() == *b.alphabet()) return a.alphabet();
  if (a.empty() && a.alphabet()->size() == 0) return b.alphabet();
  if (b.empty() && b.alphabet()->size() == 0) return a.alphabet();
  throw AlphabetMismatchError("words over incompatible alphabets");
}

Word free_reduce(const Word& w) { return w; }

Word inverse(const Word& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  for (Letter& l : out) l = -l;
  return from_reduced_unchecked(w.alphabet(), std::move(out));
}

Word concat(const Word& a, const Word& b) {
  const AlphabetRef& alpha = common_alphabet(a, b);
  std::vector<Letter> out = a.letters();
  for (Letter l : b.letters()) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return from_reduced_unchecked(alpha, std::move(out));
}

Word conjugate(const Word& w, const Word& u) { return concat(concat(u, w), inverse(u)); }

Word commutator(const Word& a, const Word& b) {
  return concat(concat(a, b), concat(inverse(a), inverse(b)));
}

std::int64_t exponent_sum(const Word& w, int generator_index) {
  std::int64_t sum = 0;
  for (Letter l : w.letters()) {
    if (l == generator_index) ++sum;
    if (l == -generator_index) --sum;
  }
  return sum;
}

std::pair<Word, Word> cyclically_reduce(const Word& w) {
  const auto& ls = w.letters();
  std::size_t i = 0, j = ls.size();
  while (j - i >= 2 && ls[i] == -ls[j - 1]) {
    ++i;
    --j;
  }
  std::vector<Letter> core(ls.begin() + static_cast<std::ptrdiff_t>(i),
                           ls.begin() + static_cast<std::ptrdiff_t>(j));
  std::vector<Letter> conj(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(i));
  return {from_reduced_unchecked(w.alphabet(), std::move(core)),
          from_reduced_unchecked(w.alphabet(), std::move(conj))};
}

Word power(const Word& w, std::int64_t e) {
  Word base = e >= 0 ? w : inverse(w);
  std::int64_t n = e >= 0 ? e : -e;
  Word out{w.alphabet()};
  for (std::int64_t i = 0; i < n; ++i) out = concat(out, base);
  return out;
}

std::size_t WordHash::operator()(const Word& w) const {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ w.size();
  for (Letter l : w.letters()) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(l)) + 0x9e3779b97f4a7c15ull +
         (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace cgt
