#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgt/words.hpp"

namespace cgt {

struct FamilyTag {
  std::string tag;  // "G", "P", "Q", "T"
  int n = 0;
  bool operator==(const FamilyTag&) const = default;
};

class Presentation {
 public:
  Presentation(AlphabetRef alphabet, std::vector<Word> relators,
               std::optional<FamilyTag> family = std::nullopt);

  const AlphabetRef& alphabet() const { return alphabet_; }
  const std::vector<Word>& relators() const { return relators_; }
  const std::optional<FamilyTag>& family() const { return family_; }
  std::size_t generator_count() const { return alphabet_->size(); }
  bool is_balanced() const { return alphabet_->size() == relators_.size(); }
  std::int64_t total_relator_length() const;

 private:
  AlphabetRef alphabet_;
  std::vector<Word> relators_;
  std::optional<FamilyTag> family_;
};

// Invert(i): r_i -> r_i^-1
// MultiplyRight(i, j): r_i -> r_i r_j (i != j)
// Conjugate(i, g, sign): r_i -> g^sign r_i g^-sign
struct ElementaryOp {
  enum class Kind { Invert, MultiplyRight, Conjugate };
  Kind kind = Kind::Invert;
  int i = 0;    // relator index (0-based)
  int j = 0;    // second relator for MultiplyRight
  int gen = 0;  // generator index (1-based) for Conjugate
  int sign = 1;

  static ElementaryOp invert(int i) { return {Kind::Invert, i, 0, 0, 1}; }
  static ElementaryOp multiply_right(int i, int j) { return {Kind::MultiplyRight, i, j, 0, 1}; }
  static ElementaryOp conjugate(int i, int gen, int sign) {
    return {Kind::Conjugate, i, 0, gen, sign};
  }
  bool operator==(const ElementaryOp&) const = default;
};

Presentation apply_op(const Presentation& p, const ElementaryOp& op);
Presentation apply_sequence(const Presentation& p, const std::vector<ElementaryOp>& ops);

// Alphabets equal as ordered name lists, relator multisets equal as exact
// freely reduced words.
bool presentations_equal(const Presentation& p, const Presentation& q);

// --- the presentation families ---

// G(n) = <x1..xn | x_{i+1} x_i x_{i+1}^-1 x_i^-2 for i = 1..n-1>, n >= 2.
Presentation make_G(int n);
// P(n) = <G(n), t | t v_n t^-1 x_n^-1 v_n^-1>
Presentation make_P(int n);
// Q(n) = P(n) plus the relator t (balanced presentation of the trivial group).
Presentation make_Q(int n);
// T(n): same alphabet, relators exactly [x1, ..., xn, t].
Presentation make_T(int n);

// w_m = [x1^{x2^m}, x1] over the G(2) alphabet; length 4m+4 for m >= 1.
Word w_word(int m);
// g_k = x1^{x2^{...^{x_n^k}}} over the G(n) alphabet.
Word g_word(int n, int k);
// v_n = [g_{n,n}, x1]; length (n+1) 2^n.
Word v_word(int n);

// Elementary operations taking Q(n) to T(n) (relator order [x1..xn, t]).
// Length is linear in the total relator length of Q(n).
std::vector<ElementaryOp> standard_trivialization_sequence(int n);

}  // namespace cgt
