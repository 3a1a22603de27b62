#include "cgt/families.hpp"

#include <algorithm>

namespace cgt {

Presentation::Presentation(AlphabetRef alphabet, std::vector<Word> relators,
                           std::optional<FamilyTag> family)
    : alphabet_(alphabet ? std::move(alphabet) : Alphabet::empty()),
      relators_(std::move(relators)),
      family_(std::move(family)) {
  for (auto& r : relators_) {
    if (!(*r.alphabet() == *alphabet_)) {
      if (r.empty() && r.alphabet()->size() == 0) {
        r = Word{alphabet_};
      } else {
        throw AlphabetMismatchError("relator over a different alphabet");
      }
    }
  }
}

std::int64_t Presentation::total_relator_length() const {
  std::int64_t total = 0;
  for (const auto& r : relators_) total += static_cast<std::int64_t>(r.size());
  return total;
}

Presentation apply_op(const Presentation& p, const ElementaryOp& op) {
  auto in_range = [&](int idx) {
    return idx >= 0 && static_cast<std::size_t>(idx) < p.relators().size();
  };
  if (!in_range(op.i)) throw ParamError("relator index out of range");
  std::vector<Word> rel = p.relators();
  switch (op.kind) {
    case ElementaryOp::Kind::Invert:
      rel[static_cast<std::size_t>(op.i)] = inverse(rel[static_cast<std::size_t>(op.i)]);
      break;
    case ElementaryOp::Kind::MultiplyRight:
      if (!in_range(op.j)) throw ParamError("relator index out of range");
      if (op.i == op.j) throw ParamError("MultiplyRight needs distinct relator indices");
      rel[static_cast<std::size_t>(op.i)] =
          concat(rel[static_cast<std::size_t>(op.i)], rel[static_cast<std::size_t>(op.j)]);
      break;
    case ElementaryOp::Kind::Conjugate: {
      if (op.sign != 1 && op.sign != -1) throw ParamError("conjugation sign must be +-1");
      Word g = Word::generator(p.alphabet(), op.gen, op.sign);
      rel[static_cast<std::size_t>(op.i)] = conjugate(rel[static_cast<std::size_t>(op.i)], g);
      break;
    }
  }
  return Presentation{p.alphabet(), std::move(rel), p.family()};
}

Presentation apply_sequence(const Presentation& p, const std::vector<ElementaryOp>& ops) {
  Presentation cur = p;
  for (const auto& op : ops) cur = apply_op(cur, op);
  return cur;
}

bool presentations_equal(const Presentation& p, const Presentation& q) {
  if (!(*p.alphabet() == *q.alphabet())) return false;
  if (p.relators().size() != q.relators().size()) return false;
  auto key = [](const Word& w) { return w.letters(); };
  std::vector<std::vector<Letter>> a, b;
  for (const auto& r : p.relators()) a.push_back(key(r));
  for (const auto& r : q.relators()) b.push_back(key(r));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

namespace {

std::vector<std::string> x_names(int n, bool with_t) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n) + (with_t ? 1 : 0));
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  if (with_t) names.emplace_back("t");
  return names;
}

void require_n(int n) {
  // n = 1 is degenerate: G_1 is free and v_1 freely trivial, so the families
  // start at n = 2.
  if (n < 2) throw ParamError("family parameter must satisfy n >= 2");
}

// x_{i+1} x_i x_{i+1}^-1 x_i^-2, the relator spelling of x_i^{x_{i+1}} = x_i^2.
Word bs_relator(const AlphabetRef& alpha, int i) {
  return Word::from_letters(alpha, {i + 1, i, -(i + 1), -i, -i});
}

std::vector<Word> g_relators(const AlphabetRef& alpha, int n) {
  std::vector<Word> rel;
  rel.reserve(static_cast<std::size_t>(n) - 1);
  for (int i = 1; i < n; ++i) rel.push_back(bs_relator(alpha, i));
  return rel;
}

// t v_n t^-1 x_n^-1 v_n^-1
Word p_relator(const AlphabetRef& alpha, int n) {
  Word v = Word::from_letters(alpha, v_word(n).letters());
  Word t = Word::generator(alpha, n + 1);
  Word xn_inv = Word::generator(alpha, n, -1);
  return concat(concat(conjugate(v, t), xn_inv), inverse(v));
}

}  // namespace

Presentation make_G(int n) {
  require_n(n);
  auto alpha = Alphabet::make(x_names(n, false));
  return Presentation{alpha, g_relators(alpha, n), FamilyTag{"G", n}};
}

Presentation make_P(int n) {
  require_n(n);
  auto alpha = Alphabet::make(x_names(n, true));
  auto rel = g_relators(alpha, n);
  rel.push_back(p_relator(alpha, n));
  return Presentation{alpha, std::move(rel), FamilyTag{"P", n}};
}

Presentation make_Q(int n) {
  require_n(n);
  auto alpha = Alphabet::make(x_names(n, true));
  auto rel = g_relators(alpha, n);
  rel.push_back(p_relator(alpha, n));
  rel.push_back(Word::generator(alpha, n + 1));
  return Presentation{alpha, std::move(rel), FamilyTag{"Q", n}};
}

Presentation make_T(int n) {
  require_n(n);
  auto alpha = Alphabet::make(x_names(n, true));
  std::vector<Word> rel;
  for (int i = 1; i <= n + 1; ++i) rel.push_back(Word::generator(alpha, i));
  return Presentation{alpha, std::move(rel), FamilyTag{"T", n}};
}

Word w_word(int m) {
  if (m < 0) throw ParamError("w_word needs m >= 0");
  auto alpha = make_G(2).alphabet();
  Word x1 = Word::generator(alpha, 1);
  Word conj = conjugate(x1, power(Word::generator(alpha, 2), m));
  return commutator(conj, x1);
}

Word g_word(int n, int k) {
  require_n(n);
  if (k < 1) throw ParamError("g_word needs k >= 1");
  auto alpha = make_G(n).alphabet();
  Word u = power(Word::generator(alpha, n), k);
  for (int i = n - 1; i >= 1; --i) u = conjugate(Word::generator(alpha, i), u);
  return u;
}

Word v_word(int n) { return commutator(g_word(n, n), Word::generator(g_word(n, n).alphabet(), 1)); }

std::vector<ElementaryOp> standard_trivialization_sequence(int n) {
  require_n(n);
  std::vector<ElementaryOp> ops;
  const int r_idx = n - 1;  // the long relator t v t^-1 x_n^-1 v^-1
  const int t_idx = n;      // the relator t

  // Phase 1: reduce the long relator to x_n using the relator t.
  // Invert it to v x_n t v^-1 t^-1, absorb the trailing t^-1, then strip the
  // conjugating v one generator at a time and cancel the remaining t.
  ops.push_back(ElementaryOp::invert(r_idx));
  ops.push_back(ElementaryOp::multiply_right(r_idx, t_idx));  // v x_n t v^-1
  const Word v = v_word(n);
  for (Letter l : v.letters()) {
    ops.push_back(ElementaryOp::conjugate(r_idx, std::abs(l), l > 0 ? -1 : 1));
  }
  // now x_n t
  ops.push_back(ElementaryOp::invert(t_idx));                 // t -> t^-1
  ops.push_back(ElementaryOp::multiply_right(r_idx, t_idx));  // x_n t t^-1 = x_n
  ops.push_back(ElementaryOp::invert(t_idx));                 // restore t

  // Phase 2: descending i = n-1..1, turn x_{i+1} x_i x_{i+1}^-1 x_i^-2 into
  // x_i using the relator x_{i+1} sitting at index i.
  for (int i = n - 1; i >= 1; --i) {
    const int c_idx = i - 1;
    const int h_idx = i;  // holds x_{i+1}
    ops.push_back(ElementaryOp::conjugate(c_idx, i + 1, -1));  // x_i x_{i+1}^-1 x_i^-2 x_{i+1}
    ops.push_back(ElementaryOp::invert(h_idx));                // helper -> x_{i+1}^-1
    ops.push_back(ElementaryOp::multiply_right(c_idx, h_idx));  // x_i x_{i+1}^-1 x_i^-2
    ops.push_back(ElementaryOp::conjugate(c_idx, i, -1));       // x_{i+1}^-1 x_i^-1
    ops.push_back(ElementaryOp::invert(c_idx));                 // x_i x_{i+1}
    ops.push_back(ElementaryOp::multiply_right(c_idx, h_idx));  // x_i
    ops.push_back(ElementaryOp::invert(h_idx));                 // restore helper
  }
  return ops;
}

}  // namespace cgt
