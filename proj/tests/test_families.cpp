#include <doctest.h>

#include "cgt/families.hpp"

using namespace cgt;

TEST_CASE("G(n) family shape") {
  Presentation g2 = make_G(2);
  CHECK(g2.generator_count() == 2);
  REQUIRE(g2.relators().size() == 1);
  CHECK(g2.relators()[0] == Word::from_letters(g2.alphabet(), {2, 1, -2, -1, -1}));
  CHECK(g2.total_relator_length() == 5);

  Presentation g4 = make_G(4);
  CHECK(g4.generator_count() == 4);
  CHECK(g4.relators().size() == 3);
  CHECK(g4.total_relator_length() == 15);

  for (int n = 2; n <= 12; ++n) {
    Presentation g = make_G(n);
    CHECK(g.generator_count() == static_cast<std::size_t>(n));
    CHECK(g.relators().size() == static_cast<std::size_t>(n - 1));
    CHECK(g.total_relator_length() == 5 * (n - 1));
    for (const auto& r : g.relators()) {
      CHECK(cyclically_reduce(r).second.empty());  // relators cyclically reduced
    }
  }
  CHECK_THROWS_AS((void)make_G(1), ParamError);
  CHECK_THROWS_AS((void)make_G(0), ParamError);
}

TEST_CASE("witness words") {
  CHECK(w_word(0).empty());
  Word w1 = w_word(1);
  CHECK(w1 == Word::from_letters(w1.alphabet(), {2, 1, -2, 1, 2, -1, -2, -1}));
  CHECK(w_word(3).size() == 16);
  for (int m = 1; m <= 10; ++m) CHECK(w_word(m).size() == static_cast<std::size_t>(4 * m + 4));

  // conjugate contributions to the exponent sum cancel
  for (int m = 0; m <= 10; ++m) CHECK(exponent_sum(w_word(m), 2) == 0);

  Word g22 = g_word(2, 2);
  CHECK(g22 == Word::from_letters(g22.alphabet(), {2, 2, 1, -2, -2}));
  CHECK(v_word(2).size() == 12);
  for (int n = 2; n <= 12; ++n) {
    // total length const 2^n, with the constant pinned at 13 for n <= 12
    CHECK(v_word(n).size() == static_cast<std::size_t>(n + 1) << n);
    CHECK(v_word(n).size() <= static_cast<std::size_t>(13) << n);
    CHECK(exponent_sum(v_word(n), 1) == 0);
  }
}

TEST_CASE("P, Q, T families") {
  Presentation p2 = make_P(2);
  REQUIRE(p2.relators().size() == 2);
  CHECK(p2.generator_count() == 3);
  const Word& rel = p2.relators()[1];
  CHECK(rel.size() == 27);  // 1 + 12 + 1 + 1 + 12, no junction cancellation
  CHECK(rel.letters()[0] == 3);
  CHECK(rel.letters()[13] == -3);
  CHECK(rel.letters()[14] == -2);

  Presentation q2 = make_Q(2);
  CHECK(q2.generator_count() == 3);
  CHECK(q2.relators().size() == 3);
  CHECK(q2.is_balanced());
  CHECK(q2.relators()[2] == Word::generator(q2.alphabet(), 3));

  Presentation t3 = make_T(3);
  CHECK(t3.is_balanced());
  REQUIRE(t3.relators().size() == 4);
  for (int i = 1; i <= 4; ++i) {
    CHECK(t3.relators()[static_cast<std::size_t>(i - 1)] == Word::generator(t3.alphabet(), i));
  }

  for (int n = 2; n <= 12; ++n) {
    CHECK(make_Q(n).is_balanced());
    CHECK(make_T(n).is_balanced());
    CHECK(!make_P(n).is_balanced());
  }

  // relators of every family are freely and cyclically reduced
  for (int n = 2; n <= 6; ++n) {
    for (const Presentation& pres : {make_G(n), make_P(n), make_Q(n), make_T(n)}) {
      for (const auto& r : pres.relators()) {
        CHECK(cyclically_reduce(r).second.empty());
      }
    }
  }
}

TEST_CASE("elementary operations") {
  auto alpha = Alphabet::make({"x", "y"});
  Presentation p{alpha, {Word::generator(alpha, 2)}};

  Presentation inv = apply_op(p, ElementaryOp::invert(0));
  CHECK(inv.relators()[0] == Word::generator(alpha, 2, -1));

  Presentation conj = apply_op(p, ElementaryOp::conjugate(0, 1, 1));
  CHECK(conj.relators()[0] == Word::from_letters(alpha, {1, 2, -1}));

  // relators [t w, t] with w t-free: multiplying gives t w t after reduction
  auto a3 = Alphabet::make({"x", "t"});
  Presentation q{a3, {Word::from_letters(a3, {2, 1, 1}), Word::generator(a3, 2)}};
  Presentation mul = apply_op(q, ElementaryOp::multiply_right(0, 1));
  CHECK(mul.relators()[0] == Word::from_letters(a3, {2, 1, 1, 2}));

  CHECK_THROWS_AS((void)apply_op(p, ElementaryOp::invert(5)), ParamError);
  CHECK_THROWS_AS((void)apply_op(q, ElementaryOp::multiply_right(1, 1)), ParamError);

  // ops preserve the presentation frame and have inverses
  Presentation q2 = make_Q(2);
  std::vector<ElementaryOp> ops = {
      ElementaryOp::invert(1),
      ElementaryOp::conjugate(2, 1, -1),
      ElementaryOp::multiply_right(0, 2),
  };
  std::vector<std::vector<ElementaryOp>> undo = {
      {ElementaryOp::invert(1)},
      {ElementaryOp::conjugate(2, 1, 1)},
      {ElementaryOp::invert(2), ElementaryOp::multiply_right(0, 2), ElementaryOp::invert(2)},
  };
  for (std::size_t i = 0; i < ops.size(); ++i) {
    Presentation stepped = apply_op(q2, ops[i]);
    CHECK(stepped.generator_count() == q2.generator_count());
    CHECK(stepped.relators().size() == q2.relators().size());
    CHECK(stepped.is_balanced());
    Presentation back = apply_sequence(stepped, undo[i]);
    CHECK(presentations_equal(back, q2));
  }
}

TEST_CASE("presentations_equal uses relator multisets of exact words") {
  Presentation q2 = make_Q(2);
  CHECK(presentations_equal(q2, q2));
  std::vector<Word> rel = q2.relators();
  std::swap(rel[0], rel[2]);
  CHECK(presentations_equal(q2, Presentation{q2.alphabet(), rel}));
  // a cyclic rotation of a relator is a different word
  const auto& r0 = q2.relators()[0].letters();
  std::vector<Letter> rot(r0.begin() + 1, r0.end());
  rot.push_back(r0[0]);
  rel = q2.relators();
  rel[0] = Word::from_letters(q2.alphabet(), rot);
  CHECK(!presentations_equal(q2, Presentation{q2.alphabet(), rel}));
}

TEST_CASE("standard trivialization sequence reaches T(n)") {
  for (int n = 2; n <= 4; ++n) {
    Presentation q = make_Q(n);
    auto ops = standard_trivialization_sequence(n);
    CHECK(static_cast<std::int64_t>(ops.size()) <= q.total_relator_length());

    Presentation cur = q;
    for (const auto& op : ops) {
      cur = apply_op(cur, op);
      CHECK(cur.is_balanced());  // balanced after every prefix
    }
    CHECK(presentations_equal(cur, make_T(n)));
  }
}
