// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line. Tolerances and caps are pinned here, in code:
//   - oracle caps for the doubling criterion: max_word_length 20,
//     max_cost 20, max_states 20M;
//   - oracle caps for the equivalence sweep: max_word_length 14,
//     max_cost 40, max_states 8M (generous: every trivial word of length
//     <= 8 already fills within peak 12);
//   - the exponent bit cap for the n = 4 tower witness: 2^17 bits.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "cgt/diagram_builders.hpp"
#include "cgt/json_io.hpp"
#include "cgt/oracles.hpp"
#include "cgt/wordproblem.hpp"

using namespace cgt;

namespace {

struct Criterion {
  std::string id;
  std::string title;
  bool ok = true;
  std::vector<std::string> failures;

  Criterion(std::string id_, std::string title_) : id(std::move(id_)), title(std::move(title_)) {}

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
    CHECK_MESSAGE(cond, what);
  }

  ~Criterion() {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << title << "\n";
    for (const auto& f : failures) std::cout << "       - " << f << "\n";
    std::cout.flush();
  }
};

std::vector<Word> all_reduced_words(const AlphabetRef& a, int max_len) {
  std::vector<Word> out;
  std::vector<Letter> cur;
  const int k = static_cast<int>(a->size());
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.push_back(from_reduced_unchecked(a, cur));
      return;
    }
    for (int c = 0; c < 2 * k; ++c) {
      Letter l = (c % 2) ? -(c / 2 + 1) : (c / 2 + 1);
      if (!cur.empty() && cur.back() == -l) continue;
      cur.push_back(l);
      rec(remaining - 1);
      cur.pop_back();
    }
  };
  for (int len = 0; len <= max_len; ++len) rec(len);
  return out;
}

SearchCaps doubling_caps() {
  SearchCaps caps;
  caps.max_word_length = 20;
  caps.max_cost = 20;
  caps.max_states = 20'000'000;
  return caps;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("criterion 1: family structure for n = 2..10") {
  Criterion c("1", "G(n) has n generators, n-1 relators of total length 5(n-1); Q(n) balanced");
  for (int n = 2; n <= 10; ++n) {
    Presentation g = make_G(n);
    c.expect(g.generator_count() == static_cast<std::size_t>(n),
             "G(" + std::to_string(n) + ") generator count");
    c.expect(g.relators().size() == static_cast<std::size_t>(n - 1),
             "G(" + std::to_string(n) + ") relator count");
    c.expect(g.total_relator_length() == 5 * (n - 1),
             "G(" + std::to_string(n) + ") total relator length");
    c.expect(make_Q(n).is_balanced(), "Q(" + std::to_string(n) + ") balanced");
  }
}

TEST_CASE("criterion 2: BS identities, exact big-integer equality") {
  Criterion c("2", "normal_form_bs(x2^m x1 x2^-m) = x1^(2^m) for m = 1..20");
  auto alpha = make_G(2).alphabet();
  for (int m = 1; m <= 20; ++m) {
    Word w = conjugate(Word::generator(alpha, 1), power(Word::generator(alpha, 2), m));
    BsNormalForm nf = normal_form_bs(w);
    bool exact = nf.p == 0 && nf.q == 0 && nf.m.is_exact() &&
                 nf.m.exact_value() == BigInt::power_of_two(static_cast<std::uint64_t>(m));
    c.expect(exact, "m = " + std::to_string(m));
  }
}

TEST_CASE("criterion 3: triviality of the tower witnesses") {
  Criterion c("3", "is_trivial_G(n, v_n) = Trivial (n=2,3 default cap; n=4 raised); x1 nontrivial");
  c.expect(is_trivial_G(2, v_word(2)).is_trivial(), "v_2 trivial at the default cap");
  c.expect(is_trivial_G(3, v_word(3)).is_trivial(), "v_3 trivial at the default cap");
  WpCaps raised;
  raised.bit_cap = std::int64_t{1} << 17;
  c.expect(is_trivial_G(4, v_word(4), raised).is_trivial(), "v_4 trivial at bit cap 2^17");
  c.expect(is_trivial_G(2, Word::generator(make_G(2).alphabet(), 1)).is_nontrivial(),
           "x1 nontrivial in G(2)");
}

TEST_CASE("criterion 4: doubling at desk scale") {
  Criterion c("4", "min_area(G(2), w_m) = 2(2^m - 1) = builder area for m = 1, 2, 3; ratios -> 2");
  Presentation g2 = make_G(2);
  SearchCaps caps = doubling_caps();
  std::vector<std::int64_t> areas;
  for (int m = 1; m <= 3; ++m) {
    auto r = min_area(g2, w_word(m), caps);
    if (!r) {
      c.expect(false, "oracle exhausted caps at m = " + std::to_string(m));
      return;
    }
    const std::int64_t expected = 2 * ((std::int64_t{1} << m) - 1);
    c.expect(r->cost == expected, "min_area(w_" + std::to_string(m) + ") = " +
                                      std::to_string(r->cost) + ", expected " +
                                      std::to_string(expected));
    c.expect(r->cost == area(build_w_diagram(m)),
             "oracle matches builder area at m = " + std::to_string(m));
    ReplayResult rep = replay_null_sequence(g2, w_word(m), r->witness);
    c.expect(rep.final_word.empty() && rep.cost == r->cost,
             "witness replays at m = " + std::to_string(m));
    areas.push_back(r->cost);
  }
  c.expect(areas == std::vector<std::int64_t>{2, 6, 14}, "areas are 2, 6, 14");
  // successive ratios from the builder formula decrease toward 2
  double prev = 0;
  for (int m = 1; m <= 9; ++m) {
    double ratio = static_cast<double>(2 * ((1 << (m + 1)) - 1)) /
                   static_cast<double>(2 * ((1 << m) - 1));
    if (m > 1) c.expect(ratio < prev, "ratio decreases at m = " + std::to_string(m));
    prev = ratio;
  }
  c.expect(prev < 2.01, "ratio approaches 2");
}

TEST_CASE("criterion 5: diagram validity gate") {
  Criterion c("5", "builders valid for m = 1..10 with exact areas; single-dart mutations fail");
  for (int m = 1; m <= 10; ++m) {
    VanKampenDiagram dp = build_power_diagram(m);
    c.expect(validate(dp).ok(), "power diagram valid at m = " + std::to_string(m));
    c.expect(area(dp) == (std::int64_t{1} << m) - 1,
             "power diagram area 2^m - 1 at m = " + std::to_string(m));
    VanKampenDiagram dw = build_w_diagram(m);
    c.expect(validate(dw).ok(), "w diagram valid at m = " + std::to_string(m));
    c.expect(area(dw) == 2 * ((std::int64_t{1} << m) - 1),
             "w diagram area 2(2^m - 1) at m = " + std::to_string(m));
  }
  for (const VanKampenDiagram& d : {build_power_diagram(2), build_w_diagram(2)}) {
    const std::int32_t n = static_cast<std::int32_t>(d.darts.size());
    bool all_fail = true;
    for (std::int32_t i = 0; i < n; ++i) {
      VanKampenDiagram label_mut = d;
      label_mut.darts[static_cast<std::size_t>(i)].label =
          -label_mut.darts[static_cast<std::size_t>(i)].label;
      all_fail = all_fail && !validate(label_mut).ok();
      VanKampenDiagram next_mut = d;
      next_mut.darts[static_cast<std::size_t>(i)].next =
          (next_mut.darts[static_cast<std::size_t>(i)].next + 1) % n;
      all_fail = all_fail && !validate(next_mut).ok();
      VanKampenDiagram twin_mut = d;
      twin_mut.darts[static_cast<std::size_t>(i)].twin =
          (twin_mut.darts[static_cast<std::size_t>(i)].twin + 1) % n;
      all_fail = all_fail && !validate(twin_mut).ok();
    }
    c.expect(all_fail, "every single-dart mutation fails validation");
  }
}

TEST_CASE("criterion 6: t-annulus structure at n = 2") {
  Criterion c("6", "x_2 diagram over P(2): valid, one t-annulus, inner boundary v_2^(+-1)");
  VanKampenDiagram d = build_xn_diagram(2);
  c.expect(validate(d).ok(), "diagram valid");
  c.expect(boundary_word(d) == Word::generator(d.presentation->alphabet(), 2), "boundary is x2");
  auto annuli = t_annuli(d);
  c.expect(annuli.size() == 1, "exactly one t-annulus");
  if (annuli.size() == 1) {
    const Word& inner = annuli[0].inner_boundary;
    Word v = Word::from_letters(d.presentation->alphabet(), v_word(2).letters());
    bool matches = false;
    for (int sign : {1, -1}) {
      Word target = sign > 0 ? v : inverse(v);
      if (inner.size() != target.size()) continue;
      for (std::size_t off = 0; off < target.size() && !matches; ++off) {
        bool same = true;
        for (std::size_t k = 0; k < target.size() && same; ++k) {
          same = inner.letters()[k] == target.letters()[(off + k) % target.size()];
        }
        matches = same;
      }
    }
    c.expect(matches, "inner boundary is a power (+-1) of v_2");
    for (Letter l : inner.letters()) {
      c.expect(std::abs(l) != 3, "inner boundary t-free");
    }
  }
}

TEST_CASE("criterion 7: trivialization replay") {
  Criterion c("7", "Q(n) + standard sequence = {x1..xn, t} for n = 2, 3, 4; balanced prefixes");
  double worst_ratio = 0;
  for (int n = 2; n <= 4; ++n) {
    Presentation q = make_Q(n);
    auto ops = standard_trivialization_sequence(n);
    Presentation cur = q;
    bool balanced = true;
    for (const auto& op : ops) {
      cur = apply_op(cur, op);
      balanced = balanced && cur.is_balanced();
    }
    c.expect(balanced, "balanced after every prefix at n = " + std::to_string(n));
    c.expect(presentations_equal(cur, make_T(n)),
             "relator multiset is {x1..xn, t} at n = " + std::to_string(n));
    double ratio = static_cast<double>(ops.size()) / static_cast<double>(q.total_relator_length());
    worst_ratio = std::max(worst_ratio, ratio);
    c.expect(static_cast<std::int64_t>(ops.size()) <= q.total_relator_length(),
             "sequence length <= C * |Q(n)| with C = 1 at n = " + std::to_string(n));
  }
  std::cout << "       recorded C: sequence length <= C * total relator length, C = 1"
            << " (worst measured ratio " << worst_ratio << ")\n";
}

TEST_CASE("criterion 8: oracle and solver agree on every word of length <= 8") {
  Criterion c("8", "min_area finds a filling iff is_trivial_G says Trivial; 0 disagreements");
  Presentation g2 = make_G(2);
  SearchCaps caps;
  caps.max_word_length = 14;
  caps.max_cost = 40;
  caps.max_states = 8'000'000;
  AreaSearchEngine engine(g2, caps);
  std::int64_t disagreements = 0, trivial = 0, words = 0;
  for (const Word& w : all_reduced_words(g2.alphabet(), 8)) {
    ++words;
    bool by_solver = is_trivial_G(2, w).is_trivial();
    bool by_oracle = engine.min_cost(w).has_value();
    trivial += by_solver;
    if (by_solver != by_oracle) ++disagreements;
  }
  c.expect(words == 13121, "enumerated all 13121 reduced words");
  c.expect(disagreements == 0,
           "disagreement count is " + std::to_string(disagreements) + ", expected 0");
  std::cout << "       " << words << " words, " << trivial << " trivial, "
            << engine.cached_absent_states() << " states certified fill-free\n";
}

TEST_CASE("criterion 9: determinism of witnesses and reports") {
  Criterion c("9", "criteria 4 and 7 outputs are byte-identical across runs and thread modes");
  namespace fs = std::filesystem;
  fs::path dir = fs::path("acceptance_tmp");
  fs::create_directories(dir);

  Presentation g2 = make_G(2);
  SearchCaps caps = doubling_caps();
  std::vector<std::string> witness_files;
  for (int run = 0; run < 2; ++run) {
    for (ParallelMode mode : {ParallelMode::Serial, ParallelMode::Parallel}) {
      OracleOptions opts;
      opts.parallel = mode;
      std::ostringstream name;
      name << "witness_run" << run << (mode == ParallelMode::Serial ? "_serial" : "_parallel")
           << ".json";
      json all = json::array();
      for (int m = 1; m <= 3; ++m) {
        auto r = min_area(g2, w_word(m), caps, opts);
        REQUIRE(r.has_value());
        all.push_back(null_sequence_to_json(r->witness));
      }
      fs::path p = dir / name.str();
      std::ofstream(p, std::ios::binary) << all.dump(2);
      witness_files.push_back(p.string());
    }
  }
  std::string first = read_file(witness_files[0]);
  c.expect(!first.empty(), "witness file written");
  for (const auto& f : witness_files) {
    c.expect(read_file(f) == first, "witness bytes identical: " + f);
  }

  // the scaling report, twice in each mode
  std::vector<std::string> reports;
  for (int run = 0; run < 2; ++run) {
    for (ParallelMode mode : {ParallelMode::Serial, ParallelMode::Parallel}) {
      OracleOptions opts;
      opts.parallel = mode;
      reports.push_back(scaling_report_to_csv(scaling_report(1, 3, caps, 1 << 20, opts)));
    }
  }
  for (const auto& r : reports) c.expect(r == reports[0], "scaling report bytes identical");

  // criterion 7's op sequences and final presentations are pure functions
  for (int n = 2; n <= 4; ++n) {
    auto a = ops_to_json(standard_trivialization_sequence(n)).dump();
    auto b = ops_to_json(standard_trivialization_sequence(n)).dump();
    c.expect(a == b, "trivialization ops identical at n = " + std::to_string(n));
    auto pa = presentation_to_json(apply_sequence(make_Q(n), standard_trivialization_sequence(n)));
    auto pb = presentation_to_json(apply_sequence(make_Q(n), standard_trivialization_sequence(n)));
    c.expect(pa.dump() == pb.dump(), "replayed presentation identical at n = " + std::to_string(n));
  }
}
