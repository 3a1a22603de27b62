#include "cgt/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstring>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cgt/diagram_builders.hpp"
#include "cgt/diagrams.hpp"
#include "cgt/wordproblem.hpp"

namespace cgt {

std::int64_t NullSequence::cost() const {
  std::int64_t c = 0;
  for (const auto& m : moves) {
    if (m.kind == NullMove::Kind::InsertRelator) ++c;
  }
  return c;
}

ReplayResult replay_null_sequence(const Presentation& p, const Word& w, const NullSequence& seq) {
  if (!(*w.alphabet() == *p.alphabet()) && !(w.empty() && w.alphabet()->size() == 0)) {
    throw AlphabetMismatchError("replay: word not over the presentation alphabet");
  }
  std::vector<Letter> cur = w.letters();
  ReplayResult res;
  res.peak = static_cast<std::int64_t>(cur.size());
  for (const auto& m : seq.moves) {
    if (m.kind == NullMove::Kind::FreeReduceAll) continue;  // words are kept reduced
    if (m.relator < 0 || static_cast<std::size_t>(m.relator) >= p.relators().size()) {
      throw FormatError("replay: relator index out of range");
    }
    if (m.sign != 1 && m.sign != -1) throw FormatError("replay: bad sign");
    if (m.position < 0 || static_cast<std::size_t>(m.position) > cur.size()) {
      throw FormatError("replay: position out of range");
    }
    const Word& rel = p.relators()[static_cast<std::size_t>(m.relator)];
    Word ins = m.sign > 0 ? rel : inverse(rel);
    std::vector<Letter> next(cur.begin(), cur.begin() + m.position);
    auto push = [&next](Letter l) {
      if (!next.empty() && next.back() == -l) {
        next.pop_back();
      } else {
        next.push_back(l);
      }
    };
    for (Letter l : ins.letters()) push(l);
    for (std::size_t i = static_cast<std::size_t>(m.position); i < cur.size(); ++i) push(cur[i]);
    cur = std::move(next);
    ++res.cost;
    res.peak = std::max(res.peak, static_cast<std::int64_t>(cur.size()));
  }
  res.final_word = Word::from_letters(p.alphabet(), cur);
  return res;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t hash_u128(u128 v) {
  return mix64(static_cast<std::uint64_t>(v)) ^ (mix64(static_cast<std::uint64_t>(v >> 64)) << 1);
}

// Open-addressing map from packed states to node indices. Key 0 is reserved
// for "empty slot"; the empty word never becomes a stored state because the
// search returns as soon as it is generated.
class StateMap {
 public:
  explicit StateMap(std::size_t initial_pow2 = 12) { reset(initial_pow2); }

  void reset(std::size_t pow2) {
    keys_.assign(std::size_t{1} << pow2, 0);
    vals_.assign(std::size_t{1} << pow2, -1);
    mask_ = keys_.size() - 1;
    size_ = 0;
  }

  std::size_t size() const { return size_; }

  bool contains(u128 k) const {
    std::size_t i = hash_u128(k) & mask_;
    while (keys_[i] != 0) {
      if (keys_[i] == k) return true;
      i = (i + 1) & mask_;
    }
    return false;
  }

  // true when inserted, false when already present
  bool insert(u128 k, std::int32_t v) {
    if (size_ * 5 >= keys_.size() * 3) grow();
    std::size_t i = hash_u128(k) & mask_;
    while (keys_[i] != 0) {
      if (keys_[i] == k) return false;
      i = (i + 1) & mask_;
    }
    keys_[i] = k;
    vals_[i] = v;
    ++size_;
    return true;
  }

  template <typename F>
  void for_each_key(F f) const {
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      if (keys_[i] != 0) f(keys_[i]);
    }
  }

 private:
  void grow() {
    std::vector<u128> old_keys = std::move(keys_);
    std::vector<std::int32_t> old_vals = std::move(vals_);
    keys_.assign(old_keys.size() * 2, 0);
    vals_.assign(old_vals.size() * 2, -1);
    mask_ = keys_.size() - 1;
    size_ = 0;
    for (std::size_t i = 0; i < old_keys.size(); ++i) {
      if (old_keys[i] != 0) insert(old_keys[i], old_vals[i]);
    }
  }

  std::vector<u128> keys_;
  std::vector<std::int32_t> vals_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
};

// moves ordered (relator asc, +1 before -1, position asc) == numeric order
std::uint32_t encode_move(int rel, int sign, int pos) {
  return (static_cast<std::uint32_t>(rel) << 17) |
         (static_cast<std::uint32_t>(sign < 0 ? 1 : 0) << 16) | static_cast<std::uint32_t>(pos);
}

NullMove decode_move(std::uint32_t m) {
  return NullMove::insert(static_cast<int>(m >> 17), (m >> 16) & 1 ? -1 : 1,
                          static_cast<int>(m & 0xffffu));
}

}  // namespace

struct AreaSearchEngine::Impl {
  Presentation pres;
  SearchCaps caps;
  OracleOptions opts;

  int bits = 0;         // bits per packed letter
  int capacity = 0;     // max packable length
  int rmax = 0;         // longest relator
  std::vector<std::vector<std::int8_t>> rel_plus;
  std::vector<std::vector<std::int8_t>> rel_minus;

  StateMap absent;  // states certified fill-free at these caps

  struct Node {
    u128 state;
    std::int32_t parent;
    std::uint32_t move;
  };

  Impl(const Presentation& p, const SearchCaps& c, const OracleOptions& o)
      : pres(p), caps(c), opts(o) {
    if (caps.max_word_length <= 0 || caps.max_cost <= 0 || caps.max_states <= 0) {
      throw ParamError("search caps must be positive");
    }
    int k = static_cast<int>(pres.alphabet()->size());
    if (k < 1) throw ParamError("oracle needs a nonempty alphabet");
    if (k > 127) throw ParamError("oracle supports at most 127 generators");
    bits = std::bit_width(static_cast<unsigned>(2 * k));
    capacity = 128 / bits;
    if (caps.max_word_length > capacity) {
      throw ParamError("max_word_length " + std::to_string(caps.max_word_length) +
                       " exceeds packed state capacity " + std::to_string(capacity) +
                       " for this alphabet");
    }
    for (const auto& r : pres.relators()) {
      std::vector<std::int8_t> plus, minus;
      for (Letter l : r.letters()) plus.push_back(static_cast<std::int8_t>(l));
      for (auto it = r.letters().rbegin(); it != r.letters().rend(); ++it) {
        minus.push_back(static_cast<std::int8_t>(-*it));
      }
      rmax = std::max(rmax, static_cast<int>(plus.size()));
      rel_plus.push_back(std::move(plus));
      rel_minus.push_back(std::move(minus));
    }
    if (rmax == 0) rmax = 1;  // presentations with only empty relators
  }

  u128 encode(const std::int8_t* w, int len) const {
    u128 acc = 0;
    for (int i = 0; i < len; ++i) {
      int l = w[i];
      u128 code = static_cast<u128>((std::abs(l) - 1) * 2 + (l < 0 ? 1 : 0) + 1);
      acc |= code << (bits * i);
    }
    return acc;
  }

  int decode(u128 s, std::int8_t* out) const {
    const u128 mask = (u128{1} << bits) - 1;
    int len = 0;
    while (s != 0) {
      int code = static_cast<int>(s & mask) - 1;
      out[len++] = static_cast<std::int8_t>((code % 2) ? -(code / 2 + 1) : (code / 2 + 1));
      s >>= bits;
    }
    return len;
  }

  int splice_reduce(const std::int8_t* w, int len, int pos, const std::vector<std::int8_t>& rel,
                    std::int8_t* out) const {
    int n = 0;
    for (int i = 0; i < pos; ++i) out[n++] = w[i];
    auto push = [&](std::int8_t c) {
      if (n > 0 && out[n - 1] == -c) {
        --n;
      } else {
        out[n++] = c;
      }
    };
    for (std::int8_t c : rel) push(c);
    for (int i = pos; i < len; ++i) push(w[i]);
    return n;
  }

  struct Found {
    std::int32_t parent = -1;
    std::uint32_t move = 0;
  };

  struct Candidate {
    u128 state;
    std::int32_t parent;
    std::uint32_t move;
  };

  // Generates the candidates of nodes [lo, hi) in canonical order; an empty
  // result word short-circuits via `found`.
  void generate(const std::vector<Node>& nodes, std::size_t lo, std::size_t hi,
                std::int64_t next_depth, std::vector<Candidate>& out,
                std::optional<Found>& found) const {
    std::vector<std::int8_t> buf_storage(static_cast<std::size_t>(capacity) + 1);
    std::vector<std::int8_t> tmp_storage(static_cast<std::size_t>(capacity + rmax) + 1);
    std::int8_t* buf = buf_storage.data();
    std::int8_t* tmp = tmp_storage.data();
    const std::int64_t remaining = caps.max_cost - next_depth;
    const std::int64_t reachable_len = remaining * rmax;
    for (std::size_t idx = lo; idx < hi && !found; ++idx) {
      int len = decode(nodes[idx].state, buf);
      for (int r = 0; r < static_cast<int>(rel_plus.size()); ++r) {
        for (int sgn = 0; sgn < 2; ++sgn) {
          const auto& rel = sgn == 0 ? rel_plus[static_cast<std::size_t>(r)]
                                     : rel_minus[static_cast<std::size_t>(r)];
          for (int pos = 0; pos <= len; ++pos) {
            int nl = splice_reduce(buf, len, pos, rel, tmp);
            if (nl == 0) {
              found = Found{static_cast<std::int32_t>(idx), encode_move(r, sgn == 0 ? 1 : -1, pos)};
              return;
            }
            if (nl > caps.max_word_length) continue;
            if (nl > reachable_len) continue;
            u128 s = encode(tmp, nl);
            if (absent.contains(s)) continue;
            out.push_back(
                {s, static_cast<std::int32_t>(idx), encode_move(r, sgn == 0 ? 1 : -1, pos)});
          }
        }
      }
    }
  }

  bool use_parallel(std::size_t layer_size) const {
    switch (opts.parallel) {
      case ParallelMode::Serial:
        return false;
      case ParallelMode::Parallel:
        return true;
      case ParallelMode::Auto:
#ifdef _OPENMP
        return layer_size >= 512;
#else
        return false;
#endif
    }
    return false;
  }

  struct RunResult {
    std::optional<Found> found;
    bool exhausted = false;  // full cap-bounded closure explored
  };

  RunResult run(const Word& w, std::vector<Node>& nodes, StateMap& visited) {
    RunResult res;
    const int len0 = static_cast<int>(w.size());
    if (len0 > caps.max_word_length) return res;  // the start state already violates the cap
    std::vector<std::int8_t> buf(static_cast<std::size_t>(capacity) + 1);
    for (int i = 0; i < len0; ++i) {
      buf[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(w.letters()[static_cast<std::size_t>(i)]);
    }
    u128 s0 = encode(buf.data(), len0);
    if (absent.contains(s0)) {
      res.exhausted = true;
      return res;
    }
    nodes.push_back({s0, -1, 0});
    visited.insert(s0, 0);

    std::size_t layer_lo = 0, layer_hi = 1;
    bool aborted = false;
    for (std::int64_t depth = 1; depth <= caps.max_cost && !aborted; ++depth) {
      std::vector<Candidate> cands;
      std::optional<Found> found;
#ifdef _OPENMP
      if (use_parallel(layer_hi - layer_lo)) {
        // Deterministic parallel frontier expansion: contiguous chunks in
        // node order, merged in thread order, so the surviving candidate set
        // and the first empty-word hit match the serial reference exactly.
        const int threads = omp_get_max_threads();
        std::vector<std::vector<Candidate>> parts(static_cast<std::size_t>(threads));
        std::vector<std::optional<Found>> part_found(static_cast<std::size_t>(threads));
        const std::size_t total = layer_hi - layer_lo;
        const std::size_t chunk = (total + static_cast<std::size_t>(threads) - 1) /
                                  static_cast<std::size_t>(threads);
#pragma omp parallel num_threads(threads)
        {
          const int t = omp_get_thread_num();
          const std::size_t lo = layer_lo + std::min(total, static_cast<std::size_t>(t) * chunk);
          const std::size_t hi = layer_lo + std::min(total, (static_cast<std::size_t>(t) + 1) * chunk);
          if (lo < hi) {
            generate(nodes, lo, hi, depth, parts[static_cast<std::size_t>(t)],
                     part_found[static_cast<std::size_t>(t)]);
          }
        }
        for (int t = 0; t < threads && !found; ++t) {
          for (const auto& c : parts[static_cast<std::size_t>(t)]) cands.push_back(c);
          if (part_found[static_cast<std::size_t>(t)]) found = part_found[static_cast<std::size_t>(t)];
        }
      } else {
        generate(nodes, layer_lo, layer_hi, depth, cands, found);
      }
#else
      generate(nodes, layer_lo, layer_hi, depth, cands, found);
#endif
      if (found) {
        res.found = found;
        return res;
      }
      for (const auto& c : cands) {
        if (visited.insert(c.state, static_cast<std::int32_t>(nodes.size()))) {
          nodes.push_back({c.state, c.parent, c.move});
          if (static_cast<std::int64_t>(nodes.size()) > caps.max_states) {
            aborted = true;
            break;
          }
        }
      }
      if (nodes.size() == layer_hi) {
        res.exhausted = !aborted;
        return res;
      }
      layer_lo = layer_hi;
      layer_hi = nodes.size();
    }
    return res;  // cost cap or state cap: not exhausted, no conclusion
  }

  std::optional<AreaResult> search(const Word& w, bool want_witness) {
    if (!(*w.alphabet() == *pres.alphabet()) && !(w.empty() && w.alphabet()->size() == 0)) {
      throw AlphabetMismatchError("oracle: word not over the presentation alphabet");
    }
    if (w.empty()) return AreaResult{0, {}};

    std::vector<Node> nodes;
    StateMap visited;
    RunResult r = run(w, nodes, visited);
    if (!r.found) {
      if (r.exhausted) {
        visited.for_each_key([&](u128 s) { absent.insert(s, 0); });
      }
      return std::nullopt;
    }

    AreaResult out;
    std::vector<NullMove> rev;
    rev.push_back(decode_move(r.found->move));
    std::int32_t cur = r.found->parent;
    while (cur >= 0 && nodes[static_cast<std::size_t>(cur)].parent >= 0) {
      rev.push_back(decode_move(nodes[static_cast<std::size_t>(cur)].move));
      cur = nodes[static_cast<std::size_t>(cur)].parent;
    }
    out.cost = static_cast<std::int64_t>(rev.size());
    if (want_witness) {
      out.witness.moves.assign(rev.rbegin(), rev.rend());
    }
    return out;
  }
};

AreaSearchEngine::AreaSearchEngine(const Presentation& p, const SearchCaps& caps,
                                   const OracleOptions& opts)
    : impl_(new Impl(p, caps, opts)) {}

AreaSearchEngine::~AreaSearchEngine() { delete impl_; }

std::optional<std::int64_t> AreaSearchEngine::min_cost(const Word& w) {
  auto r = impl_->search(w, false);
  if (!r) return std::nullopt;
  return r->cost;
}

std::optional<AreaResult> AreaSearchEngine::search(const Word& w) { return impl_->search(w, true); }

std::int64_t AreaSearchEngine::cached_absent_states() const {
  return static_cast<std::int64_t>(impl_->absent.size());
}

std::optional<AreaResult> min_area(const Presentation& p, const Word& w, const SearchCaps& caps,
                                   const OracleOptions& opts) {
  AreaSearchEngine engine(p, caps, opts);
  return engine.search(w);
}

std::optional<FillResult> fill_length(const Presentation& p, const Word& w, const SearchCaps& caps,
                                      const OracleOptions& opts) {
  if (w.empty()) return FillResult{0, {}};
  for (std::int64_t peak = static_cast<std::int64_t>(w.size()); peak <= caps.max_word_length;
       ++peak) {
    SearchCaps tight = caps;
    tight.max_word_length = peak;
    AreaSearchEngine engine(p, tight, opts);
    if (auto r = engine.search(w)) {
      FillResult out;
      out.witness = std::move(r->witness);
      out.peak = replay_null_sequence(p, w, out.witness).peak;
      return out;
    }
  }
  return std::nullopt;
}

std::vector<DehnProfileRow> dehn_profile(const Presentation& p, std::int64_t max_length,
                                         const SearchCaps& caps, const OracleOptions& opts) {
  if (!p.family() || p.family()->tag != "G") {
    throw ParamError("dehn_profile needs a G-family presentation (solver pre-screen)");
  }
  const int n = p.family()->n;
  const int k = static_cast<int>(p.alphabet()->size());

  std::vector<DehnProfileRow> rows;
  for (std::int64_t len = 0; len <= max_length; ++len) {
    DehnProfileRow row{len, 0, true};
    // enumerate freely reduced words of this exact length
    std::vector<std::vector<Letter>> words;
    std::vector<Letter> cur;
    auto letter_of = [&](int c) {  // 0 -> +1, 1 -> -1, 2 -> +2, ...
      return (c % 2) ? -(c / 2 + 1) : (c / 2 + 1);
    };
    std::function<void()> rec = [&]() {
      if (static_cast<std::int64_t>(cur.size()) == len) {
        words.push_back(cur);
        return;
      }
      for (int c = 0; c < 2 * k; ++c) {
        Letter l = letter_of(c);
        if (!cur.empty() && cur.back() == -l) continue;
        cur.push_back(l);
        rec();
        cur.pop_back();
      }
    };
    rec();

    std::int64_t row_max = 0;
    bool row_exact = true;
    const bool par = opts.parallel != ParallelMode::Serial;
#ifdef _OPENMP
#pragma omp parallel for if (par) schedule(dynamic, 16) reduction(max : row_max) \
    reduction(&& : row_exact)
#else
    (void)par;
#endif
    for (std::size_t i = 0; i < words.size(); ++i) {
      Word w = from_reduced_unchecked(p.alphabet(), words[i]);
      WpVerdict v = is_trivial_G(n, w);
      if (v.is_nontrivial()) continue;
      if (v.is_undecided()) {
        row_exact = false;
        continue;
      }
      OracleOptions serial_opts;
      serial_opts.parallel = ParallelMode::Serial;  // already parallel across words
      AreaSearchEngine engine(p, caps, serial_opts);
      auto r = engine.min_cost(w);
      if (!r) {
        row_exact = false;
      } else {
        row_max = std::max(row_max, *r);
      }
    }
    row.max_area = row_max;
    row.exact = row_exact;
    rows.push_back(row);
  }
  return rows;
}

std::vector<ScalingRow> scaling_report(int m_from, int m_to, const SearchCaps& caps,
                                       std::int64_t cell_budget, const OracleOptions& opts) {
  std::vector<ScalingRow> rows;
  if (m_from > m_to) return rows;
  if (m_from < 1) throw ParamError("scaling_report needs m >= 1");
  Presentation g2 = make_G(2);
  for (int m = m_from; m <= m_to; ++m) {
    ScalingRow row;
    row.m = m;
    VanKampenDiagram d = build_w_diagram(m, cell_budget);
    row.builder_area = area(d);
    const std::int64_t next_area = 2 * ((std::int64_t{1} << (m + 1)) - 1);
    row.ratio = static_cast<double>(next_area) / static_cast<double>(row.builder_area);
    if (auto r = min_area(g2, w_word(m), caps, opts)) {
      row.oracle_area = r->cost;
    } else {
      row.oracle_note = "skipped: caps";
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cgt
