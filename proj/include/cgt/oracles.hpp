#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgt/families.hpp"
#include "cgt/words.hpp"

namespace cgt {

struct SearchCaps {
  std::int64_t max_word_length = 20;
  std::int64_t max_cost = 24;
  std::int64_t max_states = 2'000'000;
};

// A replayable certificate that a word is trivial: relator insertions (with
// implicit free reduction) taking it to the empty word. InsertRelator splices
// relator^sign at a letter position of the current reduced word and reduces.
// FreeReduceAll is accepted for interchange compatibility; it is a no-op
// because every intermediate word is kept reduced.
struct NullMove {
  enum class Kind { FreeReduceAll, InsertRelator };
  Kind kind = Kind::InsertRelator;
  int relator = 0;
  int sign = 1;
  int position = 0;

  static NullMove insert(int relator, int sign, int position) {
    return {Kind::InsertRelator, relator, sign, position};
  }
  static NullMove free_reduce_all() { return {Kind::FreeReduceAll, 0, 1, 0}; }
  bool operator==(const NullMove&) const = default;
};

struct NullSequence {
  std::vector<NullMove> moves;
  std::int64_t cost() const;  // number of InsertRelator moves
  bool operator==(const NullSequence&) const = default;
};

struct ReplayResult {
  Word final_word;
  std::int64_t cost = 0;
  std::int64_t peak = 0;  // max intermediate reduced length, initial word included
};

ReplayResult replay_null_sequence(const Presentation& p, const Word& w, const NullSequence& seq);

enum class ParallelMode { Auto, Serial, Parallel };

struct OracleOptions {
  ParallelMode parallel = ParallelMode::Auto;
};

struct AreaResult {
  std::int64_t cost = 0;
  NullSequence witness;
};

struct FillResult {
  std::int64_t peak = 0;
  NullSequence witness;
};

// Minimal number of relator insertions taking w to the empty word, searched
// breadth-first over freely reduced words of length <= caps.max_word_length.
// Returns nullopt on cap exhaustion; the oracle never claims nontriviality.
// Witness tie-break: lexicographically smallest move sequence under the move
// order (relator index, sign + before -, position).
std::optional<AreaResult> min_area(const Presentation& p, const Word& w, const SearchCaps& caps,
                                   const OracleOptions& opts = {});

// Minimal achievable peak (max intermediate reduced length) over null
// sequences for w; peak >= length(w) for nonempty w. The witness is the
// min_area witness at the smallest admitting length cap, so ties break the
// same way: fewest insertions, then lexicographically smallest moves.
std::optional<FillResult> fill_length(const Presentation& p, const Word& w,
                                      const SearchCaps& caps, const OracleOptions& opts = {});

// Reusable search engine with an absent-result cache: when a search exhausts
// the whole reachable cap-bounded state space without a filling, every
// visited state is recorded as fill-free at these caps and later queries
// prune against that set. Results are identical with or without the cache.
class AreaSearchEngine {
 public:
  AreaSearchEngine(const Presentation& p, const SearchCaps& caps, const OracleOptions& opts = {});
  ~AreaSearchEngine();
  AreaSearchEngine(const AreaSearchEngine&) = delete;
  AreaSearchEngine& operator=(const AreaSearchEngine&) = delete;

  std::optional<std::int64_t> min_cost(const Word& w);
  std::optional<AreaResult> search(const Word& w);

  std::int64_t cached_absent_states() const;

 private:
  struct Impl;
  Impl* impl_;
};

struct DehnProfileRow {
  std::int64_t length = 0;
  std::int64_t max_area = 0;
  bool exact = true;  // false when any trivial word of this length hit the caps
};

// Exact Dehn-function table at desk scale: for each word length <= max_length,
// the maximum algebraic area over trivial words of that length. Triviality is
// pre-screened by the word problem solver, which requires a G-family tag.
std::vector<DehnProfileRow> dehn_profile(const Presentation& p, std::int64_t max_length,
                                         const SearchCaps& caps, const OracleOptions& opts = {});

struct ScalingRow {
  int m = 0;
  std::int64_t builder_area = 0;            // area(build_w_diagram(m))
  std::optional<std::int64_t> oracle_area;  // min_area(G(2), w_m) when within caps
  std::string oracle_note;                  // "skipped: caps" when absent
  double ratio = 0.0;                       // builder_area(m+1) / builder_area(m)
};

std::vector<ScalingRow> scaling_report(int m_from, int m_to, const SearchCaps& caps,
                                       std::int64_t cell_budget,
                                       const OracleOptions& opts = {});

}  // namespace cgt
