#include "cgt/diagram_builders.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>

namespace cgt {

namespace {

// Matches every non-outer face orbit against relator^{+-1} rotations and
// records (relator, sign, offset). Throws when a face spells no relator.
void assign_faces(VanKampenDiagram& d) {
  d.faces.clear();
  auto orbits = face_orbits(d);
  std::int32_t outer_orbit = -1;
  for (std::size_t fi = 0; fi < orbits.size(); ++fi) {
    for (std::int32_t dart : orbits[fi]) {
      if (dart == d.outer_face_dart) outer_orbit = static_cast<std::int32_t>(fi);
    }
  }
  if (outer_orbit < 0) throw Error("assign_faces: outer face dart not found");
  const auto& relators = d.presentation->relators();
  for (std::size_t fi = 0; fi < orbits.size(); ++fi) {
    if (static_cast<std::int32_t>(fi) == outer_orbit) continue;
    const auto& orbit = orbits[fi];
    FaceInfo info;
    info.darts = orbit;
    bool matched = false;
    for (std::size_t r = 0; r < relators.size() && !matched; ++r) {
      for (int sign : {1, -1}) {
        std::vector<Letter> expect =
            sign > 0 ? relators[r].letters() : inverse(relators[r]).letters();
        if (expect.size() != orbit.size()) continue;
        for (std::size_t off = 0; off < orbit.size() && !matched; ++off) {
          bool ok = true;
          for (std::size_t k = 0; k < orbit.size() && ok; ++k) {
            std::size_t at = (off + k) % orbit.size();
            ok = d.darts[static_cast<std::size_t>(orbit[at])].label == expect[k];
          }
          if (ok) {
            info.relator = static_cast<std::int32_t>(r);
            info.sign = sign;
            info.rotation_offset = static_cast<std::int32_t>(off);
            matched = true;
          }
        }
        if (matched) break;
      }
    }
    if (!matched) throw Error("assign_faces: a face does not spell any relator");
    d.faces.push_back(std::move(info));
  }
}

// Axis-aligned planar grid with counterclockwise rotations; used by the
// staircase builders. Edge insertion order fixes dart ids.
class GridBuilder {
 public:
  void add_edge(std::int64_t x1, std::int64_t y1, std::int64_t x2, std::int64_t y2, Letter label) {
    std::int32_t a = static_cast<std::int32_t>(darts_.size());
    darts_.push_back({a + 1, -1, label});
    darts_.push_back({a, -1, static_cast<Letter>(-label)});
    int dir;
    if (y1 == y2) {
      dir = x2 > x1 ? kEast : kWest;
    } else {
      dir = y2 > y1 ? kNorth : kSouth;
    }
    place(x1, y1, dir, a);
    place(x2, y2, opposite(dir), a + 1);
  }

  std::int32_t dart_at(std::int64_t x, std::int64_t y, int dir) const {
    auto it = slots_.find({x, y});
    if (it == slots_.end() || it->second[static_cast<std::size_t>(dir)] < 0) {
      throw Error("grid builder: no dart at requested slot");
    }
    return it->second[static_cast<std::size_t>(dir)];
  }

  std::int32_t twin_of(std::int32_t dart) const {
    return darts_[static_cast<std::size_t>(dart)].twin;
  }

  VanKampenDiagram finish(std::shared_ptr<const Presentation> p, Word boundary,
                          std::int32_t base_dart) {
    // counterclockwise rotations; with faces traversed by next[twin[.]] the
    // staircase cells then spell the relator itself and the boundary walk
    // reads x2^m x1 x2^-m x1^-(2^m)
    for (const auto& [xy, slot] : slots_) {
      std::vector<std::int32_t> cycle;
      for (int dir : {kEast, kNorth, kWest, kSouth}) {
        if (slot[static_cast<std::size_t>(dir)] >= 0) cycle.push_back(slot[static_cast<std::size_t>(dir)]);
      }
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        darts_[static_cast<std::size_t>(cycle[i])].next = cycle[(i + 1) % cycle.size()];
      }
    }
    VanKampenDiagram d;
    d.presentation = std::move(p);
    d.darts = std::move(darts_);
    d.base_dart = base_dart;
    d.outer_face_dart = base_dart;
    d.boundary = std::move(boundary);
    assign_faces(d);
    return d;
  }

  static constexpr int kEast = 0;
  static constexpr int kSouth = 1;
  static constexpr int kWest = 2;
  static constexpr int kNorth = 3;

 private:
  static int opposite(int dir) { return (dir + 2) % 4; }

  void place(std::int64_t x, std::int64_t y, int dir, std::int32_t dart) {
    auto [it, inserted] = slots_.try_emplace({x, y}, std::array<std::int32_t, 4>{-1, -1, -1, -1});
    auto& slot = it->second;
    if (slot[static_cast<std::size_t>(dir)] >= 0) throw Error("grid builder: slot already used");
    slot[static_cast<std::size_t>(dir)] = dart;
  }

  std::vector<Dart> darts_;
  std::map<std::pair<std::int64_t, std::int64_t>, std::array<std::int32_t, 4>> slots_;
};

}  // namespace

VanKampenDiagram build_empty_diagram(std::shared_ptr<const Presentation> p) {
  VanKampenDiagram d;
  d.boundary = Word{p->alphabet()};
  d.presentation = std::move(p);
  return d;
}

VanKampenDiagram build_single_cell_diagram(std::shared_ptr<const Presentation> p, int relator,
                                           int sign) {
  if (relator < 0 || static_cast<std::size_t>(relator) >= p->relators().size()) {
    throw ParamError("relator index out of range");
  }
  if (sign != 1 && sign != -1) throw ParamError("sign must be +-1");
  const Word face_word =
      sign > 0 ? p->relators()[static_cast<std::size_t>(relator)]
               : inverse(p->relators()[static_cast<std::size_t>(relator)]);
  const auto& ls = face_word.letters();
  const std::int32_t k = static_cast<std::int32_t>(ls.size());
  if (k == 0) throw ParamError("cannot build a cell for an empty relator");

  VanKampenDiagram d;
  d.presentation = p;
  d.darts.resize(static_cast<std::size_t>(2 * k));
  for (std::int32_t i = 0; i < k; ++i) {
    std::int32_t inner = 2 * i, outer = 2 * i + 1;
    d.darts[static_cast<std::size_t>(inner)] = {outer, 2 * ((i - 1 + k) % k) + 1, ls[static_cast<std::size_t>(i)]};
    d.darts[static_cast<std::size_t>(outer)] = {inner, 2 * ((i + 1) % k), static_cast<Letter>(-ls[static_cast<std::size_t>(i)])};
  }
  d.outer_face_dart = 1;
  d.base_dart = 1;
  d.boundary = face_word;
  FaceInfo info;
  for (std::int32_t i = 0; i < k; ++i) info.darts.push_back(2 * i);
  info.relator = relator;
  info.sign = sign;
  info.rotation_offset = 0;
  d.faces.push_back(std::move(info));
  return d;
}

VanKampenDiagram build_power_diagram(int m, std::int64_t cell_budget) {
  if (m < 1) throw ParamError("build_power_diagram needs m >= 1");
  if (m > 30 || ((std::int64_t{1} << m) - 1) > cell_budget) {
    throw ResourceError("cell budget exceeded for build_power_diagram(" + std::to_string(m) + ")");
  }
  auto pres = std::make_shared<const Presentation>(make_G(2));
  GridBuilder gb;
  auto x_of = [&](int row, std::int64_t j) { return j << (m - row); };
  // horizontal x1 edges, row widths 2^row, row `row` at height m - row
  for (int row = 0; row <= m; ++row) {
    std::int64_t y = m - row;
    for (std::int64_t j = 0; j < (std::int64_t{1} << row); ++j) {
      gb.add_edge(x_of(row, j), y, x_of(row, j + 1), y, 1);
    }
  }
  // vertical x2 edges from each row's even positions up to the row above
  for (int row = 1; row <= m; ++row) {
    std::int64_t y = m - row;
    for (std::int64_t j = 0; j <= (std::int64_t{1} << (row - 1)); ++j) {
      gb.add_edge(x_of(row, 2 * j), y, x_of(row - 1, j), y + 1, 2);
    }
  }
  std::vector<Letter> bl;
  for (int i = 0; i < m; ++i) bl.push_back(2);
  bl.push_back(1);
  for (int i = 0; i < m; ++i) bl.push_back(-2);
  for (std::int64_t i = 0; i < (std::int64_t{1} << m); ++i) bl.push_back(-1);
  Word boundary = Word::from_letters(pres->alphabet(), bl);
  std::int32_t first_walk_dart = gb.dart_at(0, 0, GridBuilder::kNorth);
  return gb.finish(pres, boundary, gb.twin_of(first_walk_dart));
}

VanKampenDiagram build_w_diagram(int m, std::int64_t cell_budget) {
  if (m < 1) throw ParamError("build_w_diagram needs m >= 1");
  if (m > 30 || 2 * ((std::int64_t{1} << m) - 1) > cell_budget) {
    throw ResourceError("cell budget exceeded for build_w_diagram(" + std::to_string(m) + ")");
  }
  auto pres = std::make_shared<const Presentation>(make_G(2));
  GridBuilder gb;
  const std::int64_t width = std::int64_t{1} << m;
  auto ax = [&](int row, std::int64_t j) { return j << (m - row); };        // upper staircase
  auto bx = [&](int row, std::int64_t j) { return 1 + (j << (m - row)); };  // lower, shifted by 1

  // upper staircase rows above the shared row
  for (int row = 0; row < m; ++row) {
    std::int64_t y = m - row;
    for (std::int64_t j = 0; j < (std::int64_t{1} << row); ++j) {
      gb.add_edge(ax(row, j), y, ax(row, j + 1), y, 1);
    }
  }
  // shared row: the two x1^(2^m) paths overlap with a one-edge offset
  for (std::int64_t x = 0; x <= width; ++x) gb.add_edge(x, 0, x + 1, 0, 1);
  // lower mirrored staircase rows
  for (int row = m - 1; row >= 0; --row) {
    std::int64_t y = row - m;
    for (std::int64_t j = 0; j < (std::int64_t{1} << row); ++j) {
      gb.add_edge(bx(row, j), y, bx(row, j + 1), y, 1);
    }
  }
  // vertical x2 edges: upward in the upper staircase, downward in the mirror
  for (int row = 1; row <= m; ++row) {
    std::int64_t y = m - row;
    for (std::int64_t j = 0; j <= (std::int64_t{1} << (row - 1)); ++j) {
      gb.add_edge(ax(row, 2 * j), y, ax(row - 1, j), y + 1, 2);
    }
  }
  for (int row = m; row >= 1; --row) {
    std::int64_t y = row - m;
    for (std::int64_t j = 0; j <= (std::int64_t{1} << (row - 1)); ++j) {
      gb.add_edge(bx(row, 2 * j), y, bx(row - 1, j), y - 1, 2);
    }
  }

  Word boundary = w_word(m);
  std::int32_t first_walk_dart = gb.dart_at(0, 0, GridBuilder::kNorth);
  return gb.finish(pres, boundary, gb.twin_of(first_walk_dart));
}

namespace {

// Maintains a diagram under construction together with its boundary walk
// (darts spelling the current reduced word). Two surgeries suffice to replay
// a null sequence backwards:
//  - pendant_insert grows a spur edge, inserting a cancelling letter pair;
//  - cap closes a detour segment into a new inner face.
// The rotation invariant is that for consecutive walk darts a, b we have
// next[b] = twin(a).
class BoundaryBuilder {
 public:
  void pendant_insert(std::size_t pos, Letter label) {
    std::int32_t a = static_cast<std::int32_t>(darts_.size());
    std::int32_t b = a + 1;
    darts_.push_back({b, -1, label});
    darts_.push_back({a, -1, static_cast<Letter>(-label)});
    if (walk_.empty()) {
      darts_[static_cast<std::size_t>(a)].next = a;
      darts_[static_cast<std::size_t>(b)].next = b;
      walk_ = {a, b};
      return;
    }
    if (pos > walk_.size()) throw Error("pendant_insert: position out of range");
    std::int32_t w_next = walk_[pos % walk_.size()];
    darts_[static_cast<std::size_t>(a)].next = darts_[static_cast<std::size_t>(w_next)].next;
    darts_[static_cast<std::size_t>(w_next)].next = a;
    darts_[static_cast<std::size_t>(b)].next = b;
    walk_.insert(walk_.begin() + static_cast<std::ptrdiff_t>(pos), {a, b});
  }

  void cap(std::size_t pos, std::size_t len) {
    if (len == 0 || pos + len > walk_.size() || len >= walk_.size()) {
      throw Error("cap: bad segment");
    }
    std::int32_t first = walk_[pos];
    std::int32_t last = walk_[pos + len - 1];
    std::int32_t w_before = walk_[(pos + walk_.size() - 1) % walk_.size()];
    std::int32_t w_after = walk_[(pos + len) % walk_.size()];
    darts_[static_cast<std::size_t>(first)].next = darts_[static_cast<std::size_t>(last)].twin;
    darts_[static_cast<std::size_t>(w_after)].next = darts_[static_cast<std::size_t>(w_before)].twin;
    walk_.erase(walk_.begin() + static_cast<std::ptrdiff_t>(pos),
                walk_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  }

  std::vector<Letter> word() const {
    std::vector<Letter> w;
    for (std::int32_t d : walk_) w.push_back(darts_[static_cast<std::size_t>(d)].label);
    return w;
  }

  VanKampenDiagram finish(std::shared_ptr<const Presentation> p, Word boundary) const {
    if (walk_.empty()) throw Error("finish: empty boundary walk");
    VanKampenDiagram d;
    d.presentation = std::move(p);
    d.darts = darts_;
    d.base_dart = darts_[static_cast<std::size_t>(walk_[0])].twin;
    d.outer_face_dart = d.base_dart;
    d.boundary = std::move(boundary);
    assign_faces(d);
    return d;
  }

 private:
  std::vector<Dart> darts_;
  std::vector<std::int32_t> walk_;
};

// Pair insertions turning `reduced` back into the unreduced word `full`:
// a list of (position, letter) pendant insertions, applied in order.
std::vector<std::pair<std::size_t, Letter>> unreduce_script(const std::vector<Letter>& full,
                                                            const std::vector<Letter>& reduced) {
  struct Ent {
    Letter l;
    int orig;
  };
  std::vector<Ent> stack;
  std::vector<std::pair<int, int>> pairs;  // in cancellation order
  for (int i = 0; i < static_cast<int>(full.size()); ++i) {
    if (!stack.empty() && stack.back().l == -full[static_cast<std::size_t>(i)]) {
      pairs.push_back({stack.back().orig, i});
      stack.pop_back();
    } else {
      stack.push_back({full[static_cast<std::size_t>(i)], i});
    }
  }
  std::vector<bool> present(full.size(), false);
  std::vector<Letter> survivors;
  for (const auto& e : stack) {
    present[static_cast<std::size_t>(e.orig)] = true;
    survivors.push_back(e.l);
  }
  if (survivors != reduced) throw Error("unreduce_script: reduction mismatch");

  std::vector<std::pair<std::size_t, Letter>> script;
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
    auto [i, j] = *it;
    std::size_t pos = 0;
    for (int k = 0; k < i; ++k) {
      if (present[static_cast<std::size_t>(k)]) ++pos;
    }
    script.push_back({pos, full[static_cast<std::size_t>(i)]});
    present[static_cast<std::size_t>(i)] = true;
    present[static_cast<std::size_t>(j)] = true;
  }
  return script;
}

}  // namespace

VanKampenDiagram diagram_from_null_sequence(std::shared_ptr<const Presentation> p, const Word& w,
                                            const NullSequence& seq) {
  // forward replay, keeping each intermediate word
  std::vector<std::vector<Letter>> inter;
  std::vector<NullMove> inserts;
  inter.push_back(w.letters());
  {
    Word cur = w;
    for (const auto& mv : seq.moves) {
      if (mv.kind != NullMove::Kind::InsertRelator) continue;
      NullSequence one;
      one.moves.push_back(mv);
      cur = replay_null_sequence(*p, cur, one).final_word;
      if (cur.empty() && inserts.size() + 1 < static_cast<std::size_t>(seq.cost())) {
        throw ParamError("diagram_from_null_sequence: sequence passes through the empty word");
      }
      inserts.push_back(mv);
      inter.push_back(cur.letters());
    }
    if (!cur.empty()) {
      throw ParamError("diagram_from_null_sequence: sequence does not trivialize the word");
    }
  }
  if (inserts.empty()) {
    if (!w.empty()) throw ParamError("diagram_from_null_sequence: empty sequence, nonempty word");
    return build_empty_diagram(std::move(p));
  }

  BoundaryBuilder bb;
  for (std::size_t k = inserts.size(); k-- > 0;) {
    const NullMove& mv = inserts[k];
    const Word& rel = p->relators()[static_cast<std::size_t>(mv.relator)];
    const std::vector<Letter> ins = mv.sign > 0 ? rel.letters() : inverse(rel).letters();
    // the unreduced splice result whose reduction is inter[k + 1]
    std::vector<Letter> full(inter[k].begin(), inter[k].begin() + mv.position);
    full.insert(full.end(), ins.begin(), ins.end());
    full.insert(full.end(), inter[k].begin() + mv.position, inter[k].end());

    for (const auto& [pos, letter] : unreduce_script(full, inter[k + 1])) {
      bb.pendant_insert(pos, letter);
    }
    if (bb.word() != full) throw Error("diagram_from_null_sequence: unreduce mismatch");
    bb.cap(static_cast<std::size_t>(mv.position), ins.size());
    if (bb.word() != inter[k]) throw Error("diagram_from_null_sequence: cap mismatch");
  }
  return bb.finish(std::move(p), w);
}

VanKampenDiagram build_xn_diagram(int n) {
  if (n != 2) {
    throw ParamError("build_xn_diagram: only n = 2 is constructible at desk scale");
  }
  auto pres = std::make_shared<const Presentation>(make_P(2));
  Presentation g2 = make_G(2);
  Word v = v_word(2);

  SearchCaps caps;
  caps.max_word_length = 20;
  caps.max_cost = 10;
  OracleOptions serial;
  serial.parallel = ParallelMode::Serial;
  auto fill_v = min_area(g2, v, caps, serial);
  auto fill_v_inv = min_area(g2, inverse(v), caps, serial);
  if (!fill_v || !fill_v_inv) throw Error("build_xn_diagram: v_2 filling not found");

  // x2 -> x2 (t v t^-1 x2^-1 v^-1) -> v^-1 -> empty: one t-cell, then the two
  // v_2 fillings. Inner witness positions shift by the [x2 t] prefix.
  NullSequence seq;
  seq.moves.push_back(NullMove::insert(1, 1, 1));
  for (const auto& mv : fill_v->witness.moves) {
    seq.moves.push_back(NullMove::insert(mv.relator, mv.sign, mv.position + 2));
  }
  for (const auto& mv : fill_v_inv->witness.moves) {
    seq.moves.push_back(mv);
  }

  Word x2 = Word::generator(pres->alphabet(), 2);
  return diagram_from_null_sequence(pres, x2, seq);
}

}  // namespace cgt
