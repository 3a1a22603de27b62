#pragma once

#include <cstdint>
#include <memory>

#include "cgt/diagrams.hpp"
#include "cgt/oracles.hpp"

namespace cgt {

inline constexpr std::int64_t kDefaultCellBudget = std::int64_t{1} << 20;

// Single vertex, no edges; fills the empty word.
VanKampenDiagram build_empty_diagram(std::shared_ptr<const Presentation> p);

// One inner face spelling relator^sign; boundary is the same word.
VanKampenDiagram build_single_cell_diagram(std::shared_ptr<const Presentation> p, int relator,
                                           int sign);

// The BS(1,2) staircase: boundary x2^m x1 x2^-m x1^-(2^m), area 2^m - 1,
// level i doubling the x1-power with 2^(i-1) cells.
VanKampenDiagram build_power_diagram(int m, std::int64_t cell_budget = kDefaultCellBudget);

// Two mirrored staircases glued along the x1^(2^m) path with a one-edge
// offset: boundary w_m, area 2 (2^m - 1).
VanKampenDiagram build_w_diagram(int m, std::int64_t cell_budget = kDefaultCellBudget);

// A diagram over P(2) with boundary x2 whose single t-annulus is the
// P-relator cell glued to itself along its t-edge, with v_2 fillings on both
// sides. Only n = 2 is constructed; the tower growth puts larger n beyond
// any realistic cell budget.
VanKampenDiagram build_xn_diagram(int n);

// Replays a null sequence backwards, capping one cell per insertion; the
// result is a valid diagram for w with area = cost of the sequence.
VanKampenDiagram diagram_from_null_sequence(std::shared_ptr<const Presentation> p, const Word& w,
                                            const NullSequence& seq);

}  // namespace cgt
