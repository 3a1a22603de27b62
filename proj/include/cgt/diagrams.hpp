#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cgt/families.hpp"
#include "cgt/words.hpp"

namespace cgt {

// Half-edge of a planar combinatorial map. `twin` is the opposite half of the
// same edge (inverse label); `next` is the next dart counterclockwise around
// the origin vertex (the rotation system). Vertices and faces are derived:
// vertices are <next>-orbits and faces are orbits of d -> next[twin[d]].
struct Dart {
  std::int32_t twin = -1;
  std::int32_t next = -1;
  Letter label = 0;

  bool operator==(const Dart&) const = default;
};

struct FaceInfo {
  std::vector<std::int32_t> darts;  // face orbit, starting at its smallest dart id
  std::int32_t relator = -1;
  std::int32_t sign = 1;
  std::int32_t rotation_offset = 0;  // reading starts this far into the orbit

  bool operator==(const FaceInfo&) const = default;
};

// A van Kampen diagram: rotation-system map, relator-labeled inner faces, a
// designated outer face and a base dart for reading the boundary word. The
// boundary walk may be unreduced (spurs are legal); after free reduction it
// must equal the declared boundary.
struct VanKampenDiagram {
  std::shared_ptr<const Presentation> presentation;
  std::vector<Dart> darts;
  std::int32_t outer_face_dart = -1;  // any dart on the outer face orbit; -1 for the empty diagram
  std::int32_t base_dart = -1;        // starting dart for the boundary read
  Word boundary;                      // declared (reduced) boundary word
  std::vector<FaceInfo> faces;        // inner faces only
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  std::string first_failure() const;
};

ValidationReport validate(const VanKampenDiagram& d);

// These require a valid diagram and throw InvalidDiagramError otherwise.
std::int64_t area(const VanKampenDiagram& d);
Word boundary_word(const VanKampenDiagram& d);
int euler_characteristic(const VanKampenDiagram& d);

// Face orbit of the permutation d -> next[twin[d]], one vector per face,
// each starting at its smallest dart id. Exposed for builders and tests.
std::vector<std::vector<std::int32_t>> face_orbits(const VanKampenDiagram& d);

// The boundary walk as dart ids in reading order (labels spell the raw
// boundary word before reduction).
std::vector<std::int32_t> boundary_walk(const VanKampenDiagram& d);

struct TAnnulus {
  std::vector<std::int32_t> cells;  // face indices into d.faces, in chain order
  Word inner_boundary;              // t-free
  Word outer_boundary;              // t-free
};

// Decomposes all t-bearing cells into closed annuli chained along t-edges.
// Requires a valid diagram over a presentation with a generator named "t"
// and a t-free declared boundary. Throws Error when t-cells cannot be
// chained into closed cycles.
std::vector<TAnnulus> t_annuli(const VanKampenDiagram& d);

}  // namespace cgt
