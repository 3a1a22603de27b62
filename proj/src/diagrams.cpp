#include "cgt/diagrams.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>

namespace cgt {

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string ValidationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.pass) return c.name + ": " + c.detail;
  }
  return {};
}

namespace {

std::int32_t fnext(const VanKampenDiagram& d, std::int32_t dart) {
  return d.darts[static_cast<std::size_t>(d.darts[static_cast<std::size_t>(dart)].twin)].next;
}

// orbits of an arbitrary permutation given as dart -> perm(dart)
template <typename Perm>
std::vector<std::vector<std::int32_t>> orbits_of(std::size_t n, Perm perm) {
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::int32_t>> orbits;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::int32_t> orbit;
    std::int32_t cur = static_cast<std::int32_t>(start);
    while (!seen[static_cast<std::size_t>(cur)]) {
      seen[static_cast<std::size_t>(cur)] = true;
      orbit.push_back(cur);
      cur = perm(cur);
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace

std::vector<std::vector<std::int32_t>> face_orbits(const VanKampenDiagram& d) {
  return orbits_of(d.darts.size(), [&](std::int32_t x) { return fnext(d, x); });
}

std::vector<std::int32_t> boundary_walk(const VanKampenDiagram& d) {
  if (d.darts.empty()) return {};
  if (d.base_dart < 0 || static_cast<std::size_t>(d.base_dart) >= d.darts.size()) {
    throw InvalidDiagramError("boundary_walk: base_dart out of range");
  }
  std::vector<std::int32_t> orbit;
  std::int32_t cur = d.base_dart;
  do {
    orbit.push_back(cur);
    cur = fnext(d, cur);
    if (orbit.size() > d.darts.size()) {
      throw InvalidDiagramError("boundary_walk: face permutation does not close");
    }
  } while (cur != d.base_dart);
  // the walk reads the twins of the outer orbit, base first, then backwards
  std::vector<std::int32_t> walk;
  walk.push_back(d.darts[static_cast<std::size_t>(orbit[0])].twin);
  for (std::size_t i = orbit.size(); i-- > 1;) {
    walk.push_back(d.darts[static_cast<std::size_t>(orbit[i])].twin);
  }
  return walk;
}

ValidationReport validate(const VanKampenDiagram& d) {
  ValidationReport rep;
  auto add = [&rep](const std::string& name, bool pass, const std::string& detail = {}) {
    rep.checks.push_back({name, pass, pass ? "" : detail});
    return pass;
  };

  if (!d.presentation) {
    add("presentation", false, "missing presentation");
    return rep;
  }
  add("presentation", true);
  const Presentation& p = *d.presentation;
  const std::size_t n = d.darts.size();

  if (n == 0) {
    // single-vertex diagram for the empty word
    bool ok = d.faces.empty() && d.outer_face_dart == -1 && d.base_dart == -1;
    add("structure", ok, "empty diagram must have no faces and no designated darts");
    add("euler", true);
    add("connected", true);
    add("faces", true);
    add("face_labels", true);
    bool bok = d.boundary.empty();
    add("boundary", bok, "declared boundary of the empty diagram must be empty");
    return rep;
  }

  // structure: twin involution, inverse labels, next a permutation
  {
    bool ok = true;
    std::string why;
    std::vector<int> next_indegree(n, 0);
    for (std::size_t i = 0; i < n && ok; ++i) {
      const Dart& dd = d.darts[i];
      auto in_range = [&](std::int32_t x) { return x >= 0 && static_cast<std::size_t>(x) < n; };
      if (!in_range(dd.twin) || !in_range(dd.next)) {
        ok = false;
        why = "dart " + std::to_string(i) + " has out-of-range twin/next";
        break;
      }
      if (dd.twin == static_cast<std::int32_t>(i)) {
        ok = false;
        why = "dart " + std::to_string(i) + " is its own twin";
        break;
      }
      if (d.darts[static_cast<std::size_t>(dd.twin)].twin != static_cast<std::int32_t>(i)) {
        ok = false;
        why = "twin is not an involution at dart " + std::to_string(i);
        break;
      }
      if (dd.label == 0 || static_cast<std::size_t>(std::abs(dd.label)) > p.alphabet()->size()) {
        ok = false;
        why = "dart " + std::to_string(i) + " label outside the alphabet";
        break;
      }
      if (d.darts[static_cast<std::size_t>(dd.twin)].label != -dd.label) {
        ok = false;
        why = "twin labels not inverse at dart " + std::to_string(i);
        break;
      }
      ++next_indegree[static_cast<std::size_t>(dd.next)];
    }
    if (ok) {
      for (std::size_t i = 0; i < n; ++i) {
        if (next_indegree[i] != 1) {
          ok = false;
          why = "next is not a permutation (dart " + std::to_string(i) + ")";
          break;
        }
      }
    }
    if (!add("structure", ok, why)) return rep;
  }

  // connectivity over {twin, next}
  {
    std::vector<bool> seen(n, false);
    std::queue<std::int32_t> q;
    q.push(0);
    seen[0] = true;
    std::size_t count = 1;
    while (!q.empty()) {
      std::int32_t cur = q.front();
      q.pop();
      for (std::int32_t nb : {d.darts[static_cast<std::size_t>(cur)].twin,
                              d.darts[static_cast<std::size_t>(cur)].next}) {
        if (!seen[static_cast<std::size_t>(nb)]) {
          seen[static_cast<std::size_t>(nb)] = true;
          ++count;
          q.push(nb);
        }
      }
    }
    add("connected", count == n, "map is not connected");
  }

  auto vertices = orbits_of(n, [&](std::int32_t x) { return d.darts[static_cast<std::size_t>(x)].next; });
  auto faces = face_orbits(d);

  // Euler characteristic of the closed map (outer face included)
  {
    std::int64_t v = static_cast<std::int64_t>(vertices.size());
    std::int64_t e = static_cast<std::int64_t>(n / 2);
    std::int64_t f = static_cast<std::int64_t>(faces.size());
    add("euler", v - e + f == 2,
        "V - E + F = " + std::to_string(v) + " - " + std::to_string(e) + " + " +
            std::to_string(f) + " != 2");
  }

  // declared faces must be exactly the non-outer orbits
  bool faces_ok = true;
  std::string faces_why;
  if (d.outer_face_dart < 0 || static_cast<std::size_t>(d.outer_face_dart) >= n) {
    faces_ok = false;
    faces_why = "outer_face_dart out of range";
  } else {
    std::vector<std::int32_t> face_of(n, -1);
    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
      for (std::int32_t dart : faces[fi]) face_of[static_cast<std::size_t>(dart)] = static_cast<std::int32_t>(fi);
    }
    std::int32_t outer_orbit = face_of[static_cast<std::size_t>(d.outer_face_dart)];
    std::vector<bool> used(faces.size(), false);
    used[static_cast<std::size_t>(outer_orbit)] = true;
    if (d.faces.size() + 1 != faces.size()) {
      faces_ok = false;
      faces_why = "declared " + std::to_string(d.faces.size()) + " inner faces, computed " +
                  std::to_string(faces.size() ? faces.size() - 1 : 0);
    }
    for (std::size_t fi = 0; faces_ok && fi < d.faces.size(); ++fi) {
      const FaceInfo& info = d.faces[fi];
      if (info.darts.empty()) {
        faces_ok = false;
        faces_why = "face " + std::to_string(fi) + " has no darts";
        break;
      }
      bool darts_in_range = std::all_of(info.darts.begin(), info.darts.end(), [&](std::int32_t x) {
        return x >= 0 && static_cast<std::size_t>(x) < n;
      });
      if (!darts_in_range) {
        faces_ok = false;
        faces_why = "face " + std::to_string(fi) + " references a dart out of range";
        break;
      }
      std::int32_t orbit = face_of[static_cast<std::size_t>(info.darts[0])];
      if (orbit < 0 || used[static_cast<std::size_t>(orbit)]) {
        faces_ok = false;
        faces_why = "face " + std::to_string(fi) + " duplicates an orbit or hits the outer face";
        break;
      }
      if (info.darts != faces[static_cast<std::size_t>(orbit)]) {
        faces_ok = false;
        faces_why = "face " + std::to_string(fi) + " darts do not match the computed orbit";
        break;
      }
      used[static_cast<std::size_t>(orbit)] = true;
    }
  }
  if (!add("faces", faces_ok, faces_why)) return rep;

  // each inner face must read relator^sign exactly from its offset
  {
    bool ok = true;
    std::string why;
    for (std::size_t fi = 0; fi < d.faces.size() && ok; ++fi) {
      const FaceInfo& info = d.faces[fi];
      if (info.relator < 0 || static_cast<std::size_t>(info.relator) >= p.relators().size()) {
        ok = false;
        why = "face " + std::to_string(fi) + " has an invalid relator index";
        break;
      }
      const Word& rel = p.relators()[static_cast<std::size_t>(info.relator)];
      std::vector<Letter> expect =
          info.sign > 0 ? rel.letters() : inverse(rel).letters();
      const auto& orbit = info.darts;
      if (expect.size() != orbit.size() || info.rotation_offset < 0 ||
          (info.rotation_offset != 0 &&
           static_cast<std::size_t>(info.rotation_offset) >= orbit.size())) {
        ok = false;
        why = "face " + std::to_string(fi) + " size/offset mismatch with relator";
        break;
      }
      for (std::size_t k = 0; k < orbit.size(); ++k) {
        std::size_t at = (static_cast<std::size_t>(info.rotation_offset) + k) % orbit.size();
        if (d.darts[static_cast<std::size_t>(orbit[at])].label != expect[k]) {
          ok = false;
          why = "face " + std::to_string(fi) + " does not spell its relator at position " +
                std::to_string(k);
          break;
        }
      }
    }
    if (!add("face_labels", ok, why)) return rep;
  }

  // boundary read from base_dart must reduce to the declared boundary
  {
    bool ok = true;
    std::string why;
    if (d.base_dart < 0 || static_cast<std::size_t>(d.base_dart) >= n) {
      ok = false;
      why = "base_dart out of range";
    } else {
      // base must lie on the outer orbit
      std::int32_t cur = d.outer_face_dart;
      bool on_outer = false;
      do {
        if (cur == d.base_dart) on_outer = true;
        cur = fnext(d, cur);
      } while (cur != d.outer_face_dart);
      if (!on_outer) {
        ok = false;
        why = "base_dart is not on the outer face";
      } else {
        std::vector<Letter> raw;
        for (std::int32_t dart : boundary_walk(d)) {
          raw.push_back(d.darts[static_cast<std::size_t>(dart)].label);
        }
        auto reduced = reduce_letters(raw);
        if (reduced != d.boundary.letters()) {
          ok = false;
          why = "boundary walk does not reduce to the declared boundary word";
        }
        if (ok && !(*d.boundary.alphabet() == *p.alphabet()) && !d.boundary.empty()) {
          ok = false;
          why = "declared boundary is over a different alphabet";
        }
      }
    }
    add("boundary", ok, why);
  }

  return rep;
}

namespace {
void require_valid(const VanKampenDiagram& d) {
  ValidationReport rep = validate(d);
  if (!rep.ok()) throw InvalidDiagramError("invalid diagram: " + rep.first_failure());
}
}  // namespace

std::int64_t area(const VanKampenDiagram& d) {
  require_valid(d);
  return static_cast<std::int64_t>(d.faces.size());
}

Word boundary_word(const VanKampenDiagram& d) {
  require_valid(d);
  return d.boundary;
}

int euler_characteristic(const VanKampenDiagram& d) {
  require_valid(d);
  if (d.darts.empty()) return 2;
  auto vertices = orbits_of(d.darts.size(),
                            [&](std::int32_t x) { return d.darts[static_cast<std::size_t>(x)].next; });
  auto faces = face_orbits(d);
  return static_cast<int>(static_cast<std::int64_t>(vertices.size()) -
                          static_cast<std::int64_t>(d.darts.size() / 2) +
                          static_cast<std::int64_t>(faces.size()));
}

std::vector<TAnnulus> t_annuli(const VanKampenDiagram& d) {
  require_valid(d);
  const Presentation& p = *d.presentation;
  int t_idx = p.alphabet()->index_of("t");
  if (t_idx == 0) throw ParamError("t_annuli: presentation has no generator named t");
  for (Letter l : d.boundary.letters()) {
    if (std::abs(l) == t_idx) throw ParamError("t_annuli: boundary word contains t");
  }

  auto faces = face_orbits(d);
  std::vector<std::int32_t> face_of(d.darts.size(), -1);
  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    for (std::int32_t dart : faces[fi]) face_of[static_cast<std::size_t>(dart)] = static_cast<std::int32_t>(fi);
  }
  std::int32_t outer_orbit =
      d.darts.empty() ? -1 : face_of[static_cast<std::size_t>(d.outer_face_dart)];

  // map computed orbit -> declared inner face index
  std::vector<std::int32_t> inner_index(faces.size(), -1);
  for (std::size_t fi = 0; fi < d.faces.size(); ++fi) {
    inner_index[static_cast<std::size_t>(face_of[static_cast<std::size_t>(d.faces[fi].darts[0])])] =
        static_cast<std::int32_t>(fi);
  }

  // t-cells and their t-darts
  std::vector<std::vector<std::int32_t>> t_darts_of(faces.size());
  std::vector<bool> is_t_cell(faces.size(), false);
  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    if (static_cast<std::int32_t>(fi) == outer_orbit) continue;
    for (std::int32_t dart : faces[fi]) {
      if (std::abs(d.darts[static_cast<std::size_t>(dart)].label) == t_idx) {
        t_darts_of[fi].push_back(dart);
      }
    }
    is_t_cell[fi] = !t_darts_of[fi].empty();
  }

  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    if (is_t_cell[fi] && t_darts_of[fi].size() != 2) {
      throw Error("t_annuli: a cell carries " + std::to_string(t_darts_of[fi].size()) +
                  " t-edges; annuli need exactly two per cell");
    }
    if (is_t_cell[fi]) {
      for (std::int32_t dart : t_darts_of[fi]) {
        std::int32_t nb = face_of[static_cast<std::size_t>(
            d.darts[static_cast<std::size_t>(dart)].twin)];
        if (nb == outer_orbit || !is_t_cell[static_cast<std::size_t>(nb)]) {
          throw Error("t_annuli: t-edge not shared between two t-cells");
        }
      }
    }
  }

  // chain t-cells along t-edges into closed cycles
  std::vector<bool> visited(faces.size(), false);
  std::vector<TAnnulus> result;
  for (std::size_t start = 0; start < faces.size(); ++start) {
    if (!is_t_cell[start] || visited[start]) continue;
    std::vector<std::int32_t> chain;
    std::int32_t cur = static_cast<std::int32_t>(start);
    std::int32_t enter = -1;  // t-dart of cur through which we entered
    while (true) {
      if (visited[static_cast<std::size_t>(cur)]) {
        if (cur != static_cast<std::int32_t>(start)) {
          throw Error("t_annuli: t-cells do not chain into disjoint cycles");
        }
        break;
      }
      visited[static_cast<std::size_t>(cur)] = true;
      chain.push_back(cur);
      const auto& td = t_darts_of[static_cast<std::size_t>(cur)];
      std::int32_t exit = (enter == td[0]) ? td[1] : td[0];
      std::int32_t twin = d.darts[static_cast<std::size_t>(exit)].twin;
      enter = twin;
      cur = face_of[static_cast<std::size_t>(twin)];
    }

    TAnnulus ann;
    for (std::int32_t orbit : chain) ann.cells.push_back(inner_index[static_cast<std::size_t>(orbit)]);

    // the two t-free boundary cycles: walk face orbits, jumping through
    // t-edges into the neighbouring cell of the same annulus
    std::vector<bool> dart_done(d.darts.size(), false);
    std::vector<std::vector<Letter>> cycles;
    std::vector<std::vector<std::int32_t>> cycle_darts;
    for (std::int32_t orbit : chain) {
      for (std::int32_t dart : faces[static_cast<std::size_t>(orbit)]) {
        if (dart_done[static_cast<std::size_t>(dart)]) continue;
        if (std::abs(d.darts[static_cast<std::size_t>(dart)].label) == t_idx) continue;
        std::vector<Letter> word;
        std::vector<std::int32_t> cdarts;
        std::int32_t cur_dart = dart;
        do {
          dart_done[static_cast<std::size_t>(cur_dart)] = true;
          word.push_back(d.darts[static_cast<std::size_t>(cur_dart)].label);
          cdarts.push_back(cur_dart);
          std::int32_t nxt = fnext(d, cur_dart);
          while (std::abs(d.darts[static_cast<std::size_t>(nxt)].label) == t_idx) {
            nxt = fnext(d, d.darts[static_cast<std::size_t>(nxt)].twin);
          }
          cur_dart = nxt;
        } while (cur_dart != dart);
        cycles.push_back(std::move(word));
        cycle_darts.push_back(std::move(cdarts));
      }
    }
    if (cycles.size() != 2) {
      throw Error("t_annuli: annulus does not have exactly two t-free boundary cycles");
    }

    // decide which cycle faces the outside: BFS over faces from the outer
    // face without stepping into this annulus' cells
    std::vector<bool> in_annulus(faces.size(), false);
    for (std::int32_t orbit : chain) in_annulus[static_cast<std::size_t>(orbit)] = true;
    std::vector<bool> reach(faces.size(), false);
    std::queue<std::int32_t> q;
    if (outer_orbit >= 0 && !in_annulus[static_cast<std::size_t>(outer_orbit)]) {
      reach[static_cast<std::size_t>(outer_orbit)] = true;
      q.push(outer_orbit);
    }
    while (!q.empty()) {
      std::int32_t f = q.front();
      q.pop();
      for (std::int32_t dart : faces[static_cast<std::size_t>(f)]) {
        std::int32_t nb = face_of[static_cast<std::size_t>(
            d.darts[static_cast<std::size_t>(dart)].twin)];
        if (!reach[static_cast<std::size_t>(nb)] && !in_annulus[static_cast<std::size_t>(nb)]) {
          reach[static_cast<std::size_t>(nb)] = true;
          q.push(nb);
        }
      }
    }
    auto side_is_outer = [&](const std::vector<std::int32_t>& cdarts) {
      for (std::int32_t dart : cdarts) {
        std::int32_t nb = face_of[static_cast<std::size_t>(
            d.darts[static_cast<std::size_t>(dart)].twin)];
        if (nb == outer_orbit || reach[static_cast<std::size_t>(nb)]) return true;
      }
      return false;
    };
    bool first_outer = side_is_outer(cycle_darts[0]);
    bool second_outer = side_is_outer(cycle_darts[1]);
    if (first_outer == second_outer) {
      throw Error("t_annuli: could not separate inner and outer annulus boundaries");
    }
    const auto& inner_lets = first_outer ? cycles[1] : cycles[0];
    const auto& outer_lets = first_outer ? cycles[0] : cycles[1];
    ann.inner_boundary = Word::from_letters(p.alphabet(), inner_lets);
    ann.outer_boundary = Word::from_letters(p.alphabet(), outer_lets);
    result.push_back(std::move(ann));
  }
  return result;
}

}  // namespace cgt
