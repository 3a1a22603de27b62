#include "cgt/json_io.hpp"

#include <sstream>

namespace cgt {

namespace {

[[noreturn]] void bad(const std::string& what) { throw FormatError(what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

json word_to_json(const Word& w) {
  json arr = json::array();
  for (Letter l : w.letters()) arr.push_back(l);
  return arr;
}

Word word_from_json(const AlphabetRef& alphabet, const json& j) {
  if (!j.is_array()) bad("word must be an array of nonzero integers");
  std::vector<Letter> letters;
  for (const auto& e : j) {
    if (!e.is_number_integer()) bad("word letters must be integers");
    Letter l = e.get<Letter>();
    if (l == 0) bad("word letter 0 is invalid");
    letters.push_back(l);
  }
  return Word::from_letters(alphabet, letters);
}

json alphabet_to_json(const Alphabet& a) {
  json arr = json::array();
  for (const auto& n : a.names()) arr.push_back(n);
  return arr;
}

AlphabetRef alphabet_from_json(const json& j) {
  if (!j.is_array()) bad("alphabet must be an array of names");
  std::vector<std::string> names;
  for (const auto& e : j) {
    if (!e.is_string()) bad("generator names must be strings");
    names.push_back(e.get<std::string>());
  }
  return Alphabet::make(std::move(names));
}

json presentation_to_json(const Presentation& p) {
  json j;
  j["generators"] = alphabet_to_json(*p.alphabet());
  json rels = json::array();
  for (const auto& r : p.relators()) rels.push_back(word_to_json(r));
  j["relators"] = rels;
  if (p.family()) {
    j["family"] = json{{"tag", p.family()->tag}, {"n", p.family()->n}};
  }
  return j;
}

Presentation presentation_from_json(const json& j) {
  AlphabetRef alpha = alphabet_from_json(field(j, "generators"));
  const json& rels = field(j, "relators");
  if (!rels.is_array()) bad("relators must be an array of words");
  std::vector<Word> relators;
  for (const auto& r : rels) relators.push_back(word_from_json(alpha, r));
  std::optional<FamilyTag> family;
  if (j.contains("family")) {
    const json& f = j.at("family");
    family = FamilyTag{field(f, "tag").get<std::string>(), int_field(f, "n")};
  }
  return Presentation{alpha, std::move(relators), family};
}

json op_to_json(const ElementaryOp& op) {
  switch (op.kind) {
    case ElementaryOp::Kind::Invert:
      return json{{"op", "invert"}, {"i", op.i}};
    case ElementaryOp::Kind::MultiplyRight:
      return json{{"op", "mul"}, {"i", op.i}, {"j", op.j}};
    case ElementaryOp::Kind::Conjugate:
      return json{{"op", "conj"}, {"i", op.i}, {"g", op.gen}, {"sign", op.sign}};
  }
  bad("unknown op kind");
}

ElementaryOp op_from_json(const json& j) {
  std::string kind = field(j, "op").get<std::string>();
  if (kind == "invert") return ElementaryOp::invert(int_field(j, "i"));
  if (kind == "mul") return ElementaryOp::multiply_right(int_field(j, "i"), int_field(j, "j"));
  if (kind == "conj") {
    return ElementaryOp::conjugate(int_field(j, "i"), int_field(j, "g"), int_field(j, "sign"));
  }
  bad("unknown op \"" + kind + "\"");
}

json ops_to_json(const std::vector<ElementaryOp>& ops) {
  json arr = json::array();
  for (const auto& op : ops) arr.push_back(op_to_json(op));
  return arr;
}

std::vector<ElementaryOp> ops_from_json(const json& j) {
  if (!j.is_array()) bad("op sequence must be an array");
  std::vector<ElementaryOp> ops;
  for (const auto& e : j) ops.push_back(op_from_json(e));
  return ops;
}

json null_sequence_to_json(const NullSequence& seq) {
  json arr = json::array();
  for (const auto& m : seq.moves) {
    if (m.kind == NullMove::Kind::FreeReduceAll) {
      arr.push_back(json{{"move", "free_reduce"}});
    } else {
      arr.push_back(json{{"move", "insert"},
                         {"relator", m.relator},
                         {"sign", m.sign},
                         {"position", m.position}});
    }
  }
  return arr;
}

NullSequence null_sequence_from_json(const json& j) {
  if (!j.is_array()) bad("null sequence must be an array of moves");
  NullSequence seq;
  for (const auto& e : j) {
    std::string kind = field(e, "move").get<std::string>();
    if (kind == "free_reduce") {
      seq.moves.push_back(NullMove::free_reduce_all());
    } else if (kind == "insert") {
      seq.moves.push_back(
          NullMove::insert(int_field(e, "relator"), int_field(e, "sign"), int_field(e, "position")));
    } else {
      bad("unknown move \"" + kind + "\"");
    }
  }
  return seq;
}

json tower_to_json(const TowerInt& t) {
  if (t.is_exact()) return json{{"exact", t.exact_value().to_string()}};
  auto p = t.parity();
  return json{{"saturated",
               json{{"sign", t.sign()},
                    {"floor_bits", t.floor_bits()},
                    {"parity", p ? (*p ? "odd" : "even") : "unknown"}}}};
}

json certificate_to_json(const ZCertificate& cert) {
  json steps = json::array();
  for (const auto& s : cert.steps) {
    json e;
    switch (s.kind) {
      case CertStep::Kind::WitnessTrivial:
        e["kind"] = "witness_trivial";
        e["word"] = word_to_json(s.word);
        break;
      case CertStep::Kind::RelatorSubstitution: {
        e["kind"] = "relator_substitution";
        e["relator"] = s.relator_index;
        e["word"] = word_to_json(s.word);
        json spans = json::array();
        for (auto [off, len] : s.spans) spans.push_back(json::array({off, len}));
        e["spans"] = spans;
        e["concludes"] = s.concluded_generator;
        break;
      }
      case CertStep::Kind::GeneratorDescent:
        e["kind"] = "generator_descent";
        e["relator"] = s.relator_index;
        e["known_trivial"] = s.known_trivial_gens;
        e["concludes"] = s.concluded_generator;
        break;
    }
    e["claim"] = s.claim;
    e["justification"] = s.justification;
    steps.push_back(std::move(e));
  }
  return json{{"n", cert.n}, {"steps", steps}, {"conclusion", cert.conclusion}};
}

json diagram_to_json(const VanKampenDiagram& d) {
  json darts = json::array();
  for (std::size_t i = 0; i < d.darts.size(); ++i) {
    darts.push_back(json{{"id", i},
                         {"twin", d.darts[i].twin},
                         {"next", d.darts[i].next},
                         {"label", d.darts[i].label}});
  }
  json faces = json::array();
  for (const auto& f : d.faces) {
    faces.push_back(json{{"darts", f.darts},
                         {"relator", f.relator},
                         {"sign", f.sign},
                         {"offset", f.rotation_offset}});
  }
  return json{{"version", 1},
              {"darts", darts},
              {"outer_face_dart", d.outer_face_dart},
              {"base_dart", d.base_dart},
              {"boundary", word_to_json(d.boundary)},
              {"faces", faces},
              {"presentation", presentation_to_json(*d.presentation)}};
}

VanKampenDiagram diagram_from_json(const json& j) {
  VanKampenDiagram d;
  d.presentation =
      std::make_shared<const Presentation>(presentation_from_json(field(j, "presentation")));
  const json& darts = field(j, "darts");
  if (!darts.is_array()) bad("darts must be an array");
  d.darts.resize(darts.size());
  for (const auto& e : darts) {
    int id = int_field(e, "id");
    if (id < 0 || static_cast<std::size_t>(id) >= d.darts.size()) bad("dart id out of range");
    d.darts[static_cast<std::size_t>(id)] = {int_field(e, "twin"), int_field(e, "next"),
                                             int_field(e, "label")};
  }
  d.outer_face_dart = int_field(j, "outer_face_dart");
  d.base_dart = int_field(j, "base_dart");
  d.boundary = word_from_json(d.presentation->alphabet(), field(j, "boundary"));
  const json& faces = field(j, "faces");
  if (!faces.is_array()) bad("faces must be an array");
  for (const auto& e : faces) {
    FaceInfo info;
    for (const auto& dd : field(e, "darts")) info.darts.push_back(dd.get<std::int32_t>());
    info.relator = int_field(e, "relator");
    info.sign = int_field(e, "sign");
    info.rotation_offset = int_field(e, "offset");
    d.faces.push_back(std::move(info));
  }
  return d;
}

json validation_report_to_json(const ValidationReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back(json{{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return json{{"ok", rep.ok()}, {"checks", checks}};
}

json dehn_profile_to_json(const std::vector<DehnProfileRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back(json{{"length", r.length}, {"max_area", r.max_area}, {"exact", r.exact}});
  }
  return arr;
}

std::string dehn_profile_to_csv(const std::vector<DehnProfileRow>& rows) {
  std::ostringstream out;
  out << "length,max_area,exact\n";
  for (const auto& r : rows) {
    out << r.length << "," << r.max_area << "," << (r.exact ? "true" : "false") << "\n";
  }
  return out.str();
}

json scaling_report_to_json(const std::vector<ScalingRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json e{{"m", r.m}, {"builder_area", r.builder_area}, {"ratio", r.ratio}};
    if (r.oracle_area) {
      e["oracle_area"] = *r.oracle_area;
    } else {
      e["oracle_note"] = r.oracle_note;
    }
    arr.push_back(std::move(e));
  }
  return arr;
}

std::string scaling_report_to_csv(const std::vector<ScalingRow>& rows) {
  std::ostringstream out;
  out << "m,builder_area,oracle_area,oracle_note,ratio\n";
  for (const auto& r : rows) {
    out << r.m << "," << r.builder_area << ",";
    if (r.oracle_area) out << *r.oracle_area;
    out << "," << r.oracle_note << "," << r.ratio << "\n";
  }
  return out.str();
}

}  // namespace cgt
