#include <doctest.h>

#include "cgt/diagram_builders.hpp"
#include "cgt/json_io.hpp"

using namespace cgt;

TEST_CASE("word and alphabet round trips") {
  auto alpha = Alphabet::make({"x1", "x2", "t"});
  Word w = Word::from_letters(alpha, {2, 1, -2, -1});
  json j = word_to_json(w);
  CHECK(j.dump() == "[2,1,-2,-1]");
  CHECK(word_from_json(alpha, j) == w);

  CHECK(alphabet_from_json(alphabet_to_json(*alpha))->names() == alpha->names());

  CHECK_THROWS_AS((void)word_from_json(alpha, json::parse("[0]")), FormatError);
  CHECK_THROWS_AS((void)word_from_json(alpha, json::parse("{}")), FormatError);
  CHECK_THROWS_AS((void)word_from_json(alpha, json::parse("[9]")), ParamError);
}

TEST_CASE("presentation round trips for every family") {
  for (const Presentation& p :
       {make_G(2), make_G(5), make_P(2), make_P(3), make_Q(2), make_Q(4), make_T(3)}) {
    json j = presentation_to_json(p);
    Presentation back = presentation_from_json(j);
    CHECK(presentations_equal(p, back));
    REQUIRE(back.family().has_value());
    CHECK(back.family()->tag == p.family()->tag);
    CHECK(back.family()->n == p.family()->n);
    // byte-stable dumps
    CHECK(presentation_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("elementary op round trips") {
  std::vector<ElementaryOp> ops = {
      ElementaryOp::invert(0),
      ElementaryOp::multiply_right(0, 1),
      ElementaryOp::conjugate(1, 2, -1),
  };
  json j = ops_to_json(ops);
  auto back = ops_from_json(j);
  CHECK(back == ops);
  CHECK(j[0].dump() == R"({"i":0,"op":"invert"})");
  CHECK(j[1].dump() == R"({"i":0,"j":1,"op":"mul"})");
  CHECK(j[2].dump() == R"({"g":2,"i":1,"op":"conj","sign":-1})");
  CHECK_THROWS_AS((void)op_from_json(json::parse(R"({"op":"slide","i":0})")), FormatError);
}

TEST_CASE("null sequence round trips") {
  NullSequence seq;
  seq.moves.push_back(NullMove::insert(0, -1, 3));
  seq.moves.push_back(NullMove::free_reduce_all());
  seq.moves.push_back(NullMove::insert(1, 1, 0));
  json j = null_sequence_to_json(seq);
  CHECK(null_sequence_from_json(j) == seq);
  CHECK(seq.cost() == 2);
}

TEST_CASE("tower serialization") {
  CHECK(tower_to_json(TowerInt{256}).dump() == R"({"exact":"256"})");
  TowerInt s = tower(3, 3, 256);
  json j = tower_to_json(s);
  CHECK(j.contains("saturated"));
  CHECK(j["saturated"]["parity"] == "even");
  CHECK(j["saturated"]["floor_bits"].get<std::int64_t>() >= 256);
}

TEST_CASE("certificates serialize with their steps in order") {
  ZCertificate cert = z_certificate(2);
  json j = certificate_to_json(cert);
  REQUIRE(j["steps"].size() == 3);
  CHECK(j["steps"][0]["kind"] == "witness_trivial");
  CHECK(j["steps"][1]["kind"] == "relator_substitution");
  CHECK(j["steps"][2]["kind"] == "generator_descent");
  CHECK(j["n"] == 2);
}

TEST_CASE("diagram round trips preserve validity and bytes") {
  for (VanKampenDiagram d :
       {build_power_diagram(2), build_w_diagram(2), build_xn_diagram(2),
        build_single_cell_diagram(std::make_shared<const Presentation>(make_G(2)), 0, -1)}) {
    REQUIRE(validate(d).ok());
    json j = diagram_to_json(d);
    VanKampenDiagram back = diagram_from_json(j);
    REQUIRE(validate(back).ok());
    CHECK(back.darts == d.darts);
    CHECK(back.faces == d.faces);
    CHECK(back.base_dart == d.base_dart);
    CHECK(back.outer_face_dart == d.outer_face_dart);
    CHECK(back.boundary == d.boundary);
    CHECK(diagram_to_json(back).dump() == j.dump());
  }
  CHECK_THROWS_AS((void)diagram_from_json(json::parse(R"({"darts":[]})")), FormatError);
}

TEST_CASE("corrupted diagram files are reported invalid, never unsafe") {
  json base = diagram_to_json(build_w_diagram(1));
  auto expect_graceful = [](json j) {
    VanKampenDiagram d = diagram_from_json(j);
    CHECK(!validate(d).ok());  // a definite report, not a crash
  };
  json j = base;
  j["faces"][0]["darts"][0] = 9999;
  expect_graceful(j);
  j = base;
  j["faces"][0]["darts"][0] = -3;
  expect_graceful(j);
  j = base;
  j["darts"][0]["twin"] = 500;
  expect_graceful(j);
  j = base;
  j["darts"][2]["next"] = -1;
  expect_graceful(j);
  j = base;
  j["darts"][1]["label"] = 77;
  expect_graceful(j);
  j = base;
  j["outer_face_dart"] = 123456;
  expect_graceful(j);
  j = base;
  j["base_dart"] = -1;
  expect_graceful(j);
  j = base;
  j["faces"][0]["offset"] = 999;
  expect_graceful(j);
  j = base;
  j["faces"][0]["relator"] = 17;
  expect_graceful(j);
  j = base;
  j["faces"].erase(0);
  expect_graceful(j);
  j = base;
  j["boundary"] = json::array({1, 1, 1});
  expect_graceful(j);
}

TEST_CASE("csv reports use a header and LF endings") {
  std::vector<DehnProfileRow> rows = {{0, 0, true}, {5, 1, true}, {8, 2, false}};
  std::string csv = dehn_profile_to_csv(rows);
  CHECK(csv == "length,max_area,exact\n0,0,true\n5,1,true\n8,2,false\n");

  std::vector<ScalingRow> srows;
  ScalingRow r1{1, 2, std::int64_t{2}, "", 3.0};
  ScalingRow r2{10, 2046, std::nullopt, "skipped: caps", 2.001};
  srows.push_back(r1);
  srows.push_back(r2);
  std::string scsv = scaling_report_to_csv(srows);
  CHECK(scsv.starts_with("m,builder_area,oracle_area,oracle_note,ratio\n"));
  CHECK(scsv.find("10,2046,,skipped: caps,") != std::string::npos);
}
