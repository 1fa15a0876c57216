#include <doctest.h>

#include <string>

#include <json.hpp>

#include "vweb/vweb.h"

namespace {

std::string take(char* s) {
  std::string out(s);
  vweb_string_free(s);
  return out;
}

const char* kTheta =
    "vweb 1\nvertex u a.t b.t c.t\nvertex v c.h b.h a.h\n"
    "edge a a.t a.h\nedge b b.t b.h\nedge c c.t c.h\n";

}  // namespace

TEST_CASE("parse, serialize, free") {
  vweb_diagram* d = nullptr;
  REQUIRE(vweb_parse(kTheta, &d) == VWEB_OK);
  char* text = nullptr;
  REQUIRE(vweb_serialize(d, &text) == VWEB_OK);
  const std::string canonical = take(text);
  CHECK(canonical.find("vertex v a.h c.h b.h\n") != std::string::npos);
  vweb_diagram* again = nullptr;
  REQUIRE(vweb_parse(canonical.c_str(), &again) == VWEB_OK);
  REQUIRE(vweb_serialize(again, &text) == VWEB_OK);
  CHECK(take(text) == canonical);
  vweb_free(again);
  char* info = nullptr;
  REQUIRE(vweb_info_json(d, &info) == VWEB_OK);
  const auto j = nlohmann::json::parse(take(info));
  CHECK(j["vertices"] == 2);
  CHECK(j["is_web"] == true);
  CHECK(j["genus"] == 0);
  vweb_free(d);
}

TEST_CASE("status codes") {
  vweb_diagram* d = nullptr;
  CHECK(vweb_parse("vweb 1\nnonsense\n", &d) == VWEB_E_INPUT);
  CHECK(std::string(vweb_last_error()).find("line 2") != std::string::npos);
  CHECK(d == nullptr);
  CHECK(vweb_parse(nullptr, &d) == VWEB_E_USAGE);
  CHECK(vweb_generate("prism", 2, &d) == VWEB_E_USAGE);
  CHECK(vweb_generate("nope", -1, &d) == VWEB_E_USAGE);

  REQUIRE(vweb_generate("prism", 6, &d) == VWEB_OK);
  std::int64_t value = 0;
  CHECK(vweb_penrose(d, "direct", 10, 20, &value, nullptr, nullptr) == VWEB_E_LIMIT);
  CHECK(vweb_penrose(d, "direct", 100, 20, &value, nullptr, nullptr) == VWEB_OK);
  CHECK(value == 72);
  CHECK(vweb_penrose(d, "bogus", 100, 20, &value, nullptr, nullptr) == VWEB_E_USAGE);
  vweb_free(d);

  REQUIRE(vweb_generate("petersen", -1, &d) == VWEB_OK);
  char* out = nullptr;
  CHECK(vweb_cube_json(d, 3, &out) == VWEB_E_LIMIT);
  vweb_free(d);
}

TEST_CASE("invariants through the C interface") {
  vweb_diagram* d = nullptr;
  REQUIRE(vweb_generate("crossed_theta", -1, &d) == VWEB_OK);
  CHECK(vweb_crossing_count(d) == 1);
  std::uint64_t tait = 0;
  REQUIRE(vweb_tait_count(d, &tait) == VWEB_OK);
  CHECK(tait == 6);
  for (const char* method : {"direct", "cube", "skein"}) {
    std::int64_t value = 0;
    std::uint64_t terms = 0;
    REQUIRE(vweb_penrose(d, method, 1000, 20, &value, &terms, nullptr) == VWEB_OK);
    CHECK(value == -6);
  }
  char* cube = nullptr;
  REQUIRE(vweb_cube_json(d, 20, &cube) == VWEB_OK);
  const auto j = nlohmann::json::parse(take(cube));
  CHECK(j["graded_dims"] == nlohmann::json::array({6, 12}));
  CHECK(j["entries"][1]["assignment"] == "1");

  vweb_diagram* r = nullptr;
  REQUIRE(vweb_resolve(d, "1", &r) == VWEB_OK);
  CHECK(vweb_crossing_count(r) == 0);
  vweb_free(r);
  CHECK(vweb_resolve(d, "11", &r) == VWEB_E_USAGE);

  char* list = nullptr;
  REQUIRE(vweb_moves_list_json(d, "vertex_slide", &list) == VWEB_OK);
  const auto sites = nlohmann::json::parse(take(list));
  REQUIRE(sites.size() > 0);
  vweb_diagram* moved = nullptr;
  REQUIRE(vweb_moves_apply(d, "vertex_slide", 0, &moved) == VWEB_OK);
  vweb_free(moved);
  CHECK(vweb_moves_apply(d, "vertex_slide", 1000, &moved) == VWEB_E_USAGE);

  char* report = nullptr;
  REQUIRE(vweb_verify_json(d, 1000, 20, &report) == VWEB_OK);
  CHECK(nlohmann::json::parse(take(report))["ok"] == true);
  vweb_free(d);
}

TEST_CASE("verify mismatch on a non-plane rotation system") {
  vweb_diagram* d = nullptr;
  REQUIRE(vweb_parse("vweb 1\nvertex u a.t b.t c.t\nvertex v a.h b.h c.h\n"
                     "edge a a.t a.h\nedge b b.t b.h\nedge c c.t c.h\n",
                     &d) == VWEB_OK);
  char* report = nullptr;
  CHECK(vweb_verify_json(d, 1000, 20, &report) == VWEB_E_MISMATCH);
  const auto j = nlohmann::json::parse(take(report));
  CHECK(j["ok"] == false);
  CHECK(j["genus"] == 1);
  vweb_free(d);
}

TEST_CASE("random diagrams and DOT") {
  vweb_diagram* a = nullptr;
  vweb_diagram* b = nullptr;
  REQUIRE(vweb_random(9, 6, 10, &a) == VWEB_OK);
  REQUIRE(vweb_random(9, 6, 10, &b) == VWEB_OK);
  char* da = nullptr;
  char* db = nullptr;
  REQUIRE(vweb_export_dot(a, &da) == VWEB_OK);
  REQUIRE(vweb_export_dot(b, &db) == VWEB_OK);
  CHECK(take(da) == take(db));
  vweb_free(a);
  vweb_free(b);
}
