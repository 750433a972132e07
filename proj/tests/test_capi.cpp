#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <string>

#include "osp12.h"

namespace {

std::string render(osp12_doc* doc, osp12_format fmt) {
  char* s = osp12_doc_render(doc, fmt);
  REQUIRE(s != nullptr);
  std::string out(s);
  osp12_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("weights through the C surface") {
  osp12_doc* doc = nullptr;
  CHECK(osp12_weights(5, 1, &doc) == OSP12_OK);
  REQUIRE(doc != nullptr);
  CHECK(std::string(osp12_doc_status(doc)) == "pass");
  CHECK(osp12_doc_exit_code(doc) == 0);
  const std::string json = render(doc, OSP12_FORMAT_JSON);
  CHECK(json.find("\"level\": \"1\"") != std::string::npos);
  CHECK(json.find("\"m\": 3") != std::string::npos);
  CHECK(json.find("\"j\": \"1\"") != std::string::npos);
  CHECK(json.find("\"f\": \"t^2 - t\"") != std::string::npos);
  const std::string csv = render(doc, OSP12_FORMAT_CSV);
  CHECK(csv.find("m,s,j") != std::string::npos);
  CHECK(csv.find("3,0,1") != std::string::npos);
  const std::string tex = render(doc, OSP12_FORMAT_TEX);
  CHECK(tex.find("\\begin{tabular}") != std::string::npos);
  osp12_doc_free(doc);
}

TEST_CASE("invalid input surfaces as status 2 with the failed condition named") {
  osp12_doc* doc = nullptr;
  CHECK(osp12_weights(2, 2, &doc) == OSP12_INVALID_INPUT);
  REQUIRE(doc != nullptr);
  CHECK(osp12_doc_exit_code(doc) == 2);
  CHECK(std::string(osp12_doc_status(doc)) == "fail");
  CHECK(render(doc, OSP12_FORMAT_JSON).find("gcd condition failed") != std::string::npos);
  osp12_doc_free(doc);

  CHECK(osp12_fuse(5, 1, 2, 0, 3, 0, &doc) == OSP12_INVALID_INPUT);  // (2,0) off-grid
  REQUIRE(doc != nullptr);
  CHECK(osp12_doc_exit_code(doc) == 2);
  osp12_doc_free(doc);
}

TEST_CASE("fuse and TeX rationals") {
  osp12_doc* doc = nullptr;
  CHECK(osp12_fuse(5, 3, 2, 1, 2, 1, &doc) == OSP12_OK);
  REQUIRE(doc != nullptr);
  const std::string json = render(doc, OSP12_FORMAT_JSON);
  CHECK(json.find("\"agree\": true") != std::string::npos);
  CHECK(json.find("\"j\": \"-1/3\"") != std::string::npos);
  const std::string tex = render(doc, OSP12_FORMAT_TEX);
  CHECK(tex.find("-\\frac{2}{3}") != std::string::npos);  // level of (5,3)
  osp12_doc_free(doc);
}

TEST_CASE("table render is identical across worker counts") {
  osp12_doc *d1 = nullptr, *d3 = nullptr;
  CHECK(osp12_table(5, 3, 1, &d1) == OSP12_OK);
  CHECK(osp12_table(5, 3, 3, &d3) == OSP12_OK);
  REQUIRE(d1 != nullptr);
  REQUIRE(d3 != nullptr);
  CHECK(render(d1, OSP12_FORMAT_JSON) == render(d3, OSP12_FORMAT_JSON));
  CHECK(render(d1, OSP12_FORMAT_CSV) == render(d3, OSP12_FORMAT_CSV));
  osp12_doc_free(d1);
  osp12_doc_free(d3);
}

TEST_CASE("verify suites and unknown suite") {
  osp12_doc* doc = nullptr;
  osp12_verify_opts opts{"factorization", 0, 0, 0, 1};
  CHECK(osp12_verify(&opts, &doc) == OSP12_OK);
  REQUIRE(doc != nullptr);
  const std::string json = render(doc, OSP12_FORMAT_JSON);
  CHECK(json.find("\"failed\": 0") != std::string::npos);
  osp12_doc_free(doc);

  osp12_verify_opts bad{"nonsense", 0, 0, 0, 1};
  CHECK(osp12_verify(&bad, &doc) == OSP12_INVALID_INPUT);
  REQUIRE(doc != nullptr);
  CHECK(osp12_doc_exit_code(doc) == 2);
  osp12_doc_free(doc);
}

TEST_CASE("JSON payloads round-trip through the documented schema") {
  osp12_doc* doc = nullptr;
  REQUIRE(osp12_fuse(5, 1, 3, 0, 3, 0, &doc) == OSP12_OK);
  const std::string out = render(doc, OSP12_FORMAT_JSON);
  osp12_doc_free(doc);
  const auto j = nlohmann::ordered_json::parse(out);
  // top-level schema: {"p":int,"q":int,"level":str,"command":str,"payload":...,"status":str}
  CHECK(j.at("p").is_number_integer());
  CHECK(j.at("q").is_number_integer());
  CHECK(j.at("level").is_string());
  CHECK(j.at("command").get<std::string>() == "fuse");
  CHECK(j.at("payload").is_object());
  CHECK(j.at("status").get<std::string>() == "pass");
  for (const auto& w : j.at("payload").at("closed")) {
    CHECK(w.at("m").is_number_integer());
    CHECK(w.at("s").is_number_integer());
    CHECK(w.at("j").is_string());
  }
  // parse -> dump reproduces the rendering byte for byte
  CHECK(j.dump(2) + "\n" == out);
}

TEST_CASE("defensive edges") {
  CHECK(osp12_weights(5, 1, nullptr) == OSP12_BAD_ARGUMENT);
  CHECK(osp12_doc_render(nullptr, OSP12_FORMAT_JSON) == nullptr);
  CHECK(osp12_doc_status(nullptr) == nullptr);
  osp12_doc_free(nullptr);
  osp12_string_free(nullptr);
  osp12_doc* doc = nullptr;
  CHECK(osp12_weights(5, 1, &doc) == OSP12_OK);
  CHECK(osp12_doc_render(doc, static_cast<osp12_format>(99)) == nullptr);
  osp12_doc_free(doc);
  CHECK(std::string(osp12_version()) == "1.0.0");
}
