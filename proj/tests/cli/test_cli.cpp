#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "run.hpp"

using clitest::fixture;
using clitest::run;
using Json = nlohmann::json;

namespace {

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("components") {
  auto r = run("components --d 3 --k 3 --n 8 --m 3 --json");
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["count"] == 2);
  CHECK(j["components"][0]["hypersurface_class"]["partition"] == "[5,5,3]");
  CHECK(j["components"][1]["hypersurface_class"]["partition"] == "[5,4,4]");
  // canonical output: re-serializing is byte-identical
  CHECK(j.dump(2) + "\n" == r.out);

  r = run("components --d 3 --k 2 --n 4 --m 2 --json");
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["classes_coincide"] == true);

  r = run("components --d 3 --k 2 --n 4 --m 2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "components: 2"));
  CHECK(contains(r.out, "hypersurface classes coincide: yes"));

  r = run("components --d 3 --k 2 --n 7 --m 3 --tsv");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "SUB\t[5,2]\t3*sigma[5,3]"));

  r = run("components --d 2 --k 2 --n 4 --m 2");
  CHECK(r.code == 2);
  CHECK(contains(r.out, "d >= 3"));
  CHECK(run("components --d 3 --k 1 --n 4 --m 2").code == 2);
  CHECK(run("components --d 3 --k 2 --n 4").code == 2);
  CHECK(run("components --d 3 --k 2 --n 4 --m 2 --json --tsv").code == 2);
}

TEST_CASE("poly") {
  auto r = run("poly --d 3 --m 2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "3*T\n"));
  CHECK(contains(run("poly --d 4 --m 2").out, "4*T - 2\n"));
  CHECK(contains(run("poly --d 3 --m 3").out, "(3/2)*T^2 + (3/2)*T + 1\n"));
  const Json j = Json::parse(run("poly --d 3 --m 3 --json").out);
  CHECK(j["coefficients"] == Json{"1", "3/2", "3/2"});
  CHECK(run("poly --d 0 --m 2").code == 2);
  CHECK(run("poly --d 3 --m 1").code == 2);
  CHECK(run("poly --d x --m 2").code == 2);
}

TEST_CASE("tangent") {
  auto r = run("tangent --N 5 --m 2 --d 3 --seed 7 --json");
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["formula"] == 18);
  CHECK(j["oracle"] == 18);
  j = Json::parse(run("tangent --N 3 --m 2 --d 3 --seed 1 --json").out);
  CHECK(j["oracle"] == 12);
  CHECK(j["match"] == true);
  CHECK(run("tangent --N 2 --m 3 --d 3").code == 2);
  CHECK(run("tangent --N 5 --m 2").code == 2);
}

TEST_CASE("relations") {
  auto r = run("relations --k 2 --n 4 --json");
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["count"] == 1);
  CHECK(j["relations"][0] == "p_12*p_34 - p_13*p_24 + p_14*p_23");
  CHECK(Json::parse(run("relations --k 2 --n 5 --json").out)["count"] == 5);
  CHECK(run("relations --k 1 --n 4").code == 2);
  CHECK(run("relations --k 3 --n 4").code == 2);
}

TEST_CASE("classify") {
  auto r = run("classify " + fixture("sub_g36_m2.json") + " --json");
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["family"] == "SUB");
  CHECK(j["plane_class"] == "[3,3,1]");

  j = Json::parse(run("classify " + fixture("quot_g24_cubic.json") + " --json").out);
  CHECK(j["family"] == "QUOT");
  CHECK(j["hypersurface_class"]["coeff"] == 3);
  CHECK(j["hypersurface_class"]["partition"] == "[2,1]");
  CHECK(j["span_equals_plane"] == true);

  r = run("classify " + fixture("quot_g24_plane.json"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "family: QUOT"));

  CHECK(run("classify " + fixture("outside_g24.json")).code == 1);
  CHECK(run("classify " + fixture("corrupted_quot_plane.json")).code == 1);
  CHECK(run("classify " + fixture("malformed.json")).code == 2);
  CHECK(run("classify " + fixture("does_not_exist.json")).code == 2);
}

TEST_CASE("verify and usage") {
  CHECK(run("verify --scope bogus").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("components --help").code == 0);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("components --d 3 --k 2 --n 4 --m 2 --bogus").code == 2);
}
