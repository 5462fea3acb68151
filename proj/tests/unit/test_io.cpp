#include <doctest.h>

#include <string>

#include "hypersig/catalog.hpp"
#include "hypersig/errors.hpp"
#include "hypersig/hvs.hpp"
#include "hypersig/io.hpp"

using namespace hypersig;

namespace {
Rational q(long p, long d = 1) { return make_rational(p, d); }

std::string message_of(const std::string& text) {
  try {
    parse_seifert_json(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

std::string scenario_message(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }
}  // namespace

TEST_CASE("Seifert JSON parsing") {
  auto s = parse_seifert_json(R"({"n": 1, "matrix": [[-1, 1], [0, -1]], "name": "t"})");
  CHECK(s.n() == 1);
  CHECK(s.mu() == 2);
  CHECK(s.name() == std::optional<std::string>("t"));
  CHECK(s.matrix() == RatMatrix{{-1, 1}, {0, -1}});
  CHECK(parse_seifert_json(R"({"n": 2, "matrix": []})").mu() == 0);
  CHECK_THROWS_AS(parse_seifert_json(R"({"n": 1, "matrix": [["7"]]})"), InputError);
}

TEST_CASE("Seifert JSON diagnostics") {
  CHECK(contains(message_of("{\n\"n\": 1,\n\"matrix\": [[1,]]\n}"), "line 3"));
  CHECK(contains(message_of(R"({"n": 1, "matrix": [[1, 2], [3]]})"), "matrix[1]"));
  CHECK(contains(message_of(R"({"n": 1, "matrix": [[1, 2], [3]]})"), "not square"));
  CHECK(contains(message_of(R"({"n": 1, "matrix": [[1.5]]})"), "matrix[0][0]"));
  CHECK(contains(message_of(R"({"n": 0, "matrix": [[1]]})"), "'n'"));
  CHECK(contains(message_of(R"({"matrix": [[1]]})"), "'n'"));
  CHECK(contains(message_of(R"({"n": 1})"), "'matrix'"));
  CHECK(contains(message_of(R"({"n": 1, "matrix": [[1]], "extra": 3})"), "'extra'"));
  CHECK(contains(message_of(R"([1, 2])"), "expected object"));
}

TEST_CASE("invariants JSON") {
  const auto j = invariants_json(catalog_entry("trefoil"));
  CHECK(j["mu"] == 2);
  CHECK(j["n"] == 1);
  CHECK(j["epsilon"] == -1);
  CHECK(j["n0"] == 0);
  CHECK(j["keef_warning"] == false);
  CHECK(j["name"] == "trefoil");
  CHECK(j["alexander"] == Json::array({1, -1, 1}));
  REQUIRE(j["eigenvalue_angles"].size() == 2);
  CHECK(j["eigenvalue_angles"][0]["alpha"] == "1/6");
  CHECK(j["eigenvalue_angles"][0]["order"] == 6);

  const auto irr = invariants_json(SeifertMatrix(1, {{-1, 1}, {0, -2}}));
  REQUIRE(irr["eigenvalue_angles"].size() == 2);
  CHECK(irr["eigenvalue_angles"][0].contains("enclosure_width"));
  CHECK_FALSE(irr["eigenvalue_angles"][0].contains("order"));
  CHECK(irr["name"].is_null());
}

TEST_CASE("spectrum JSON round trip") {
  const auto sp = extract_spectrum(catalog_entry("A3"));
  const Json j = to_json(sp);
  CHECK(j[0]["value"] == "3/4");
  CHECK(j[1]["value"] == "1");
  CHECK(j[2]["multiplicity"] == 1);
  CHECK(spectrum_from_json(j) == sp);
  CHECK(spectrum_from_json(Json::array({"3/4", "1", "5/4"})) == sp);
  CHECK(spectrum_from_json(Json::array({"1/2", "1/2"})).multiplicity_of(q(1, 2)) == 2);
  CHECK_THROWS_AS(spectrum_from_json(Json::array({"0"})), InputError);
  CHECK_THROWS_AS(spectrum_from_json(Json::array({"5/2"})), InputError);
  CHECK_THROWS_AS(spectrum_from_json(Json::array({0.5})), InputError);
  CHECK_THROWS_AS(spectrum_from_json(Json::parse(R"([{"value": "1/2", "multiplicity": 0}])")), InputError);
}

TEST_CASE("dump is sorted and newline-terminated") {
  const std::string out = dump(Json{{"zeta", 1}, {"alpha", 2}});
  CHECK(out.back() == '\n');
  CHECK(out.find("alpha") < out.find("zeta"));
}

TEST_CASE("profile CSV") {
  const auto csv = profile_csv(catalog_entry("trefoil"), {q(1, 2), q(1, 6), q(1, 100)});
  CHECK(csv.rfind("alpha,sigma,nullity,is_jump\n", 0) == 0);
  CHECK(contains(csv, "\n1/2,-2,0,false\n"));
  CHECK(contains(csv, "\n1/6,-1,1,true\n"));
  CHECK(contains(csv, "\n1/100,0,0,false\n"));
  CHECK(contains(csv, "\n5/6,-1,1,true\n"));
  CHECK_THROWS_AS(profile_csv(catalog_entry("trefoil"), {q(1)}), InputError);
  CHECK_THROWS_AS(profile_csv(catalog_entry("trefoil"), {q(0)}), InputError);
}

TEST_CASE("scenario parsing") {
  auto sc = parse_scenario(R"({"mode": "local", "central": "A3", "locals": ["A2"]})");
  CHECK(sc.mode == Mode::local);
  CHECK(run_scenario(sc).verdict == Verdict::holds);

  auto rev = parse_scenario(R"({"mode": "local", "central": "A2", "locals": [{"n": 1, "matrix": [[-1, 1, 0], [0, -1, 1], [0, 0, -1]]}]})");
  CHECK(run_scenario(rev).verdict == Verdict::fails);

  auto strict = parse_scenario(R"({"mode": "local", "central": "A3", "locals": ["A2"], "strict": true, "betti": {"b1": 0}})");
  CHECK(strict.strict);
  CHECK(strict.strict_b1 == 0L);
  CHECK(run_scenario(strict).verdict == Verdict::fails);

  auto inf = parse_scenario(R"({"mode": "infinity", "central": {"spectrum": ["1/2"]}, "locals": [{"spectrum": ["1/2", "3/2"]}]})");
  CHECK(run_scenario(inf).verdict == Verdict::fails);

  auto l2g = parse_scenario(R"({"mode": "local_to_global", "central": "A3", "locals": []})");
  CHECK(run_scenario(l2g).verdict == Verdict::vacuous);

  CHECK(contains(scenario_message(R"({"mode": "global", "central": "A3", "locals": []})"), "'mode'"));
  CHECK(contains(scenario_message(R"({"mode": "local", "central": "Q9", "locals": []})"), "'central'"));
  CHECK(contains(scenario_message(R"({"mode": "local", "central": "A3", "locals": [{"spectrum": ["1/2"]}]})"),
                 "locals[0]"));
  CHECK(contains(scenario_message(R"({"mode": "infinity", "central": "A3", "locals": []})"), "exactly one"));
  CHECK(contains(scenario_message(R"({"mode": "local", "central": "A3", "locals": [], "betti": {"b2": 1}})"),
                 "betti.b2"));
  CHECK(contains(scenario_message(R"({"mode": "local", "central": "A3", "locals": [], "foo": 1})"), "'foo'"));
}

TEST_CASE("report JSON") {
  const auto rep = run_scenario(parse_scenario(R"({"mode": "local", "central": "A3", "locals": ["A2"]})"));
  const Json j = to_json(rep);
  CHECK(j["mode"] == "local");
  CHECK(j["verdict"] == "holds");
  REQUIRE(j["records"].size() == rep.records.size());
  CHECK(j["records"][0]["alpha"] == "1/8");
  CHECK(j["records"][0].contains("slack_inside"));
}
