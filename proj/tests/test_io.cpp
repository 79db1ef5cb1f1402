#include <binwaring/binwaring.hpp>
#include <binwaring/io/fixtures.hpp>
#include <binwaring/io/json.hpp>
#include <binwaring_fixture_data.hpp>

#include <catch_amalgamated.hpp>

#include <set>

using namespace binwaring;
using io::json;
using polyform::parse_form;

TEST_CASE("rationals serialize as num/den strings", "[json]") {
  CHECK(io::to_json(Rational(3)) == "3/1");
  CHECK(io::to_json(parse_form("x^2 - 1/3*y^2"))["binomial_coeffs"] == json({"1/1", "0/1", "-1/3"}));
  CHECK(io::rational_from_json(json("-5/10")) == Rational(-1, 2));
  CHECK(io::rational_from_json(json(7)) == 7);
  CHECK_THROWS_AS(io::rational_from_json(json(0.5)), SyntaxError);
}

TEST_CASE("representations read from JSON", "[json]") {
  auto rep = io::rep_from_json(json::parse(R"({"degree": 4, "terms": [
      {"lambda": "1", "alpha": "1", "beta": "2"}, {"lambda": "-4", "alpha": "1", "beta": "1"},
      {"lambda": "6", "alpha": "1", "beta": "0"}, {"lambda": "-4", "alpha": "1", "beta": "-1"},
      {"lambda": "1", "alpha": "1", "beta": "-2"}]})"));
  CHECK(polyform::expand_exact(rep) == parse_form("24*y^4"));
  CHECK_THROWS_AS(io::rep_from_json(json::parse(R"({"terms": []})")), SyntaxError);
}

TEST_CASE("report JSON is deterministic", "[json]") {
  auto p = parse_form("6*x^5*y + 6*x*y^5");
  auto a = io::to_json(decompose::signature_report(p)).dump();
  auto b = io::to_json(decompose::signature_report(p)).dump();
  CHECK(a == b);
  auto j = json::parse(a);
  CHECK(j["status"] == "proven");
  CHECK(j["length"]["lower"] == 5);
}

TEST_CASE("irrational coefficients carry enclosures", "[json]") {
  auto p = parse_form("6*x^5*y + 6*x*y^5");
  decompose::FormCoeffs h = decompose::multiply_forms(decompose::multiply_forms({1, 1}, {1, 3, 1}), {1, -5, 1});
  auto res = decompose::solve_coefficients(p, *decompose::validate_sylvester(h).form);
  json j = io::to_json(res);
  CHECK(j["certification"] == "certified-intervals");
  bool saw_enclosure = false;
  for (const auto& t : j["representation"]["terms"])
    if (t["lambda"].contains("enclosure")) {
      saw_enclosure = true;
      Rational lo = parse_rational(t["lambda"]["enclosure"]["lo"].get<std::string>());
      Rational hi = parse_rational(t["lambda"]["enclosure"]["hi"].get<std::string>());
      CHECK(hi - lo <= Rational(1, Integer(1) << 64));
    }
  CHECK(saw_enclosure);
}

TEST_CASE("built-in fixture corpus passes", "[fixtures]") {
  auto corpus = io::load_fixture_corpus(std::string(binwaring_fixtures::kCorpus));
  auto outcomes = io::run_fixtures(corpus, "");
  CHECK(outcomes.size() >= 25);
  std::set<std::string> ids;
  for (const auto& o : outcomes) {
    INFO(o.id << ": " << o.detail);
    CHECK(o.pass);
    CHECK(ids.insert(o.id).second);
  }
}

TEST_CASE("fixture filter and corruption", "[fixtures]") {
  auto corpus = io::load_fixture_corpus(std::string(binwaring_fixtures::kCorpus));
  auto only = io::run_fixtures(corpus, "thm-4.4");
  REQUIRE_FALSE(only.empty());
  for (const auto& o : only) CHECK(o.anchor == "thm-4.4");

  json bad = corpus;
  bad["fixtures"][0]["expected_form"] = "25*y^4";
  auto outcomes = io::run_fixtures(bad, bad["fixtures"][0]["id"].get<std::string>());
  REQUIRE(outcomes.size() == 1);
  CHECK_FALSE(outcomes[0].pass);

  json nobasis = corpus;
  nobasis["fixtures"][0].erase("basis");
  CHECK_FALSE(io::run_fixtures(nobasis, nobasis["fixtures"][0]["id"].get<std::string>())[0].pass);
  CHECK_THROWS_AS(io::load_fixture_corpus("{\"fixtures\": "), SyntaxError);
  CHECK_THROWS_AS(io::load_fixture_corpus("[]"), SyntaxError);
}
