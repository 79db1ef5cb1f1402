#include <binwaring/binwaring.hpp>

#include <catch_amalgamated.hpp>

#include "support.hpp"

#include <random>

using namespace binwaring;
using namespace binwaring::decompose;
using polyform::parse_form;

namespace {

bool has_tag(const SignatureReport& r, const std::string& tag) {
  return std::find(r.provenance.begin(), r.provenance.end(), tag) != r.provenance.end();
}

}  // namespace

TEST_CASE("possible signatures", "[report]") {
  CHECK(possible_signatures(1).size() == 5);
  CHECK(is_possible_signature({3, 0}, 2));
  CHECK_FALSE(is_possible_signature({3, 1}, 2));
  CHECK(is_possible_signature({2, 2}, 2));
}

TEST_CASE("sign-change certificate", "[report]") {
  auto eq12 = polyform::PowerSumRep::from_rational(4, {{1, 1, 2}, {-4, 1, 1}, {6, 1, 0}, {-4, 1, -1}, {1, 1, -2}});
  auto c = sign_change_certificate(eq12);
  CHECK(c.tau == 4);
  CHECK(c.sigma == 4);
  CHECK(c.ok);
  CHECK_THROWS_AS(sign_change_certificate(polyform::PowerSumRep::from_rational(4, {{1, 1, 0}})), DegenerateRepresentation);
  CHECK_THROWS_AS(sign_change_certificate(polyform::PowerSumRep::from_rational(2, {{1, 1, 1}, {-1, 1, 1}})), NotHonest);
  // x^2 - y^2 - (x^2 - y^2) is not honest; a zero sum with distinct forms:
  auto zero = polyform::PowerSumRep::from_rational(2, {{1, 1, 1}, {1, 1, -1}, {-2, 1, 0}, {-2, 0, 1}});
  CHECK_THROWS_AS(sign_change_certificate(zero), DegenerateRepresentation);
}

TEST_CASE("signature lower bounds", "[report]") {
  CHECK(signature_lower_bound(parse_form("8*x^4 + 48*x^2*y^2 - 8*y^4")) == polyform::Badge{2, 1});
  CHECK(signature_lower_bound(parse_form("6*x^5*y - 20*x^3*y^3 + 6*x*y^5")) == polyform::Badge{3, 3});
  CHECK(signature_lower_bound(parse_form("x^4")) == polyform::Badge{1, 0});
  CHECK_THROWS_AS(signature_lower_bound(parse_form("x^3")), OddDegree);
}

TEST_CASE("incomparable constraints", "[report]") {
  CHECK(incomparable_constraints_ok({3, 2}, {2, 3}, 3));
  CHECK(incomparable_constraints_ok({2, 3}, {3, 2}, 3));
  CHECK_FALSE(incomparable_constraints_ok({2, 1}, {1, 2}, 2));
  CHECK_FALSE(incomparable_constraints_ok({4, 0}, {1, 3}, 3));
  CHECK_THROWS_AS(incomparable_constraints_ok({2, 2}, {1, 1}, 3), NotIncomparable);
}

TEST_CASE("sextic oracle regions", "[report]") {
  CHECK(sextic_family_oracle(Rational(-3, 5)) == std::vector<polyform::Badge>{{3, 3}});
  CHECK(sextic_family_oracle(Rational(-1, 2)).size() == 2);
  CHECK(sextic_family_oracle(0).size() == 2);
  CHECK(sextic_family_oracle(Rational(1, 1000)) == std::vector<polyform::Badge>{{2, 2}});
  CHECK(sextic_family_oracle(1) == std::vector<polyform::Badge>{{1, 1}});
}

TEST_CASE("quadratic forms follow their inertia", "[report]") {
  auto r = signature_report(parse_form("x^2 - 3*x*y"));
  CHECK(r.signatures == std::vector<polyform::Badge>{{1, 1}});
  CHECK(has_tag(r, "thm-2.2"));
  CHECK(r.conclusive());
}

TEST_CASE("definite forms are in a cone", "[report]") {
  auto r = signature_report(-parse_form("(x^2 + y^2)^3"));
  CHECK(r.signatures == std::vector<polyform::Badge>{{0, 4}});
  CHECK(has_tag(r, "thm-2.9.3"));
  auto w = signature_report(parse_form("x^6 + y^6"));
  CHECK(w.signatures == std::vector<polyform::Badge>{{2, 0}});
  CHECK(has_tag(w, "thm-2.9.2"));
}

TEST_CASE("the q_0 report proves two incomparable signatures", "[report]") {
  auto r = signature_report(sextic_family(0));
  CHECK(r.status == Status::Proven);
  CHECK(r.signatures == std::vector<polyform::Badge>{{2, 3}, {3, 2}});
  CHECK(r.length_lower == 5);
  CHECK(r.length_upper == 5);
  CHECK(has_tag(r, "lem-4.6"));
  REQUIRE(r.witness);
}

TEST_CASE("report errors", "[report]") {
  CHECK_THROWS_AS(signature_report(parse_form("x^3")), OddDegree);
  CHECK_THROWS_AS(signature_report(BinaryForm::zero(4)), ZeroForm);
  CHECK_THROWS_AS(quartic_classify(parse_form("x^6")), InvalidArgument);
}

TEST_CASE("jump classification", "[sweep]") {
  using B = polyform::Badge;
  CHECK(classify_jump({B{2, 2}}, {B{2, 2}}) == Jump::None);
  CHECK(classify_jump({B{2, 1}}, {B{2, 2}}) == Jump::Up);
  CHECK(classify_jump({B{3, 0}}, {B{1, 0}}) == Jump::Down);
  CHECK(classify_jump({B{2, 2}}, {B{2, 3}, B{3, 2}}) == Jump::Up);
}

TEST_CASE("sweep keeps grid order and embeds row errors", "[sweep]") {
  std::vector<Rational> grid{2, 0, 1, Rational(1, 2)};
  auto family = [](const Rational& t) {
    polyform::ParseOptions opts;
    opts.parameter = {{"t", t}};
    return parse_form("(1/t)*x^4 + 6*x^2*y^2 + (1/t)*y^4", opts);
  };
  auto serial = sweep(family, grid, parse_form("x^2*y^2"), {}, 1);
  auto parallel = sweep(family, grid, parse_form("x^2*y^2"), {}, 3);
  REQUIRE(serial.rows.size() == 4);
  CHECK(serial.rows[1].error_kind == "SyntaxError");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(serial.rows[i].label == parallel.rows[i].label);
    CHECK(serial.rows[i].jump == parallel.rows[i].jump);
    if (serial.rows[i].report) CHECK(serial.rows[i].report->signatures == parallel.rows[i].report->signatures);
  }
  CHECK(serial.rows[0].jump == Jump::Up);
}
