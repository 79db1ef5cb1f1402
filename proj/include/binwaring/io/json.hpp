#pragma once

#include <binwaring/binwaring.hpp>

#include <json.hpp>

#include <algorithm>
#include <array>
#include <string>
#include <vector>

namespace binwaring::io {

using nlohmann::json;
using decompose::DecompResult;
using decompose::SignatureReport;
using polyform::Badge;
using polyform::BinaryForm;
using polyform::PowerSumRep;

inline json to_json(const Rational& q) { return to_wire(q); }

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (!j.is_string()) throw SyntaxError("expected a rational as a \"num/den\" string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

inline json to_json(const realroots::Interval& iv) { return {{"lo", to_wire(iv.lo)}, {"hi", to_wire(iv.hi)}}; }

inline json to_json(const BinaryForm& p) {
  json a = json::array();
  for (const auto& q : p.coeffs()) a.push_back(to_wire(q));
  return {{"degree", p.degree()}, {"binomial_coeffs", a}, {"text", p.to_text()}};
}

inline json to_json(const Badge& b) { return {{"pos", b.pos}, {"neg", b.neg}}; }

inline json to_json(const std::vector<Badge>& bs) {
  json a = json::array();
  for (const auto& b : bs) a.push_back(to_json(b));
  return a;
}

inline json to_json(const quadsig::Inertia& in) { return {{"pos", in.pos}, {"neg", in.neg}, {"null", in.null}}; }

inline json to_json(const quadsig::Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_wire(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline json poly_to_json(const realroots::UniPoly& f) {
  json a = json::array();
  for (const auto& q : f.coeffs()) a.push_back(to_wire(q));
  return a;
}

/// Exact value when rational; otherwise its sign, a certified enclosure of
/// width at most 2^-64 and the algebraic description.
inline json to_json(const realroots::ExactReal& x, int precision) {
  if (x.is_rational()) return {{"value", to_wire(x.rational_value())}, {"sign", x.sign()}};
  static const Rational tol = Rational(1) / Rational(Integer(1) << 64);
  return {{"sign", x.sign()}, {"enclosure", to_json(x.enclosure(tol, precision))}, {"algebraic", x.to_string()}};
}

inline json to_json(const realroots::RealAlgebraic& x) {
  if (x.is_rational()) return {{"value", to_wire(x.rational_value())}};
  return {{"defining_poly", poly_to_json(x.defining())}, {"isolating", to_json(x.interval())}};
}

inline json to_json(const polyform::ProjLinearForm& f) {
  json out{{"alpha", to_wire(f.alpha())}, {"text", f.to_string()}};
  out["beta"] = f.is_y() ? json{{"value", "1/1"}} : to_json(f.slope());
  return out;
}

inline json to_json(const PowerSumRep& rep, int precision) {
  json terms = json::array();
  for (const auto& t : rep.terms()) terms.push_back({{"lambda", to_json(t.lambda, precision)}, {"form", to_json(t.form)}});
  return {{"degree", rep.degree()}, {"terms", terms}};
}

inline json to_json(const decompose::SylvesterForm& h) {
  json c = json::array();
  for (const auto& q : h.coeffs) c.push_back(to_wire(q));
  json roots = json::array();
  for (const auto& r : h.roots.finite) roots.push_back(to_json(r));
  return {{"r", h.r}, {"coeffs", c}, {"text", h.to_text()}, {"finite_roots", roots},
          {"infinity_multiplicity", h.roots.infinity_multiplicity}};
}

inline json to_json(const DecompResult& d) {
  return {{"representation", to_json(d.rep, std::max(d.precision, 256))},
          {"badge", to_json(d.badge)},
          {"certification", decompose::to_string(d.certification)},
          {"precision", d.precision},
          {"witness", to_json(d.witness)}};
}

inline json to_json(const decompose::DegreeRecord& r) {
  return {{"r", r.r}, {"kernel_dim", r.kernel_dim}, {"outcome", decompose::to_string(r.outcome)}, {"candidates", r.candidates}};
}

inline json to_json(const SignatureReport& rep) {
  json degrees = json::array();
  for (const auto& r : rep.degrees) degrees.push_back(to_json(r));
  return {{"degree", rep.degree},
          {"inertia", to_json(rep.inertia)},
          {"cone", quadsig::to_string(rep.cone)},
          {"tau", rep.tau},
          {"splits", rep.splits},
          {"length", {{"lower", rep.length_lower}, {"upper", rep.length_upper}, {"conclusive", rep.length_conclusive}}},
          {"signatures", to_json(rep.signatures)},
          {"status", decompose::to_string(rep.status)},
          {"lower_bound_badge", to_json(rep.lower_bound_badge)},
          {"provenance", rep.provenance},
          {"observed_badges", to_json(rep.observed_badges)},
          {"witness", rep.witness ? to_json(*rep.witness) : json(nullptr)},
          {"degrees", degrees}};
}

/// Reads {"degree": d, "terms": [{"lambda": q, "alpha": q, "beta": q}, ...]}
/// with rational entries; forms are normalized and lambdas rescaled.
inline PowerSumRep rep_from_json(const json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("terms"))
    throw SyntaxError("representation JSON needs \"degree\" and \"terms\"");
  const unsigned d = j.at("degree").get<unsigned>();
  std::vector<std::array<Rational, 3>> triples;
  for (const auto& t : j.at("terms"))
    triples.push_back({rational_from_json(t.at("lambda")), rational_from_json(t.at("alpha")), rational_from_json(t.at("beta"))});
  return PowerSumRep::from_rational(d, triples);
}

inline json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace binwaring::io
