#pragma once

#include <binwaring/binwaring.hpp>
#include <binwaring/io/json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace binwaring::io {

struct FixtureOutcome {
  std::string id, anchor, basis, kind;
  bool pass = false;
  std::string detail;
};

namespace fixtures_detail {

using decompose::SearchConfig;

inline std::string badges_text(const std::vector<Badge>& bs) {
  std::string s = "{";
  for (std::size_t i = 0; i < bs.size(); ++i) s += (i ? "," : "") + bs[i].to_string();
  return s + "}";
}

inline std::vector<Badge> badges_from(const json& j) {
  std::vector<Badge> out;
  for (const auto& b : j) out.push_back({b.at(0).get<unsigned>(), b.at(1).get<unsigned>()});
  std::sort(out.begin(), out.end());
  return out;
}

inline BinaryForm form_of(const json& f) {
  if (f.contains("family")) {
    polyform::ParseOptions opts;
    opts.parameter = {{"t", rational_from_json(f.at("t"))}};
    return polyform::parse_form(f.at("family").get<std::string>(), opts);
  }
  return polyform::parse_form(f.at("form").get<std::string>());
}

inline std::string check(bool ok, const std::string& got, const std::string& want) {
  return ok ? got : "got " + got + ", expected " + want;
}

using Runner = std::function<std::pair<bool, std::string>(const json&, const SearchConfig&)>;

inline std::pair<bool, std::string> run_expand(const json& f, const SearchConfig&) {
  BinaryForm got = polyform::expand_exact(rep_from_json(f.at("rep")));
  BinaryForm want = polyform::parse_form(f.at("expected_form").get<std::string>());
  bool ok = got == want;
  return {ok, check(ok, got.to_text(), want.to_text())};
}

inline std::pair<bool, std::string> run_parse(const json& f, const SearchConfig&) {
  const std::string text = f.at("text").get<std::string>();
  if (f.contains("expected_error")) {
    const std::string want = f.at("expected_error").get<std::string>();
    try {
      BinaryForm p = polyform::parse_form(text);
      return {false, "parsed as " + p.to_text() + ", expected " + want};
    } catch (const Error& e) {
      return {e.kind() == want, check(e.kind() == want, e.kind(), want)};
    }
  }
  BinaryForm p = polyform::parse_form(text);
  std::vector<Rational> want;
  for (const auto& q : f.at("expected_coeffs")) want.push_back(rational_from_json(q));
  bool ok = p.coeffs() == want;
  return {ok, check(ok, to_json(p).at("binomial_coeffs").dump(), f.at("expected_coeffs").dump())};
}

inline std::pair<bool, std::string> run_catalecticant(const json& f, const SearchConfig&) {
  json got = to_json(quadsig::catalecticant(form_of(f)).matrix());
  json want = json::array();
  for (const auto& row : f.at("expected_matrix")) {
    json r = json::array();
    for (const auto& q : row) r.push_back(to_wire(rational_from_json(q)));
    want.push_back(r);
  }
  return {got == want, check(got == want, got.dump(), want.dump())};
}

inline std::pair<bool, std::string> run_inertia(const json& f, const SearchConfig&) {
  quadsig::Inertia got = quadsig::inertia(quadsig::catalecticant(form_of(f)));
  const auto& e = f.at("expected_inertia");
  quadsig::Inertia want{e.at(0).get<unsigned>(), e.at(1).get<unsigned>(), e.at(2).get<unsigned>()};
  return {got == want, check(got == want, got.to_string(), want.to_string())};
}

inline std::pair<bool, std::string> run_factor_count(const json& f, const SearchConfig&) {
  unsigned got = realroots::real_linear_factor_count(form_of(f));
  unsigned want = f.at("expected_tau").get<unsigned>();
  return {got == want, check(got == want, "tau=" + std::to_string(got), std::to_string(want))};
}

inline std::pair<bool, std::string> run_width(const json& f, const SearchConfig&) {
  quadsig::Width w = quadsig::width(form_of(f));
  unsigned want = f.at("expected_width").get<unsigned>();
  std::string cone = quadsig::to_string(w.cone);
  bool ok = w.rank == want && cone == f.at("expected_cone").get<std::string>();
  return {ok, check(ok, "width=" + std::to_string(w.rank) + " " + cone,
                    std::to_string(want) + " " + f.at("expected_cone").get<std::string>())};
}

inline std::pair<bool, std::string> run_kernel(const json& f, const SearchConfig&) {
  auto basis = decompose::sylvester_candidates(form_of(f), f.at("r").get<unsigned>());
  json got = json::array();
  for (const auto& v : basis) {
    json row = json::array();
    for (const auto& q : v) row.push_back(to_wire(q));
    got.push_back(row);
  }
  if (f.contains("expected_dim")) {
    unsigned want = f.at("expected_dim").get<unsigned>();
    return {basis.size() == want, check(basis.size() == want, "dim=" + std::to_string(basis.size()), std::to_string(want))};
  }
  json want = json::array();
  for (const auto& row : f.at("expected_basis")) {
    json r = json::array();
    for (const auto& q : row) r.push_back(to_wire(rational_from_json(q)));
    want.push_back(r);
  }
  return {got == want, check(got == want, got.dump(), want.dump())};
}

inline std::pair<bool, std::string> run_decompose(const json& f, const SearchConfig& cfg) {
  BinaryForm p = form_of(f);
  decompose::FormCoeffs h{1};
  for (const auto& t : f.at("witness_roots")) h = decompose::multiply_forms(h, decompose::linear_factor(rational_from_json(t)));
  auto v = decompose::validate_sylvester(h);
  if (!v.valid()) return {false, "witness rejected: " + decompose::to_string(v.rejection)};
  auto res = decompose::solve_coefficients(p, *v.form, cfg.precision);
  if (!res.rep.is_rational()) return {false, "irrational coefficients"};
  std::map<Rational, Rational> got, want;
  for (const auto& t : res.rep.terms()) got[t.form.slope().rational_value()] = t.lambda.rational_value();
  for (const auto& t : f.at("expected_terms")) want[rational_from_json(t.at("beta"))] = rational_from_json(t.at("lambda"));
  std::string text;
  for (const auto& [b, l] : got) text += (text.empty() ? "" : " ") + to_text(l) + "@" + to_text(b);
  return {got == want, check(got == want, text, "listed terms")};
}

inline std::pair<bool, std::string> run_length(const json& f, const SearchConfig& cfg) {
  auto l = decompose::real_length(form_of(f), cfg);
  unsigned want = f.at("expected_length").get<unsigned>();
  bool ok = l.conclusive && l.upper == want;
  return {ok, check(ok, "[" + std::to_string(l.lower) + "," + std::to_string(l.upper) + "]", std::to_string(want))};
}

inline std::pair<bool, std::string> run_certificate(const json& f, const SearchConfig&) {
  auto c = decompose::sign_change_certificate(rep_from_json(f.at("rep")));
  unsigned tau = f.at("expected_tau").get<unsigned>(), sigma = f.at("expected_sigma").get<unsigned>();
  bool ok = c.ok && c.tau == tau && c.sigma == sigma;
  return {ok, check(ok, "tau=" + std::to_string(c.tau) + " sigma=" + std::to_string(c.sigma),
                    "tau=" + std::to_string(tau) + " sigma=" + std::to_string(sigma))};
}

inline std::pair<bool, std::string> run_lower_bound(const json& f, const SearchConfig&) {
  Badge got = decompose::signature_lower_bound(form_of(f));
  Badge want{f.at("expected_badge").at(0).get<unsigned>(), f.at("expected_badge").at(1).get<unsigned>()};
  return {got == want, check(got == want, got.to_string(), want.to_string())};
}

inline std::pair<bool, std::string> run_incomparable(const json& f, const SearchConfig&) {
  Badge b1{f.at("b1").at(0).get<unsigned>(), f.at("b1").at(1).get<unsigned>()};
  Badge b2{f.at("b2").at(0).get<unsigned>(), f.at("b2").at(1).get<unsigned>()};
  const unsigned s = f.at("s").get<unsigned>();
  if (f.contains("expected_error")) {
    const std::string want = f.at("expected_error").get<std::string>();
    try {
      decompose::incomparable_constraints_ok(b1, b2, s);
      return {false, "no error, expected " + want};
    } catch (const Error& e) {
      return {e.kind() == want, check(e.kind() == want, e.kind(), want)};
    }
  }
  bool got = decompose::incomparable_constraints_ok(b1, b2, s);
  bool want = f.at("expected").get<bool>();
  return {got == want, check(got == want, got ? "true" : "false", want ? "true" : "false")};
}

inline std::pair<bool, std::string> report_matches(const decompose::SignatureReport& r, const json& f) {
  auto want = badges_from(f.at("expected_signatures"));
  bool ok = r.status == decompose::Status::Proven && r.signatures == want;
  std::string got = badges_text(r.signatures) + " " + decompose::to_string(r.status);
  if (f.contains("expected_tag")) {
    const std::string tag = f.at("expected_tag").get<std::string>();
    bool tagged = std::find(r.provenance.begin(), r.provenance.end(), tag) != r.provenance.end();
    ok = ok && tagged;
    if (!tagged) got += " (missing tag " + tag + ")";
  }
  return {ok, check(ok, got, badges_text(want) + " proven")};
}

inline std::pair<bool, std::string> run_signature(const json& f, const SearchConfig& cfg) {
  return report_matches(decompose::signature_report(form_of(f), cfg), f);
}

inline std::pair<bool, std::string> run_quartic(const json& f, const SearchConfig& cfg) {
  return report_matches(decompose::quartic_classify(form_of(f), cfg), f);
}

inline std::pair<bool, std::string> run_sextic_oracle(const json& f, const SearchConfig& cfg) {
  Rational lambda = rational_from_json(f.at("lambda"));
  auto oracle = decompose::sextic_family_oracle(lambda);
  std::sort(oracle.begin(), oracle.end());
  if (oracle != badges_from(f.at("expected_signatures"))) return {false, "oracle disagrees: " + badges_text(oracle)};
  return report_matches(decompose::signature_report(decompose::sextic_family(lambda), cfg), f);
}

inline std::pair<bool, std::string> run_sweep(const json& f, const SearchConfig& cfg) {
  const std::string family = f.at("family").get<std::string>();
  std::vector<Rational> grid;
  for (const auto& g : f.at("grid")) grid.push_back(rational_from_json(g));
  auto make = [&](const Rational& t) {
    polyform::ParseOptions opts;
    opts.parameter = {{"t", t}};
    return polyform::parse_form(family, opts);
  };
  auto res = decompose::sweep(make, grid, polyform::parse_form(f.at("limit_form").get<std::string>()), cfg);
  auto want_rows = badges_from(f.at("expected_row_signatures"));
  const std::string want_jump = f.at("expected_jump").get<std::string>();
  for (const auto& row : res.rows) {
    if (!row.report) return {false, "row " + row.label + " failed: " + row.error};
    if (row.report->signatures != want_rows)
      return {false, "row " + row.label + " got " + badges_text(row.report->signatures)};
    if (decompose::to_string(row.jump) != want_jump)
      return {false, "row " + row.label + " jump " + decompose::to_string(row.jump) + ", expected " + want_jump};
  }
  if (!res.limit || !res.limit->report) return {false, "limit row failed"};
  return {true, badges_text(want_rows) + " -> " + badges_text(res.limit->report->signatures) + " " + want_jump};
}

// Terms lambda_k (cos(k pi/(s+1)) x + sin(k pi/(s+1)) y)^(2s) summing to a
// multiple of (x^2+y^2)^s; s = 1, 2, 3 have explicit algebraic data.
inline PowerSumRep width_identity_rep(unsigned s) {
  const unsigned d = 2 * s;
  const Rational w(1, s + 1);
  std::vector<polyform::PowerSumTerm> terms;
  auto add = [&](const Rational& lambda, polyform::ProjLinearForm form) { terms.push_back({realroots::ExactReal(lambda), form}); };
  add(w, polyform::ProjLinearForm::with_slope(Rational(0)));
  if (s == 1) {
    add(w, polyform::ProjLinearForm::y());
  } else if (s == 2) {
    // (1/2, +-sqrt(3)/2) = (1/2) * (1, +-sqrt(3))
    realroots::UniPoly t2m3{-3, 0, 1};
    for (int sgn : {1, -1}) {
      auto root = sgn > 0 ? realroots::RealAlgebraic::from_isolating(t2m3, 1, 2)
                          : realroots::RealAlgebraic::from_isolating(t2m3, -2, -1);
      add(w * binwaring::pow(Rational(1, 2), d), polyform::ProjLinearForm::with_slope(root));
    }
  } else if (s == 3) {
    add(w, polyform::ProjLinearForm::y());
    for (int sgn : {1, -1}) add(w * binwaring::pow(Rational(1, 2), s), polyform::ProjLinearForm::with_slope(Rational(sgn)));
  } else {
    throw InvalidArgument("width identity data is available for s = 1, 2, 3");
  }
  return PowerSumRep(d, std::move(terms));
}

inline std::pair<bool, std::string> run_width_identity(const json& f, const SearchConfig& cfg) {
  const unsigned s = f.at("s").get<unsigned>();
  BinaryForm want = polyform::parse_form(f.at("expected_form").get<std::string>());
  Rational tol = rational_from_json(f.at("max_width"));
  auto enc = polyform::expand_certified(width_identity_rep(s), tol, std::max(cfg.precision, 512));
  bool ok = enc.contains(want) && enc.max_width() < tol;
  std::ostringstream os;
  os << "max width " << enc.max_width().get_d();
  return {ok, check(ok, os.str(), "enclosure containing " + want.to_text())};
}

inline const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table{
      {"expand", run_expand},
      {"parse", run_parse},
      {"catalecticant", run_catalecticant},
      {"inertia", run_inertia},
      {"factor-count", run_factor_count},
      {"width", run_width},
      {"kernel", run_kernel},
      {"decompose", run_decompose},
      {"length", run_length},
      {"certificate", run_certificate},
      {"lower-bound", run_lower_bound},
      {"incomparable", run_incomparable},
      {"signature", run_signature},
      {"quartic", run_quartic},
      {"sextic-oracle", run_sextic_oracle},
      {"sweep", run_sweep},
      {"width-identity", run_width_identity},
  };
  return table;
}

}  // namespace fixtures_detail

/// Parses a fixture corpus; malformed input raises SyntaxError.
inline json load_fixture_corpus(const std::string& text) {
  json corpus;
  try {
    corpus = json::parse(text);
  } catch (const json::exception& e) {
    throw SyntaxError(std::string("fixture corpus is not valid JSON: ") + e.what());
  }
  if (!corpus.is_object() || !corpus.contains("fixtures") || !corpus.at("fixtures").is_array())
    throw SyntaxError("fixture corpus needs a \"fixtures\" array");
  return corpus;
}

/// Runs every fixture whose id or anchor contains `filter`. A fixture that
/// throws, has an unknown kind or lacks metadata is a failure.
inline std::vector<FixtureOutcome> run_fixtures(const json& corpus, const std::string& filter,
                                                const decompose::SearchConfig& cfg = {}) {
  std::vector<FixtureOutcome> out;
  for (const auto& f : corpus.at("fixtures")) {
    FixtureOutcome o;
    o.id = f.value("id", "");
    o.anchor = f.value("anchor", "");
    o.basis = f.value("basis", "");
    o.kind = f.value("kind", "");
    if (!filter.empty() && o.id.find(filter) == std::string::npos && o.anchor.find(filter) == std::string::npos) continue;
    try {
      if (o.id.empty() || o.anchor.empty()) throw SyntaxError("fixture without id or anchor");
      if (o.basis != "published" && o.basis != "trivial" && o.basis != "derived")
        throw SyntaxError("fixture basis must be published, trivial or derived");
      auto it = fixtures_detail::runners().find(o.kind);
      if (it == fixtures_detail::runners().end()) throw SyntaxError("unknown fixture kind '" + o.kind + "'");
      std::tie(o.pass, o.detail) = it->second(f, cfg);
    } catch (const Error& e) {
      o.pass = false;
      o.detail = e.kind() + ": " + e.what();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = e.what();
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace binwaring::io
