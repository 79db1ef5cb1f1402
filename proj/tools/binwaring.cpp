#include <binwaring/binwaring.hpp>
#include <binwaring/io/fixtures.hpp>
#include <binwaring/io/json.hpp>
#include <binwaring_fixture_data.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace binwaring;
using decompose::SearchConfig;
using io::json;

namespace {

enum Exit { kOk = 0, kError = 1, kInvalid = 2, kInconclusive = 3 };

struct Options {
  std::string output = "text";
  int precision = 256;
  unsigned search_budget = 10000;
  unsigned denom_bound = 12;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::string filter;

  SearchConfig config() const {
    SearchConfig c;
    c.precision = precision;
    c.search_budget = search_budget;
    c.denom_bound = denom_bound;
    c.seed = seed;
    return c;
  }
  bool as_json() const { return output == "json"; }
};

int exit_for(const Error& e) {
  const std::string k = e.kind();
  return (k == "OddDegree" || k == "ZeroForm" || k == "ZeroPolynomial") ? kInvalid : kError;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string lambda_text(const realroots::ExactReal& l) {
  if (l.is_rational()) return to_text(l.rational_value());
  static const Rational tol = Rational(1) / Rational(Integer(1) << 64);
  auto e = l.enclosure(tol, 512);
  std::ostringstream os;
  os.precision(17);
  os << "[" << e.lo.get_d() << ", " << e.hi.get_d() << "]";
  return os.str();
}

std::string rep_text(const polyform::PowerSumRep& rep) {
  std::string s;
  for (const auto& t : rep.terms()) {
    std::string f = t.form.to_string();
    if (f != "x" && f != "y") f = "(" + f + ")";
    s += (s.empty() ? "" : " + ") + lambda_text(t.lambda) + "*" + f + "^" + std::to_string(rep.degree());
  }
  return s.empty() ? "0" : s;
}

std::string badges_text(const std::vector<polyform::Badge>& bs) {
  std::string s = "{";
  for (std::size_t i = 0; i < bs.size(); ++i) s += (i ? "," : "") + bs[i].to_string();
  return s + "}";
}

void print_decomposition(const decompose::DecompResult& d, const std::string& indent) {
  std::cout << indent << "sylvester form: " << d.witness.to_text() << "\n";
  std::cout << indent << "representation: " << rep_text(d.rep) << "\n";
  std::cout << indent << "badge:          " << d.badge.to_string() << "\n";
  std::cout << indent << "certification:  " << decompose::to_string(d.certification) << "\n";
  for (const auto& t : d.rep.terms())
    if (!t.lambda.is_rational()) std::cout << indent << "  lambda at " << t.form.to_string() << " = " << t.lambda.to_string() << "\n";
}

std::string length_text(unsigned lo, unsigned hi, bool conclusive) {
  if (conclusive) return std::to_string(lo);
  return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "] (inconclusive)";
}

void print_report(const polyform::BinaryForm& p, const decompose::SignatureReport& r) {
  std::cout << "form:        " << p.to_text() << "\n";
  std::cout << "degree:      " << r.degree << "\n";
  std::cout << "inertia:     " << r.inertia.to_string() << "\n";
  std::cout << "cone:        " << quadsig::to_string(r.cone) << "\n";
  std::cout << "splits:      " << (r.splits ? "yes" : "no") << " (tau = " << r.tau << ")\n";
  std::cout << "length:      " << length_text(r.length_lower, r.length_upper, r.length_conclusive) << "\n";
  std::cout << "signatures:  " << badges_text(r.signatures) << " " << decompose::to_string(r.status) << "\n";
  std::cout << "lower bound: " << r.lower_bound_badge.to_string() << "\n";
  std::cout << "observed:    " << badges_text(r.observed_badges) << "\n";
  std::cout << "provenance:";
  for (const auto& t : r.provenance) std::cout << " " << t;
  std::cout << "\n";
  if (r.witness) {
    std::cout << "witness:\n";
    print_decomposition(*r.witness, "  ");
  }
}

int cmd_analyze(const std::string& text, const Options& o) {
  auto p = polyform::parse_form(text);
  auto r = decompose::signature_report(p, o.config());
  if (o.as_json()) {
    emit({{"form", io::to_json(p)}, {"report", io::to_json(r)}});
  } else {
    print_report(p, r);
  }
  return r.conclusive() ? kOk : kInconclusive;
}

int cmd_decompose(const std::string& text, const Options& o) {
  auto p = polyform::parse_form(text);
  auto l = decompose::real_length(p, o.config());
  json degrees = json::array();
  for (const auto& d : l.degrees) degrees.push_back(io::to_json(d));
  if (o.as_json()) {
    emit({{"form", io::to_json(p)},
          {"length", {{"lower", l.lower}, {"upper", l.upper}, {"conclusive", l.conclusive}}},
          {"decomposition", l.decomposition ? io::to_json(*l.decomposition) : json(nullptr)},
          {"degrees", degrees}});
  } else {
    std::cout << "form:   " << p.to_text() << "\n";
    std::cout << "length: " << length_text(l.lower, l.upper, l.conclusive) << "\n";
    if (l.decomposition) print_decomposition(*l.decomposition, "");
    else std::cout << "no representation found within the search budget\n";
  }
  return l.conclusive && l.decomposition ? kOk : kInconclusive;
}

json read_rep_json(const std::string& arg) {
  std::string text = arg;
  if (arg.find('{') == std::string::npos) {
    std::ifstream in(arg);
    if (!in) throw SyntaxError("cannot read representation file '" + arg + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw SyntaxError(std::string("representation is not valid JSON: ") + e.what());
  }
}

int cmd_verify(const std::string& rep_arg, const std::string& expected_text, const Options& o) {
  auto rep = io::rep_from_json(read_rep_json(rep_arg));
  auto got = polyform::expand_exact(rep);
  auto want = polyform::parse_form(expected_text);
  json out{{"expanded", io::to_json(got)}, {"expected", io::to_json(want)}};
  bool pass = got.degree() == want.degree() && got == want;
  out["pass"] = pass;
  json mismatch = nullptr;
  if (!pass) {
    if (got.degree() != want.degree()) {
      mismatch = {{"reason", "degree"}, {"got", got.degree()}, {"expected", want.degree()}};
    } else {
      for (unsigned j = 0; j <= got.degree(); ++j)
        if (got.monomial_coeff(j) != want.monomial_coeff(j)) {
          const unsigned d = got.degree();
          mismatch = {{"monomial", "x^" + std::to_string(d - j) + "*y^" + std::to_string(j)},
                      {"index", j},
                      {"got", to_wire(got.monomial_coeff(j))},
                      {"expected", to_wire(want.monomial_coeff(j))}};
          break;
        }
    }
  }
  out["first_difference"] = mismatch;
  json cert = nullptr;
  if (rep.size() >= 2 && !got.is_zero()) {
    auto c = decompose::sign_change_certificate(rep, got);
    cert = {{"tau", c.tau}, {"sigma", c.sigma}, {"ok", c.ok}};
  }
  out["certificate"] = cert;
  if (o.as_json()) {
    emit(out);
  } else {
    std::cout << (pass ? "PASS" : "FAIL") << "  " << got.to_text() << "\n";
    if (!pass) {
      if (mismatch.contains("monomial"))
        std::cout << "first difference at " << mismatch["monomial"].get<std::string>() << ": got "
                  << mismatch["got"].get<std::string>() << ", expected " << mismatch["expected"].get<std::string>() << "\n";
      else
        std::cout << "degree " << got.degree() << " differs from expected degree " << want.degree() << "\n";
    }
    if (!cert.is_null())
      std::cout << "tau = " << cert["tau"] << ", sigma = " << cert["sigma"] << ", ok = " << (cert["ok"].get<bool>() ? "true" : "false")
                << "\n";
    else
      std::cout << "sign-change certificate: not applicable\n";
  }
  return pass ? kOk : kError;
}

std::vector<Rational> parse_grid(const std::string& spec) {
  std::vector<Rational> grid;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw SyntaxError("empty grid entry in '" + spec + "'");
    grid.push_back(parse_rational(item));
  }
  if (grid.empty()) throw SyntaxError("empty grid");
  return grid;
}

json row_json(const decompose::SweepRow& row) {
  json j{{"label", row.label}, {"jump", decompose::to_string(row.jump)}};
  j["parameter"] = row.parameter ? json(to_wire(*row.parameter)) : json(nullptr);
  j["form"] = row.form ? io::to_json(*row.form) : json(nullptr);
  j["report"] = row.report ? io::to_json(*row.report) : json(nullptr);
  j["error"] = row.error_kind.empty() ? json(nullptr) : json{{"kind", row.error_kind}, {"message", row.error}};
  return j;
}

void print_row(const decompose::SweepRow& row) {
  std::ostringstream os;
  os << std::left << std::setw(10) << row.label;
  if (!row.report) {
    os << "error " << row.error_kind << ": " << row.error;
  } else {
    const auto& r = *row.report;
    os << std::setw(22) << badges_text(r.signatures) << std::setw(10) << decompose::to_string(r.status) << std::setw(14)
       << length_text(r.length_lower, r.length_upper, r.length_conclusive) << std::setw(6) << decompose::to_string(row.jump);
    for (const auto& t : r.provenance) os << " " << t;
  }
  std::cout << os.str() << "\n";
}

int cmd_sweep(const std::string& family, const std::string& grid_spec, const std::string& limit_t,
              const std::string& limit_form, const Options& o) {
  auto grid = parse_grid(grid_spec);
  auto make = [&](const Rational& t) {
    polyform::ParseOptions opts;
    opts.parameter = {{"t", t}};
    return polyform::parse_form(family, opts);
  };
  std::optional<polyform::BinaryForm> limit;
  if (!limit_form.empty()) limit = polyform::parse_form(limit_form);
  else if (!limit_t.empty()) limit = make(parse_rational(limit_t));
  auto res = decompose::sweep(make, grid, limit, o.config(), o.jobs);

  bool any_error = false, any_inconclusive = false;
  auto tally = [&](const decompose::SweepRow& row) {
    if (!row.report) any_error = true;
    else if (!row.report->conclusive()) any_inconclusive = true;
  };
  for (const auto& row : res.rows) tally(row);
  if (res.limit) tally(*res.limit);

  if (o.as_json()) {
    json rows = json::array();
    for (const auto& row : res.rows) rows.push_back(row_json(row));
    emit({{"family", family}, {"rows", rows}, {"limit", res.limit ? row_json(*res.limit) : json(nullptr)}});
  } else {
    std::cout << std::left << std::setw(10) << "t" << std::setw(22) << "signatures" << std::setw(10) << "status" << std::setw(14)
              << "length" << std::setw(6) << "jump" << " provenance\n";
    for (const auto& row : res.rows) print_row(row);
    if (res.limit) print_row(*res.limit);
  }
  if (any_error) return kError;
  return any_inconclusive ? kInconclusive : kOk;
}

int cmd_fixtures(const std::string& file, const Options& o) {
  std::string text(binwaring_fixtures::kCorpus);
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw SyntaxError("cannot read fixture file '" + file + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  auto corpus = io::load_fixture_corpus(text);
  auto outcomes = io::run_fixtures(corpus, o.filter, o.config());
  std::vector<std::string> failing;
  for (const auto& f : outcomes)
    if (!f.pass) failing.push_back(f.id);
  if (o.as_json()) {
    json arr = json::array();
    for (const auto& f : outcomes)
      arr.push_back({{"id", f.id}, {"anchor", f.anchor}, {"basis", f.basis}, {"kind", f.kind}, {"pass", f.pass}, {"detail", f.detail}});
    emit({{"fixtures", arr}, {"total", outcomes.size()}, {"failed", failing}});
  } else {
    for (const auto& f : outcomes)
      std::cout << (f.pass ? "PASS " : "FAIL ") << std::left << std::setw(34) << f.id << std::setw(14) << f.anchor << f.detail << "\n";
    std::cout << outcomes.size() - failing.size() << "/" << outcomes.size() << " fixtures passed\n";
    if (!failing.empty()) {
      std::cout << "failing:";
      for (const auto& id : failing) std::cout << " " << id;
      std::cout << "\n";
    }
  }
  return failing.empty() ? kOk : kError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real Waring decompositions and signatures of binary forms"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--output", o.output, "Output format")->check(CLI::IsMember({"text", "json"}))->envname("BINWARING_OUTPUT");
  app.add_option("--precision", o.precision, "Bisection steps for certified enclosures")
      ->check(CLI::PositiveNumber)
      ->envname("BINWARING_PRECISION");
  app.add_option("--search-budget", o.search_budget, "Candidate forms tested per degree")
      ->check(CLI::PositiveNumber)
      ->envname("BINWARING_SEARCH_BUDGET");
  app.add_option("--denom-bound", o.denom_bound, "Largest denominator in rational search grids")
      ->check(CLI::PositiveNumber)
      ->envname("BINWARING_DENOM_BOUND");
  app.add_option("--seed", o.seed, "Seed for randomized candidates")->envname("BINWARING_SEED");
  app.add_option("--jobs", o.jobs, "Parallel sweep rows")->check(CLI::PositiveNumber)->envname("BINWARING_JOBS");
  app.add_option("--filter", o.filter, "Only fixtures whose id or anchor contains STR")->envname("BINWARING_FILTER");

  std::string form, rep_arg, expected, family, grid, limit_t, limit_form, fixture_file;
  auto* analyze = app.add_subcommand("analyze", "Signature report of an even-degree form");
  analyze->add_option("FORM", form)->required();
  auto* decomp = app.add_subcommand("decompose", "Shortest representation found by the search");
  decomp->add_option("FORM", form)->required();
  auto* verify = app.add_subcommand("verify", "Expand a rational representation and compare");
  verify->add_option("REP", rep_arg, "JSON file or inline JSON")->required();
  verify->add_option("EXPECTED", expected, "Expected form")->required();
  auto* sw = app.add_subcommand("sweep", "Signature reports over a parameter grid");
  sw->add_option("FAMILY", family, "Form in the parameter t")->required();
  sw->add_option("GRID", grid, "Comma-separated rationals")->required();
  auto* lt = sw->add_option("--limit", limit_t, "Limit parameter value");
  sw->add_option("--limit-form", limit_form, "Limit form")->excludes(lt);
  auto* fx = app.add_subcommand("fixtures", "Run the fixture corpus");
  fx->add_option("--file", fixture_file, "Corpus file instead of the built-in one");
  for (auto* sub : {analyze, decomp, verify, sw, fx}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*analyze) return cmd_analyze(form, o);
    if (*decomp) return cmd_decompose(form, o);
    if (*verify) return cmd_verify(rep_arg, expected, o);
    if (*sw) return cmd_sweep(family, grid, limit_t, limit_form, o);
    if (*fx) return cmd_fixtures(fixture_file, o);
  } catch (const Error& e) {
    if (o.as_json()) emit(io::error_json(e.kind(), e.what()));
    else std::cerr << "error (" << e.kind() << "): " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    if (o.as_json()) emit(io::error_json("Error", e.what()));
    else std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
