#pragma once

#include <binwaring/common/errors.hpp>
#include <binwaring/common/rational.hpp>
#include <binwaring/polyform/binary_form.hpp>

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace binwaring::polyform {

/// Options for `parse_form_detailed`: an optional named rational parameter that
/// is substituted exactly wherever it appears (used for family sweeps).
struct ParseOptions {
  std::optional<std::pair<std::string, Rational>> parameter;
};

struct ParsedForm {
  BinaryForm form;
  bool zero_form = false;  // the text denotes the zero form (degree inferred)
};

namespace detail {

// Sparse bivariate polynomial; entries whose coefficient cancels to zero are
// kept so that the degree of an all-cancelling input can still be inferred.
using Bivariate = std::map<std::pair<unsigned, unsigned>, Rational>;

class FormParser {
 public:
  FormParser(std::string_view text, const ParseOptions& opts) : s_(text), opts_(opts) {}

  Bivariate parse() {
    Bivariate p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg + " at column " + std::to_string(pos_ + 1) + " in \"" + std::string(s_) + "\"");
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static Bivariate constant(const Rational& q) { return {{{0, 0}, q}}; }
  static Bivariate add(Bivariate a, const Bivariate& b, int sign) {
    for (const auto& [k, v] : b) a[k] += sign > 0 ? v : Rational(-v);
    return a;
  }
  static Bivariate mul(const Bivariate& a, const Bivariate& b) {
    Bivariate r;
    for (const auto& [ka, va] : a)
      for (const auto& [kb, vb] : b) r[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
    return r;
  }
  static std::optional<Rational> as_constant(const Bivariate& a) {
    Rational c = 0;
    for (const auto& [k, v] : a) {
      if (k.first + k.second > 0 && v != 0) return std::nullopt;
      if (k.first + k.second == 0) c += v;
    }
    return c;
  }

  Bivariate expr() {
    Bivariate acc = term();
    while (true) {
      if (accept('+'))
        acc = add(std::move(acc), term(), 1);
      else if (accept('-'))
        acc = add(std::move(acc), term(), -1);
      else
        return acc;
    }
  }

  Bivariate term() {
    Bivariate acc = unary();
    while (true) {
      if (accept('*')) {
        acc = mul(acc, unary());
      } else if (accept('/')) {
        Bivariate den = unary();
        auto c = as_constant(den);
        if (!c) fail("division by a non-constant expression");
        if (*c == 0) fail("division by zero");
        acc = mul(acc, constant(1 / *c));
      } else {
        return acc;
      }
    }
  }

  Bivariate unary() {
    if (accept('-')) return mul(constant(-1), unary());
    if (accept('+')) return unary();
    return power();
  }

  Bivariate power() {
    Bivariate base = primary();
    if (!accept('^')) return base;
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer exponent");
    if (pos_ - start > 4) fail("exponent too large");
    unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
    Bivariate r = constant(1);
    for (unsigned i = 0; i < e; ++i) r = mul(r, base);
    return r;
  }

  Bivariate primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Bivariate e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return constant(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (name == "x") return {{{1, 0}, Rational(1)}};
      if (name == "y") return {{{0, 1}, Rational(1)}};
      if (opts_.parameter && opts_.parameter->first == name) return constant(opts_.parameter->second);
      pos_ = start;
      fail("unknown identifier '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const ParseOptions& opts_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a homogeneous polynomial in x, y. Grammar (see docs/grammar.md):
/// sums/differences of products/quotients of powers of numbers, x, y and
/// parenthesized expressions. Division is only by constants.
inline ParsedForm parse_form_detailed(std::string_view text, const ParseOptions& opts = {}) {
  detail::FormParser parser(text, opts);
  detail::Bivariate poly = parser.parse();
  std::optional<unsigned> degree;
  unsigned max_seen = 0;
  for (const auto& [k, v] : poly) {
    unsigned td = k.first + k.second;
    max_seen = std::max(max_seen, td);
    if (v == 0) continue;
    if (degree && *degree != td)
      throw NotHomogeneous("mixed total degrees " + std::to_string(*degree) + " and " + std::to_string(td) + " in \"" +
                           std::string(text) + "\"");
    degree = td;
  }
  bool zero = !degree.has_value();
  unsigned d = zero ? max_seen : *degree;
  if (d == 0) {
    if (zero) throw ZeroForm("cannot infer the degree of the zero form \"" + std::string(text) + "\"");
    throw NotHomogeneous("constant \"" + std::string(text) + "\" is not a form of positive degree");
  }
  std::vector<Rational> mono(d + 1);
  for (const auto& [k, v] : poly)
    if (k.first + k.second == d) mono[k.second] += v;
  return {BinaryForm::from_monomials(d, mono), zero};
}

inline BinaryForm parse_form(std::string_view text, const ParseOptions& opts = {}) {
  return parse_form_detailed(text, opts).form;
}

}  // namespace binwaring::polyform
