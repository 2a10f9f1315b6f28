#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "verlinde/errors.hpp"
#include "verlinde/polynomial.hpp"

namespace verlinde {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// JSON: {"n": 2, "degree": 2, "terms": [{"c": "3/2", "e": [2,0,0]}, ...]}
// ---------------------------------------------------------------------------

inline Json to_json(const HomogeneousPolynomial& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) terms.push_back(Json{{"c", to_string(c)}, {"e", m.exponents}});
  return Json{{"n", f.n()}, {"degree", f.degree()}, {"terms", terms}};
}

inline HomogeneousPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("degree") || !j.contains("terms"))
    throw ParseError("polynomial JSON needs keys n, degree, terms");
  if (!j["n"].is_number_integer() || !j["degree"].is_number_integer() || !j["terms"].is_array())
    throw ParseError("polynomial JSON: n and degree must be integers, terms an array");
  const int n = j["n"].get<int>();
  const int degree = j["degree"].get<int>();
  if (n < 1 || degree < 0) throw ParseError("polynomial JSON: need n >= 1 and degree >= 0");
  HomogeneousPolynomial f(n, degree);
  std::size_t index = 0;
  for (const auto& t : j["terms"]) {
    const std::string where = "term #" + std::to_string(index++) + " " + t.dump();
    if (!t.is_object() || !t.contains("c") || !t.contains("e") || !t["e"].is_array())
      throw ParseError(where + ": expected {\"c\": ..., \"e\": [...]}");
    Rational c;
    if (t["c"].is_string()) {
      try {
        c = parse_rational(t["c"].get<std::string>());
      } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
      }
    } else if (t["c"].is_number_integer()) {
      c = Rational(t["c"].get<long>());
    } else {
      throw ParseError(where + ": coefficient must be a fraction string");
    }
    Monomial m;
    for (const auto& e : t["e"]) {
      if (!e.is_number_integer() || e.get<long>() < 0) throw ParseError(where + ": exponents must be >= 0");
      m.exponents.push_back(e.get<unsigned>());
    }
    if (m.num_vars() != static_cast<std::size_t>(n) + 1)
      throw ParseError(where + ": exponent sequence must have length n+1 = " + std::to_string(n + 1));
    if (m.degree() != static_cast<unsigned>(degree))
      throw ParseError(where + ": exponents sum to " + std::to_string(m.degree()) + ", declared degree is " +
                       std::to_string(degree));
    f.add_term(m, c);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Inline grammar: terms `c*x0^a*x1^b...` joined by + and -, with rational c.
// ---------------------------------------------------------------------------

namespace detail {

class InlineParser {
 public:
  InlineParser(std::string_view text, int n) : text_(text), n_(n) {}

  /// Terms as (monomial, coefficient); degrees are validated by the caller.
  std::vector<std::pair<Monomial, Rational>> parse() {
    std::vector<std::pair<Monomial, Rational>> out;
    skip_ws();
    if (at_end()) throw error("empty polynomial");
    bool first = true;
    while (!at_end()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (get() == '-') sign = -1;
        skip_ws();
      } else if (!first) {
        throw error("expected '+' or '-'");
      }
      auto term = parse_term();
      term.second *= sign;
      out.push_back(std::move(term));
      first = false;
      skip_ws();
    }
    return out;
  }

 private:
  std::pair<Monomial, Rational> parse_term() {
    Monomial m{std::vector<unsigned>(static_cast<std::size_t>(n_) + 1, 0)};
    Rational c = 1;
    bool have_factor = false;
    for (;;) {
      skip_ws();
      if (at_end()) break;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        c *= parse_number();
      } else if (peek() == 'x') {
        ++pos_;
        const long var = parse_uint("variable index");
        if (var > n_) throw error("variable x" + std::to_string(var) + " out of range for n = " + std::to_string(n_));
        long exp = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          exp = parse_uint("exponent");
        }
        m.exponents[static_cast<std::size_t>(var)] += static_cast<unsigned>(exp);
      } else {
        throw error(std::string("unexpected character '") + peek() + "'");
      }
      have_factor = true;
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    if (!have_factor) throw error("empty term");
    return {m, c};
  }

  Rational parse_number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    return parse_rational(text_.substr(start, pos_ - start));
  }

  long parse_uint(const char* what) {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw error(std::string("expected ") + what);
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  ParseError error(const std::string& msg) const {
    return ParseError("inline polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + msg);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses e.g. "x0^2 - 3/2*x1*x2". The degree is taken from the terms unless `degree`
/// is given (required to type the zero polynomial "0"). Mixed-degree input is rejected.
inline HomogeneousPolynomial parse_inline_polynomial(std::string_view text, int n,
                                                     std::optional<int> degree = std::nullopt) {
  auto terms = detail::InlineParser(text, n).parse();
  std::optional<int> deg = degree;
  for (const auto& [m, c] : terms) {
    if (c == 0) continue;
    const int md = static_cast<int>(m.degree());
    if (!deg) deg = md;
    if (*deg != md)
      throw ParseError("inline polynomial '" + std::string(text) + "' is not homogeneous of degree " +
                       std::to_string(*deg));
  }
  if (!deg) throw ParseError("inline polynomial '" + std::string(text) + "' is zero; its degree is unknown");
  HomogeneousPolynomial f(n, *deg);
  for (const auto& [m, c] : terms)
    if (c != 0) f.add_term(m, c);
  return f;
}

/// Canonical inline text, accepted back by parse_inline_polynomial.
inline std::string to_inline(const HomogeneousPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Rational mag = abs(c);
    if (c < 0)
      out += first ? "-" : " - ";
    else if (!first)
      out += " + ";
    bool wrote = false;
    if (mag != 1 || m.degree() == 0) {
      out += to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (m.exponents[i] == 0) continue;
      if (wrote) out += "*";
      out += "x" + std::to_string(i);
      if (m.exponents[i] > 1) out += "^" + std::to_string(m.exponents[i]);
      wrote = true;
    }
    first = false;
  }
  return out;
}

/// Inline grammar or JSON text (anything starting with '{').
inline HomogeneousPolynomial parse_polynomial_text(std::string_view text, int n, std::optional<int> degree) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("polynomial JSON: ") + e.what());
    }
    HomogeneousPolynomial f = polynomial_from_json(j);
    if (f.n() != n) throw ParseError("polynomial JSON has n = " + std::to_string(f.n()) + ", expected " + std::to_string(n));
    if (degree && f.degree() != *degree)
      throw ParseError("polynomial JSON has degree " + std::to_string(f.degree()) + ", expected " +
                       std::to_string(*degree));
    return f;
  }
  return parse_inline_polynomial(text, n, degree);
}

}  // namespace verlinde
