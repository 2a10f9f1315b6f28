#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "verlinde/errors.hpp"

namespace verlinde {

using Integer = mpz_class;
/// GMP rationals are kept canonical: lowest terms, positive denominator, 0 = 0/1.
using Rational = mpq_class;

/// Parses "p" or "p/q" with optional leading sign. Decimals and q = 0 are rejected.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return ParseError("malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t slash = s.find('/');
  auto digits_ok = [](std::string_view part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  std::string_view sv(s);
  std::string_view num = sv.substr(0, slash);
  std::string_view den = slash == std::string::npos ? std::string_view{} : sv.substr(slash + 1);
  if (!digits_ok(num, true)) throw bad();
  if (slash != std::string::npos && !digits_ok(den, false)) throw bad();

  std::string num_str(num);
  if (!num_str.empty() && num_str.front() == '+') num_str.erase(0, 1);
  Integer p(num_str, 10);
  Integer q = 1;
  if (slash != std::string::npos) q = Integer(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator in '" + s + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(10); }
inline std::string to_string(const Integer& z) { return z.get_str(10); }

/// C(m, k) with the convention C(m, k) = 0 for k < 0 or m < k (m may be negative only through k > m).
inline Integer binomial(long m, long k) {
  if (k < 0 || m < 0 || k > m) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
  return out;
}

/// binomial() narrowed to a machine size; for dimension counts only.
inline std::size_t binomial_size(long m, long k) {
  Integer b = binomial(m, k);
  if (!b.fits_ulong_p()) throw PreconditionError("dimension count overflows machine word");
  return b.get_ui();
}

}  // namespace verlinde
