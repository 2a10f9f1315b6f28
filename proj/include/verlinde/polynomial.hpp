#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "verlinde/errors.hpp"
#include "verlinde/matrix.hpp"
#include "verlinde/random.hpp"
#include "verlinde/rational.hpp"

namespace verlinde {

/// Exponent vector of x0^e0 * ... * xn^en.
struct Monomial {
  std::vector<unsigned> exponents;

  std::size_t num_vars() const { return exponents.size(); }
  unsigned degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0u); }

  /// Graded lex, x0 > x1 > ... > xn. Within a degree the larger monomial (x0^m) sorts first,
  /// so iterating an ordered container visits monomials in basis order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return b.exponents <=> a.exponents;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) m.exponents[i] += b.exponents[i];
    return m;
  }
};

/// All monomials of degree m in n+1 variables, in graded lex order. Empty for m < 0.
inline std::vector<Monomial> monomial_basis(int n, int m) {
  if (n < 1) throw PreconditionError("monomial_basis: n must be >= 1");
  std::vector<Monomial> out;
  if (m < 0) return out;
  Monomial cur{std::vector<unsigned>(static_cast<std::size_t>(n) + 1, 0)};
  // Lex-descending enumeration: give as much degree as possible to earlier variables first.
  auto rec = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var + 1 == cur.exponents.size()) {
      cur.exponents[var] = remaining;
      out.push_back(cur);
      return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
      cur.exponents[var] = e;
      self(self, var + 1, remaining - e);
    }
  };
  rec(rec, 0, static_cast<unsigned>(m));
  return out;
}

/// Position of each monomial of a graded piece in monomial_basis order.
class MonomialIndex {
 public:
  MonomialIndex(int n, int m) : basis_(monomial_basis(n, m)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  }
  std::size_t size() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t at(const Monomial& m) const { return index_.at(m); }

 private:
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
};

/// Homogeneous form of fixed degree in n+1 variables; zero coefficients are never stored.
class HomogeneousPolynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  HomogeneousPolynomial(int n, int degree) : n_(n), degree_(degree) {
    if (n < 1) throw PreconditionError("polynomial needs n >= 1");
    if (degree < 0) throw PreconditionError("polynomial degree must be >= 0");
  }

  /// Throws if a monomial has the wrong length or degree.
  HomogeneousPolynomial(int n, int degree, const Terms& terms) : HomogeneousPolynomial(n, degree) {
    for (const auto& [m, c] : terms) add_term(m, c);
  }

  /// The single variable x_i.
  static HomogeneousPolynomial variable(int n, int i) {
    Monomial m{std::vector<unsigned>(static_cast<std::size_t>(n) + 1, 0)};
    m.exponents.at(static_cast<std::size_t>(i)) = 1;
    HomogeneousPolynomial p(n, 1);
    p.add_term(m, 1);
    return p;
  }

  /// Uniform integer coefficients in [-bound, bound] on every monomial; never the zero form.
  static HomogeneousPolynomial random(int n, int degree, Rng& rng, long bound = kDefaultCoefficientBound) {
    const auto basis = monomial_basis(n, degree);
    for (;;) {
      HomogeneousPolynomial p(n, degree);
      for (const auto& m : basis) p.add_term(m, rng.coefficient(bound));
      if (!p.is_zero()) return p;
    }
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (m.num_vars() != static_cast<std::size_t>(n_) + 1)
      throw PreconditionError("monomial has " + std::to_string(m.num_vars()) + " exponents, expected " +
                              std::to_string(n_ + 1));
    if (m.degree() != static_cast<unsigned>(degree_))
      throw PreconditionError("monomial of degree " + std::to_string(m.degree()) +
                              " in a form of degree " + std::to_string(degree_));
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int n() const { return n_; }
  std::size_t num_vars() const { return static_cast<std::size_t>(n_) + 1; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Coefficient vector in monomial_basis(n, degree) order.
  ExactVector coefficients() const {
    MonomialIndex idx(n_, degree_);
    ExactVector v(idx.size());
    for (const auto& [m, c] : terms_) v[idx.at(m)] = c;
    return v;
  }

  friend bool operator==(const HomogeneousPolynomial&, const HomogeneousPolynomial&) = default;

  friend HomogeneousPolynomial operator+(const HomogeneousPolynomial& f, const HomogeneousPolynomial& g) {
    if (f.n_ != g.n_ || f.degree_ != g.degree_) throw PreconditionError("adding forms of different shape");
    HomogeneousPolynomial s = f;
    for (const auto& [m, c] : g.terms_) s.add_term(m, c);
    return s;
  }

  friend HomogeneousPolynomial operator*(const Rational& c, const HomogeneousPolynomial& f) {
    HomogeneousPolynomial s(f.n_, f.degree_);
    for (const auto& [m, a] : f.terms_) s.add_term(m, c * a);
    return s;
  }

  friend HomogeneousPolynomial operator-(const HomogeneousPolynomial& f, const HomogeneousPolynomial& g) {
    return f + Rational(-1) * g;
  }

 private:
  int n_;
  int degree_;
  Terms terms_;
};

/// Product of two forms; degree is additive.
inline HomogeneousPolynomial poly_mul(const HomogeneousPolynomial& f, const HomogeneousPolynomial& g) {
  if (f.n() != g.n()) throw PreconditionError("poly_mul: mismatched num_vars");
  HomogeneousPolynomial p(f.n(), f.degree() + g.degree());
  for (const auto& [mf, cf] : f.terms())
    for (const auto& [mg, cg] : g.terms()) p.add_term(mf * mg, cf * cg);
  return p;
}

inline HomogeneousPolynomial operator*(const HomogeneousPolynomial& f, const HomogeneousPolynomial& g) {
  return poly_mul(f, g);
}

/// Matrix of theta -> f*theta from H^0(O(src_deg)) to H^0(O(src_deg + deg f)) in basis order.
/// Column j holds the coefficients of f times the j-th source monomial.
inline ExactMatrix mult_matrix(const HomogeneousPolynomial& f, int src_deg) {
  if (src_deg < 0) throw PreconditionError("mult_matrix: negative source degree");
  const auto src = monomial_basis(f.n(), src_deg);
  MonomialIndex dst(f.n(), src_deg + f.degree());
  ExactMatrix m(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j)
    for (const auto& [mono, c] : f.terms()) m(dst.at(mono * src[j]), j) += c;
  return m;
}

/// Binary form sum_j coeffs[j] * s^(degree-j) * t^j; coeffs is indexed by the power of t.
struct BinaryForm {
  int degree = 0;
  std::vector<Rational> coeffs;

  bool is_zero() const {
    for (const auto& c : coeffs)
      if (c != 0) return false;
    return true;
  }
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
};

inline BinaryForm binary_mul(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm p{a.degree + b.degree, std::vector<Rational>(static_cast<std::size_t>(a.degree + b.degree) + 1)};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) p.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return p;
}

/// Substitutes x_i = subst(i,0) * s + subst(i,1) * t.
inline BinaryForm restrict_to_line(const HomogeneousPolynomial& f, const ExactMatrix& subst) {
  if (subst.rows() != f.num_vars() || subst.cols() != 2)
    throw PreconditionError("restrict_to_line: substitution must be (n+1) x 2");
  const int d = f.degree();
  // powers[i][e] = (a_i s + b_i t)^e
  std::vector<std::vector<BinaryForm>> powers(f.num_vars());
  for (std::size_t i = 0; i < f.num_vars(); ++i) {
    BinaryForm lin{1, {subst(i, 0), subst(i, 1)}};
    powers[i].push_back(BinaryForm{0, {Rational(1)}});
    for (int e = 1; e <= d; ++e) powers[i].push_back(binary_mul(powers[i].back(), lin));
  }
  BinaryForm out{d, std::vector<Rational>(static_cast<std::size_t>(d) + 1)};
  for (const auto& [m, c] : f.terms()) {
    BinaryForm term{0, {c}};
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
      if (m.exponents[i] != 0) term = binary_mul(term, powers[i][m.exponents[i]]);
    for (std::size_t j = 0; j < term.coeffs.size(); ++j) out.coeffs[j] += term.coeffs[j];
  }
  return out;
}

namespace detail {

using UniPoly = std::vector<Rational>;  // index = power of the variable

inline void trim(UniPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Remainder of a by b (b nonzero, trimmed).
inline UniPoly poly_rem(UniPoly a, const UniPoly& b) {
  trim(a);
  const Rational lead_inv = 1 / b.back();
  while (a.size() >= b.size()) {
    const Rational q = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

/// Degree of gcd in Q[t] of two nonzero polynomials, by Euclid.
inline int univariate_gcd_degree(UniPoly a, UniPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UniPoly r = poly_rem(a, b);
    // Normalize to monic so coefficients stay small.
    if (!r.empty()) {
      const Rational inv = 1 / r.back();
      for (auto& c : r) c *= inv;
    }
    a = std::move(b);
    b = std::move(r);
  }
  return static_cast<int>(a.size()) - 1;
}

}  // namespace detail

/// Degree of the gcd of two nonzero binary forms.
/// A form F factors as s^e * G with s not dividing G; G(1,t) then has degree deg G exactly,
/// so deg gcd = min(e1, e2) + deg gcd_{Q[t]}(G1(1,t), G2(1,t)).
inline int binary_gcd_degree(const BinaryForm& f, const BinaryForm& g) {
  if (f.is_zero() || g.is_zero()) throw PreconditionError("binary_gcd_degree: zero form");
  detail::UniPoly a(f.coeffs.begin(), f.coeffs.end());
  detail::UniPoly b(g.coeffs.begin(), g.coeffs.end());
  detail::trim(a);
  detail::trim(b);
  const int s_power_f = f.degree - (static_cast<int>(a.size()) - 1);
  const int s_power_g = g.degree - (static_cast<int>(b.size()) - 1);
  return std::min(s_power_f, s_power_g) + detail::univariate_gcd_degree(std::move(a), std::move(b));
}

/// Monte Carlo degree of gcd(f1, f2): min over random line restrictions of the binary gcd degree.
/// Never below the true value; equal to it unless every line hits a proper closed locus.
inline int gcd_degree(const HomogeneousPolynomial& f1, const HomogeneousPolynomial& f2, int trials,
                      std::uint64_t seed, long bound = kDefaultCoefficientBound) {
  if (f1.n() != f2.n()) throw PreconditionError("gcd_degree: mismatched num_vars");
  if (f1.is_zero() || f2.is_zero()) throw PreconditionError("gcd_degree: zero form");
  if (trials < 1) throw PreconditionError("gcd_degree: trials must be positive");
  constexpr int kRetries = 32;
  int best = std::min(f1.degree(), f2.degree());
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(seed, 0x6763640000000000ULL, static_cast<std::uint64_t>(trial)));
    bool done = false;
    for (int attempt = 0; attempt < kRetries && !done; ++attempt) {
      ExactMatrix subst = random_matrix(f1.num_vars(), 2, rng, bound);
      if (rank(subst) < 2) continue;
      const BinaryForm r1 = restrict_to_line(f1, subst);
      const BinaryForm r2 = restrict_to_line(f2, subst);
      if (r1.is_zero() || r2.is_zero()) continue;
      best = std::min(best, binary_gcd_degree(r1, r2));
      done = true;
    }
    if (!done) throw DegenerateError("degenerate substitution: every sampled line annihilates an input");
  }
  return best;
}

}  // namespace verlinde
