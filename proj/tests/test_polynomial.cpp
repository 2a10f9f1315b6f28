#include <catch_amalgamated.hpp>

#include "verlinde/poly_io.hpp"
#include "verlinde/polynomial.hpp"

using namespace verlinde;
using Catch::Matchers::ContainsSubstring;

namespace {

HomogeneousPolynomial P(const std::string& text, int n) { return parse_inline_polynomial(text, n); }

Monomial mono(std::vector<unsigned> e) { return Monomial{std::move(e)}; }

}  // namespace

TEST_CASE("monomial_basis order and sizes") {
  const auto lin = monomial_basis(1, 1);
  REQUIRE(lin.size() == 2);
  CHECK(lin[0] == mono({1, 0}));
  CHECK(lin[1] == mono({0, 1}));

  const auto quad = monomial_basis(2, 2);
  REQUIRE(quad.size() == 6);
  const std::vector<Monomial> expected{mono({2, 0, 0}), mono({1, 1, 0}), mono({1, 0, 1}),
                                       mono({0, 2, 0}), mono({0, 1, 1}), mono({0, 0, 2})};
  CHECK(quad == expected);

  CHECK(monomial_basis(2, 0).size() == 1);
  CHECK(monomial_basis(2, -1).empty());
  CHECK_THROWS_AS(monomial_basis(0, 1), PreconditionError);
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m <= 7; ++m) CHECK(monomial_basis(n, m).size() == binomial_size(m + n, n));
}

TEST_CASE("poly_mul examples") {
  CHECK(poly_mul(P("x0", 1), P("x1", 1)) == P("x0*x1", 1));
  const HomogeneousPolynomial zero(2, 3);
  const auto prod = poly_mul(P("x0^2 + x1*x2", 2), zero);
  CHECK(prod.is_zero());
  CHECK(prod.degree() == 5);
  CHECK(poly_mul(P("x0 + x1", 1), P("x0 - x1", 1)) == P("x0^2 - x1^2", 1));
  CHECK_THROWS_AS(poly_mul(P("x0", 1), P("x0", 2)), PreconditionError);
}

TEST_CASE("poly_mul is commutative and bilinear on seeded forms") {
  for (std::uint64_t i = 0; i < 25; ++i) {
    Rng rng(derive_seed(3, i));
    const int n = static_cast<int>(rng.uniform(1, 3));
    const auto f = HomogeneousPolynomial::random(n, static_cast<int>(rng.uniform(0, 3)), rng, 9);
    const auto g = HomogeneousPolynomial::random(n, static_cast<int>(rng.uniform(0, 3)), rng, 9);
    const auto h = HomogeneousPolynomial::random(n, g.degree(), rng, 9);
    const Rational c(rng.coefficient(9));
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f * (c * g) == c * (f * g));
  }
}

TEST_CASE("mult_matrix examples") {
  const auto m = mult_matrix(P("x0", 1), 1);
  REQUIRE(m.rows() == 3);
  REQUIRE(m.cols() == 2);
  // Columns are x0*x0 = x0^2 (row 0) and x0*x1 (row 1).
  CHECK(m == ExactMatrix{{1, 0}, {0, 1}, {0, 0}});

  const auto q = mult_matrix(P("x0*x1", 2), 1);
  REQUIRE(q.rows() == 10);
  REQUIRE(q.cols() == 3);
  const auto cubic = monomial_basis(2, 3);
  const std::vector<Monomial> support{mono({2, 1, 0}), mono({1, 2, 0}), mono({1, 1, 1})};
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t r = 0; r < 10; ++r) CHECK((q(r, j) != 0) == (cubic[r] == support[j]));
}

TEST_CASE("multiplication by a nonzero form has full column rank") {
  for (std::uint64_t i = 0; i < 10; ++i) {
    Rng rng(derive_seed(4, i));
    const auto f = HomogeneousPolynomial::random(2, static_cast<int>(rng.uniform(1, 3)), rng, 3);
    const int e = static_cast<int>(rng.uniform(0, 3));
    CHECK(rank(mult_matrix(f, e)) == binomial_size(e + 2, 2));
  }
  CHECK_THROWS_AS(mult_matrix(P("x0", 1), -1), PreconditionError);
}

TEST_CASE("restrict_to_line examples") {
  const ExactMatrix s_only{{1, 0}, {0, 0}};
  CHECK(restrict_to_line(P("x0", 1), s_only) == BinaryForm{1, {1, 0}});

  const ExactMatrix s_t{{1, 0}, {0, 1}};
  CHECK(restrict_to_line(P("x0*x1", 1), s_t) == BinaryForm{2, {0, 1, 0}});

  // Ring homomorphism on a seeded substitution.
  Rng rng(8);
  const auto sub = random_matrix(3, 2, rng, 7);
  const auto f = HomogeneousPolynomial::random(2, 2, rng), g = HomogeneousPolynomial::random(2, 3, rng);
  CHECK(restrict_to_line(f * g, sub) == binary_mul(restrict_to_line(f, sub), restrict_to_line(g, sub)));
  CHECK_THROWS_AS(restrict_to_line(f, ExactMatrix(2, 2)), PreconditionError);
}

TEST_CASE("gcd_degree examples") {
  CHECK(gcd_degree(P("x0*x1", 2), P("x0*x2", 2), 3, 0) == 1);
  const auto f = P("x0^3 - 2*x1*x2^2 + 5*x0*x1*x2", 2);
  CHECK(gcd_degree(f, f, 3, 0) == 3);
  CHECK(gcd_degree(P("x0^2", 2), P("x1^2", 2), 3, 0) == 0);
  // A factor s^e on the restricted line is tracked separately from the Q[t] gcd.
  CHECK(gcd_degree(P("x0^2*x1", 2), P("x0^2*x2", 2), 3, 1) == 2);
}

TEST_CASE("binary_gcd_degree tracks powers of s") {
  // s^2 t and s t^2: gcd s t.
  CHECK(binary_gcd_degree(BinaryForm{3, {0, 1, 0, 0}}, BinaryForm{3, {0, 0, 1, 0}}) == 2);
  // s^3 and t^3: coprime.
  CHECK(binary_gcd_degree(BinaryForm{3, {1, 0, 0, 0}}, BinaryForm{3, {0, 0, 0, 1}}) == 0);
  // s^2 and s^2: gcd s^2.
  CHECK(binary_gcd_degree(BinaryForm{2, {1, 0, 0}}, BinaryForm{2, {1, 0, 0}}) == 2);
}

TEST_CASE("gcd_degree is additive over a planted common factor") {
  for (std::uint64_t i = 0; i < 15; ++i) {
    Rng rng(derive_seed(5, i));
    const int dh = static_cast<int>(rng.uniform(0, 3));
    const auto h = HomogeneousPolynomial::random(3, dh, rng);
    const auto g1 = HomogeneousPolynomial::random(3, 2, rng), g2 = HomogeneousPolynomial::random(3, 2, rng);
    CHECK(gcd_degree(h * g1, h * g2, 3, i) == dh + gcd_degree(g1, g2, 3, i));
  }
}

TEST_CASE("gcd_degree errors") {
  CHECK_THROWS_AS(gcd_degree(HomogeneousPolynomial(2, 2), P("x0^2", 2), 3, 0), PreconditionError);
  CHECK_THROWS_AS(gcd_degree(P("x0", 2), P("x0", 3), 3, 0), PreconditionError);
  CHECK_THROWS_AS(gcd_degree(P("x0", 2), P("x1", 2), 0, 0), PreconditionError);
}

TEST_CASE("HomogeneousPolynomial rejects terms of the wrong shape") {
  HomogeneousPolynomial f(2, 2);
  CHECK_THROWS_AS(f.add_term(mono({1, 0, 0}), 1), PreconditionError);
  CHECK_THROWS_AS(f.add_term(mono({1, 1}), 1), PreconditionError);
  f.add_term(mono({1, 1, 0}), 2);
  f.add_term(mono({1, 1, 0}), -2);
  CHECK(f.is_zero());
  CHECK_THROWS_AS(P("x0", 1) + P("x0^2", 1), PreconditionError);
}

TEST_CASE("inline grammar") {
  const auto f = parse_inline_polynomial("3/2*x0^2 - x1*x2 + 2 * x2^2", 2);
  CHECK(f.degree() == 2);
  CHECK(f.coefficient(mono({2, 0, 0})) == Rational(3, 2));
  CHECK(f.coefficient(mono({0, 1, 1})) == -1);
  CHECK(f.coefficient(mono({0, 0, 2})) == 2);
  CHECK(to_inline(f) == "3/2*x0^2 - x1*x2 + 2*x2^2");
  CHECK(parse_inline_polynomial(to_inline(f), 2) == f);
  // Repeated monomials are summed, repeated variables multiply.
  CHECK(parse_inline_polynomial("x0*x0 + x0^2", 1) == parse_inline_polynomial("2*x0^2", 1));
  CHECK(parse_inline_polynomial("0", 2, 3).is_zero());
  CHECK(parse_inline_polynomial("7", 2) == parse_inline_polynomial("7", 2, 0));

  CHECK_THROWS_WITH(parse_inline_polynomial("x0^2 + x1", 2), ContainsSubstring("not homogeneous"));
  CHECK_THROWS_WITH(parse_inline_polynomial("x3", 2), ContainsSubstring("out of range"));
  CHECK_THROWS_AS(parse_inline_polynomial("0", 2), ParseError);
  CHECK_THROWS_AS(parse_inline_polynomial("", 2), ParseError);
  CHECK_THROWS_AS(parse_inline_polynomial("1.5*x0", 2), ParseError);
  CHECK_THROWS_AS(parse_inline_polynomial("x0 x1", 2), ParseError);
  CHECK_THROWS_AS(parse_inline_polynomial("x0 +", 2), ParseError);
  CHECK_THROWS_AS(parse_inline_polynomial("x0^", 2), ParseError);
  CHECK_THROWS_AS(parse_inline_polynomial("x0^2", 2, 3), ParseError);
}
