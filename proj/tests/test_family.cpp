#include <catch_amalgamated.hpp>

#include "verlinde/family.hpp"
#include "verlinde/poly_io.hpp"

using namespace verlinde;

namespace {

HomogeneousPolynomial P(const std::string& text, int n) { return parse_inline_polynomial(text, n); }

LineInSystem line(const std::string& f1, const std::string& f2, int n) { return LineInSystem(P(f1, n), P(f2, n)); }

SplittingType T(std::vector<int> e) { return SplittingType(std::move(e)); }

/// (2, 1 x (u-2), 0 x (rank-u+1)).
SplittingType jump_type(const VerlindeContext& c) {
  std::vector<int> e(c.rank(), 0);
  e[0] = 2;
  for (std::size_t i = 1; i + 1 < c.u; ++i) e[i] = 1;
  return SplittingType(e);
}

}  // namespace

TEST_CASE("context examples") {
  const auto c = context(2, 2, 3);
  CHECK(c.w == 10);
  CHECK(c.u == 3);
  CHECK(c.rank() == 7);
  CHECK(c.degree() == 3);

  for (int n : {2, 3})
    for (int d : {1, 2, 5}) {
      CHECK(context(n, d, d).u == 1);
      CHECK(context(n, d, d).degree() == 1);
    }

  const auto c5 = context(2, 2, 5);
  CHECK(c5.w == 21);
  CHECK(c5.u == 10);
  CHECK(c5.rank() == 11);
  CHECK(c5.degree() == 10);
  CHECK(c5.has_generic_type());

  CHECK(context(2, 3, 2).u == 0);
  CHECK_THROWS_AS(context(1, 2, 3), PreconditionError);
  CHECK_THROWS_AS(context(2, 0, 3), PreconditionError);
  CHECK_THROWS_AS(context(2, 2, 0), PreconditionError);
}

TEST_CASE("verlinde_pencil examples") {
  const auto c = context(2, 2, 3);
  const auto l = line("x0*x1", "x0*x2", 2);
  const Pencil p = verlinde_pencil(c, l);
  CHECK(p.w() == 10);
  CHECK(p.u() == 3);
  CHECK(is_injective(p));
  const Pencil q = verlinde_pencil(c, l.swapped());
  CHECK(q.a() == p.b());
  CHECK(q.b() == p.a());

  const auto small = context(2, 3, 2);
  const auto cubic = line("x0^3", "x1^3", 2);
  const Pencil empty = verlinde_pencil(small, cubic);
  CHECK(empty.u() == 0);
  CHECK(splitting_type(empty) == SplittingType(std::vector<int>(6, 0)));
  CHECK(zero_count(small, cubic) == 6);

  CHECK_THROWS_AS(verlinde_pencil(context(3, 2, 3), l), PreconditionError);
}

TEST_CASE("degenerate lines are rejected") {
  CHECK_THROWS_AS(line("x0*x1", "2*x0*x1", 2), PreconditionError);
  CHECK_THROWS_AS(LineInSystem(P("x0*x1", 2), P("x0", 2)), PreconditionError);
  CHECK_THROWS_AS(LineInSystem(P("x0*x1", 2), HomogeneousPolynomial(2, 2)), PreconditionError);
}

TEST_CASE("zero_count examples") {
  const auto c = context(2, 2, 3);
  CHECK(zero_count(c, line("x0*x1", "x0*x2", 2)) == 5);
  const auto r = sample_line(c, RandomLine{}, 1);
  CHECK(zero_count(c, r) == 4);
  CHECK(splitting_type(verlinde_pencil(c, r)).zeros() == 4);
  for (int d : {2, 3}) {
    const auto cd = context(3, d, d);
    CHECK(zero_count(cd, sample_line(cd, RandomLine{}, 5)) == cd.w - 2);
  }
}

TEST_CASE("is_generic_type examples") {
  const auto c = context(2, 2, 3);
  CHECK(is_generic_type(c, sample_line(c, RandomLine{}, 2)));
  CHECK_FALSE(is_generic_type(c, line("x0*x1", "x0*x2", 2)));
  const auto c5 = context(2, 2, 5);
  for (std::uint64_t s = 0; s < 5; ++s) CHECK_FALSE(is_generic_type(c5, sample_line(c5, RandomLine{}, s)));
  // degree > rank: (2,2,7) has u = 21 > rank = 15.
  const auto c7 = context(2, 2, 7);
  REQUIRE_FALSE(c7.has_generic_type());
  CHECK_THROWS_AS(is_generic_type(c7, sample_line(c7, RandomLine{}, 0)), PreconditionError);
  CHECK_THROWS_AS(c7.generic_type(), PreconditionError);
}

TEST_CASE("predict_by_gcd examples") {
  const auto c = context(2, 2, 3);
  const auto jl = line("x0*x1", "x0*x2", 2);
  const auto pj = predict_by_gcd(c, jl, 3, 0);
  CHECK(pj.gcd_degree == 1);
  CHECK(pj.verdict == Prediction::jumping);
  REQUIRE(pj.type);
  CHECK(*pj.type == T({2, 1, 0, 0, 0, 0, 0}));
  CHECK(splitting_type(verlinde_pencil(c, jl)) == *pj.type);

  const auto pg = predict_by_gcd(c, line("x0^2", "x1^2", 2), 3, 0);
  CHECK(pg.verdict == Prediction::generic);
  REQUIRE(pg.type);
  CHECK(*pg.type == T({1, 1, 1, 0, 0, 0, 0}));

  // (3,2,3): u = 4, rank = 16; the jumping type has u-2 = 2 ones after the 2.
  const auto c3 = context(3, 2, 3);
  const auto planted = sample_line(c3, JumpingLine{1}, 4);
  const auto p3 = predict_by_gcd(c3, planted, 3, 0);
  CHECK(p3.verdict == Prediction::jumping);
  REQUIRE(p3.type);
  CHECK(*p3.type == T({2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(p3.type->length() == 16);
  CHECK(p3.type->sum() == 4);
  CHECK(splitting_type(verlinde_pencil(c3, planted)) == *p3.type);
  CHECK(*p3.type == jump_type(c3));

  // Away from k = d+1 only the verdict is produced.
  CHECK_FALSE(predict_by_gcd(context(2, 2, 4), jl, 3, 0).type);
}

TEST_CASE("sample_line modes") {
  const auto c = context(2, 2, 3);
  for (std::uint64_t s = 0; s < 100; ++s) CHECK(is_generic_type(c, sample_line(c, RandomLine{}, s)));
  for (int d : {2, 3}) {
    const auto cd = context(2, d, d + 1);
    for (std::uint64_t s = 0; s < 5; ++s) {
      CHECK(splitting_type(verlinde_pencil(cd, sample_line(cd, JumpingLine{d - 1}, s))) == jump_type(cd));
      CHECK(splitting_type(verlinde_pencil(cd, sample_line(cd, JumpingLine{0}, s))) == cd.generic_type());
    }
  }
  CHECK(sample_line(c, RandomLine{}, 9).f1() == sample_line(c, RandomLine{}, 9).f1());
  CHECK_THROWS_AS(sample_line(c, JumpingLine{2}, 0), PreconditionError);
  CHECK_THROWS_AS(sample_line(c, JumpingLine{-1}, 0), PreconditionError);
}

TEST_CASE("genericity_range_table examples") {
  const auto t = genericity_range_table(2, 2, 8);
  REQUIRE(t.size() == 8);
  for (int k = 1; k <= 4; ++k) CHECK(t[static_cast<std::size_t>(k - 1)].degree_le_rank);
  CHECK(t[4].k == 5);
  CHECK(t[4].degree == 10);
  CHECK(t[4].rank == 11);
  CHECK(t[4].degree_le_rank);
  CHECK_FALSE(t[4].k_le_2d);
  CHECK_FALSE(t[5].degree_le_rank);
  for (const auto& row : genericity_range_table(3, 3, 12))
    if (row.k <= 6) CHECK(row.degree_le_rank);
  CHECK_THROWS_AS(genericity_range_table(2, 2, 0), PreconditionError);
}
