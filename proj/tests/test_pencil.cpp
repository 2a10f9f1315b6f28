#include <catch_amalgamated.hpp>

#include <algorithm>

#include "verlinde/family.hpp"
#include "verlinde/pencil.hpp"
#include "verlinde/poly_io.hpp"

using namespace verlinde;
using Catch::Matchers::ContainsSubstring;

namespace {

SplittingType T(std::vector<int> e) { return SplittingType(std::move(e)); }

const Pencil kL1(ExactMatrix{{1}, {0}}, ExactMatrix{{0}, {1}});

/// h^0(O(b)(-t)) summed over the entries: the h-sequence a type must produce.
std::vector<std::size_t> expected_h(const SplittingType& t, std::size_t t_max) {
  std::vector<std::size_t> h;
  for (std::size_t s = 1; s <= t_max; ++s) {
    long total = 0;
    for (int b : t.entries()) total += std::max<long>(b - static_cast<long>(s) + 1, 0);
    h.push_back(static_cast<std::size_t>(total));
  }
  return h;
}

}  // namespace

TEST_CASE("is_injective examples") {
  CHECK(is_injective(kL1));
  CHECK_FALSE(is_injective(Pencil(ExactMatrix(2, 1), ExactMatrix(2, 1))));
  CHECK(is_injective(Pencil::trivial(3)));

  const auto ctx = context(2, 2, 3);
  const LineInSystem line(parse_inline_polynomial("x0*x1", 2), parse_inline_polynomial("x0*x2", 2));
  CHECK(is_injective(verlinde_pencil(ctx, line)));
}

TEST_CASE("the exact injectivity fallback sees through unlucky points") {
  // s*A + t*B = [s; 0] has rank 1 except at s = 0.
  const Pencil p(ExactMatrix{{1}, {0}}, ExactMatrix(2, 1));
  CHECK(generic_rank(p) == 1);
  CHECK(is_injective(p));
  // A 2x2 pencil vanishing identically in its second column is never injective.
  const Pencil q(ExactMatrix{{1, 0}, {0, 0}, {0, 0}}, ExactMatrix{{0, 0}, {1, 0}, {0, 0}});
  CHECK(generic_rank(q) == 1);
  CHECK_FALSE(is_injective(q));
}

TEST_CASE("twisted_section_dims examples") {
  CHECK(twisted_section_dims(kL1, 3) == std::vector<std::size_t>{1, 0, 0});
  CHECK(twisted_section_dims(Pencil::trivial(4), 3) == std::vector<std::size_t>{0, 0, 0});

  const auto ctx = context(2, 2, 3);
  const LineInSystem line(parse_inline_polynomial("x0*x1", 2), parse_inline_polynomial("x0*x2", 2));
  const Pencil p = verlinde_pencil(ctx, line);
  CHECK(twisted_section_dims(p, 3) == std::vector<std::size_t>{3, 1, 0});
  // S_1 is the stacked [A^T; B^T].
  const ExactMatrix s1 = sylvester_block(p, 1);
  CHECK(s1.rows() == 6);
  CHECK(s1.cols() == 10);
  CHECK(s1 == vconcat(transpose(p.a()), transpose(p.b())));
  CHECK(rank(s1) == 5);
  CHECK_THROWS_AS(twisted_section_dims(Pencil(ExactMatrix(2, 1), ExactMatrix(2, 1)), 2), PreconditionError);
}

TEST_CASE("splitting_type of Kronecker pencils") {
  const auto blocks = kronecker_blocks(T({2, 1, 0}));
  CHECK(blocks.w() == 6);
  CHECK(blocks.u() == 3);
  CHECK(splitting_type(blocks) == T({2, 1, 0}));

  Rng rng(17);
  const auto mixed = transform(blocks, random_invertible(6, rng), random_invertible(3, rng));
  CHECK(splitting_type(mixed) == T({2, 1, 0}));
  CHECK(twisted_section_dims(mixed, 4) == expected_h(T({2, 1, 0}), 4));

  CHECK(kronecker_pencil(T({1}), 2, 1, 0).w() == 2);
  CHECK(splitting_type(kronecker_blocks(T({1}))) == T({1}));
  CHECK(kronecker_blocks(T({1})) == kL1);
  const auto trivial = kronecker_pencil(T({0, 0}), 2, 0, 3);
  CHECK(trivial.u() == 0);
  CHECK(splitting_type(trivial) == T({0, 0}));
  CHECK(splitting_type(kronecker_pencil(T({2, 1, 0, 0}), 7, 3, 7)) == T({2, 1, 0, 0}));
  CHECK_THROWS_AS(kronecker_pencil(T({2, 1}), 5, 2, 0), PreconditionError);
}

TEST_CASE("h-sequences of seeded Kronecker pencils match the closed count") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    Rng rng(derive_seed(21, i));
    std::vector<int> e(static_cast<std::size_t>(rng.uniform(1, 5)));
    for (auto& x : e) x = static_cast<int>(rng.uniform(0, 4));
    std::sort(e.begin(), e.end(), std::greater<>());
    const SplittingType t(e);
    const auto u = static_cast<std::size_t>(t.sum());
    const Pencil p = kronecker_pencil(t, u + t.length(), u, i);
    INFO(to_string(t));
    CHECK(twisted_section_dims(p, u + 2) == expected_h(t, u + 2));
    CHECK(splitting_type(p) == t);
    CHECK(splitting_type(swap_coordinates(p)) == t);
  }
}

TEST_CASE("splitting_type rejects non-injective and torsion pencils") {
  CHECK_THROWS_AS(splitting_type(Pencil(ExactMatrix(2, 1), ExactMatrix(2, 1))), PreconditionError);
  // s : O(-1) -> O has cokernel a skyscraper at s = 0.
  const Pencil torsion(ExactMatrix{{1}}, ExactMatrix{{0}});
  CHECK_THROWS_WITH(splitting_type(torsion), ContainsSubstring("inconsistent h-sequence"));
  // O(1) plus torsion: [[s, 0], [t, 0], [0, s]].
  const Pencil mixed(ExactMatrix{{1, 0}, {0, 0}, {0, 1}}, ExactMatrix{{0, 0}, {1, 0}, {0, 0}});
  CHECK_THROWS_WITH(splitting_type(mixed), ContainsSubstring("inconsistent h-sequence"));
}

TEST_CASE("change_coordinates keeps the type and rejects singular substitutions") {
  const Pencil p = kronecker_pencil(T({3, 1, 1, 0}), 9, 5, 2);
  CHECK(splitting_type(change_coordinates(p, 2, 1, -3, 5)) == T({3, 1, 1, 0}));
  CHECK_THROWS_AS(change_coordinates(p, 1, 2, 2, 4), PreconditionError);
}

TEST_CASE("dominance order") {
  CHECK(dominates(T({2, 1, 0}), T({1, 1, 1})));
  CHECK_FALSE(dominates(T({1, 1, 1}), T({2, 1, 0})));
  CHECK(dominates(T({2, 1, 0}), T({2, 1, 0})));
  CHECK(compare_dominance(T({2, 1}), T({1, 1, 1})) == Dominance::incomparable_frame);
  CHECK(compare_dominance(T({2, 0}), T({1, 0})) == Dominance::incomparable_frame);
  CHECK_THROWS_AS(T({2, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(T({1, -1}), PreconditionError);
  // A pair that is incomparable in the partial order.
  const bool both = dominates(T({3, 0, 0, 0}), T({2, 2, 0, 0})) && dominates(T({2, 2, 0, 0}), T({3, 0, 0, 0}));
  CHECK_FALSE(both);
  CHECK(dominates(T({3, 1, 0}), T({2, 2, 0})));
}

TEST_CASE("SplittingType exposes length, sum and zeros") {
  const auto t = T({3, 1, 0, 0});
  CHECK(t.length() == 4);
  CHECK(t.sum() == 4);
  CHECK(t.zeros() == 2);
  CHECK(SplittingType::generic(5, 2) == T({1, 1, 0, 0, 0}));
  CHECK_THROWS_AS(SplittingType::generic(2, 3), PreconditionError);
}

TEST_CASE("Pencil shape validation") {
  CHECK_THROWS_AS(Pencil(ExactMatrix(2, 1), ExactMatrix(2, 2)), PreconditionError);
  CHECK_THROWS_AS(Pencil(ExactMatrix(1, 2), ExactMatrix(1, 2)), PreconditionError);
}
