#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "verlinde/errors.hpp"
#include "verlinde/matrix.hpp"
#include "verlinde/pencil.hpp"
#include "verlinde/polynomial.hpp"
#include "verlinde/random.hpp"

namespace verlinde {

/// Numerical data of V_k on the space of degree-d hypersurfaces in P^n.
/// w = h^0(O(k)), u = h^0(O(k-d)) (0 when k < d), rank = w - u, degree = u.
struct VerlindeContext {
  int n = 0;
  int d = 0;
  int k = 0;
  std::size_t w = 0;
  std::size_t u = 0;

  std::size_t rank() const { return w - u; }
  std::size_t degree() const { return u; }
  /// The generic type (1,...,1,0,...,0) only makes sense when degree <= rank.
  bool has_generic_type() const { return degree() <= rank(); }
  SplittingType generic_type() const {
    if (!has_generic_type()) throw PreconditionError("generic type undefined: degree exceeds rank");
    return SplittingType::generic(rank(), degree());
  }

  friend bool operator==(const VerlindeContext&, const VerlindeContext&) = default;
};

inline VerlindeContext context(int n, int d, int k) {
  if (n < 2 || d < 1 || k < 1) throw PreconditionError("context: need n >= 2, d >= 1, k >= 1");
  VerlindeContext c{n, d, k, binomial_size(k + n, n), 0};
  if (k >= d) c.u = binomial_size(k - d + n, n);
  return c;
}

/// A line T in |O(d)| spanned by two linearly independent forms of degree d.
class LineInSystem {
 public:
  LineInSystem(HomogeneousPolynomial f1, HomogeneousPolynomial f2) : f1_(std::move(f1)), f2_(std::move(f2)) {
    if (f1_.n() != f2_.n() || f1_.degree() != f2_.degree())
      throw PreconditionError("line: f1 and f2 must share n and degree");
    ExactMatrix cols = hconcat(as_column(f1_), as_column(f2_));
    if (rank(cols) < 2) throw PreconditionError("degenerate line: f1 and f2 are linearly dependent");
  }

  const HomogeneousPolynomial& f1() const { return f1_; }
  const HomogeneousPolynomial& f2() const { return f2_; }
  int n() const { return f1_.n(); }
  int d() const { return f1_.degree(); }

  LineInSystem swapped() const { return LineInSystem(f2_, f1_); }

 private:
  static ExactMatrix as_column(const HomogeneousPolynomial& f) {
    const ExactVector v = f.coefficients();
    ExactMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  HomogeneousPolynomial f1_;
  HomogeneousPolynomial f2_;
};

namespace detail {
inline void check_line(const VerlindeContext& ctx, const LineInSystem& line) {
  if (line.n() != ctx.n || line.d() != ctx.d)
    throw PreconditionError("line does not live in |O(" + std::to_string(ctx.d) + ")| on P^" +
                            std::to_string(ctx.n));
}
}  // namespace detail

/// The restriction of M to T: A = (theta -> f1*theta), B = (theta -> f2*theta) on
/// H^0(O(k-d)) -> H^0(O(k)). Empty (u = 0) when k < d.
inline Pencil verlinde_pencil(const VerlindeContext& ctx, const LineInSystem& line) {
  detail::check_line(ctx, line);
  if (ctx.k < ctx.d) return Pencil::trivial(ctx.w);
  return Pencil(mult_matrix(line.f1(), ctx.k - ctx.d), mult_matrix(line.f2(), ctx.k - ctx.d));
}

/// rank of [A | B] = dim(f1*U + f2*U).
inline std::size_t product_span_dim(const VerlindeContext& ctx, const LineInSystem& line) {
  const Pencil p = verlinde_pencil(ctx, line);
  return rank(hconcat(p.a(), p.b()));
}

/// p = h^0(O(k)) - dim(f1*U + f2*U), the predicted number of zero entries.
inline std::size_t zero_count(const VerlindeContext& ctx, const LineInSystem& line) {
  return ctx.w - product_span_dim(ctx, line);
}

/// Generic type iff the 2u products f_i * theta are linearly independent.
inline bool is_generic_type(const VerlindeContext& ctx, const LineInSystem& line) {
  if (!ctx.has_generic_type()) throw PreconditionError("generic type undefined: d^(k) > r^(k)");
  return product_span_dim(ctx, line) == 2 * ctx.u;
}

enum class Prediction { generic, jumping };

struct GcdPrediction {
  int gcd_degree = 0;
  Prediction verdict = Prediction::generic;
  /// Full predicted type, only when k = d + 1.
  std::optional<SplittingType> type;
};

/// Non-generic iff deg gcd(f1, f2) >= 2d - k. For k = d + 1 the type itself follows:
/// (2,1,...,1,0,...,0) when jumping, (1,...,1,0,...,0) otherwise.
inline GcdPrediction predict_by_gcd(const VerlindeContext& ctx, const LineInSystem& line, int trials,
                                    std::uint64_t seed) {
  detail::check_line(ctx, line);
  if (!ctx.has_generic_type()) throw PreconditionError("generic type undefined: d^(k) > r^(k)");
  GcdPrediction out;
  out.gcd_degree = gcd_degree(line.f1(), line.f2(), trials, seed);
  out.verdict = out.gcd_degree >= 2 * ctx.d - ctx.k ? Prediction::jumping : Prediction::generic;
  if (ctx.k == ctx.d + 1) {
    if (out.verdict == Prediction::generic) {
      out.type = ctx.generic_type();
    } else {
      if (ctx.u < 2) throw ConsistencyError("predict_by_gcd: jumping type needs u >= 2");
      std::vector<int> e(ctx.rank(), 0);
      e[0] = 2;
      std::fill_n(e.begin() + 1, ctx.u - 2, 1);
      out.type = SplittingType(std::move(e));
    }
  }
  return out;
}

struct RandomLine {};
/// Lines (h*g1, h*g2) with deg h = gcd_degree.
struct JumpingLine {
  int gcd_degree = 0;
};
using LineMode = std::variant<RandomLine, JumpingLine>;

/// Random line in |O(d)|, or one with a planted common factor of the given degree.
inline LineInSystem sample_line(const VerlindeContext& ctx, const LineMode& mode, std::uint64_t seed) {
  if (const auto* j = std::get_if<JumpingLine>(&mode); j && (j->gcd_degree < 0 || j->gcd_degree > ctx.d - 1))
    throw PreconditionError("sample_line: planted gcd degree must lie in [0, d-1]");
  Rng rng(derive_seed(seed, 0x6c696e6500000000ULL));
  constexpr int kAttempts = 16;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    HomogeneousPolynomial f1(ctx.n, ctx.d), f2(ctx.n, ctx.d);
    if (const auto* j = std::get_if<JumpingLine>(&mode)) {
      const auto h = HomogeneousPolynomial::random(ctx.n, j->gcd_degree, rng);
      f1 = h * HomogeneousPolynomial::random(ctx.n, ctx.d - j->gcd_degree, rng);
      f2 = h * HomogeneousPolynomial::random(ctx.n, ctx.d - j->gcd_degree, rng);
    } else {
      f1 = HomogeneousPolynomial::random(ctx.n, ctx.d, rng);
      f2 = HomogeneousPolynomial::random(ctx.n, ctx.d, rng);
    }
    try {
      return LineInSystem(std::move(f1), std::move(f2));
    } catch (const PreconditionError&) {
      // dependent pair; draw again
    }
  }
  throw DegenerateError("sample_line: no independent pair in " + std::to_string(kAttempts) + " attempts");
}

struct RangeRow {
  int k = 0;
  std::size_t degree = 0;
  std::size_t rank = 0;
  bool degree_le_rank = false;
  bool k_le_2d = false;
};

/// For k = 1..k_max: d^(k), r^(k), and both sides of the implication k <= 2d => d^(k) <= r^(k).
inline std::vector<RangeRow> genericity_range_table(int n, int d, int k_max) {
  if (k_max < 1) throw PreconditionError("genericity_range_table: k_max must be >= 1");
  std::vector<RangeRow> rows;
  for (int k = 1; k <= k_max; ++k) {
    const VerlindeContext c = context(n, d, k);
    rows.push_back({k, c.degree(), c.rank(), c.degree() <= c.rank(), k <= 2 * d});
  }
  return rows;
}

}  // namespace verlinde
