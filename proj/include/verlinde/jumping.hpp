#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "verlinde/errors.hpp"
#include "verlinde/matrix.hpp"
#include "verlinde/polynomial.hpp"
#include "verlinde/random.hpp"
#include "verlinde/schubert.hpp"

namespace verlinde {

/// Largest N = h^0(O(d)) for which reconcile() runs.
inline constexpr int kDeskScaleMaxN = 60;

/// N = h^0(P^n, O(d)); Z lives in Gr(2, N).
inline int sections_dim(int n, int d) { return static_cast<int>(binomial_size(n + d, n)); }

/// The closed formula n + 1 + C(d-1+n, n), evaluated verbatim.
inline int dim_z_paper(int n, int d) {
  if (n < 2 || d < 2) throw PreconditionError("dim_z_paper: need n >= 2, d >= 2");
  return n + 1 + static_cast<int>(binomial_size(d - 1 + n, n));
}

/// Dimension of the source of (g1, g2, h) -> <h*g1, h*g2>: lines in P(H^0(O(1))) times P(H^0(O(d-1))).
/// This is also the value of a+b at which the push-pull bidegree computation saturates.
inline int parameter_count_dim(int n, int d) {
  return 2 * (n - 1) + static_cast<int>(binomial_size(d - 1 + n, n)) - 1;
}

/// dim Q = dim of the image of P(H^0(O(1))) x P(H^0(O(d-1))) -> |O(d)|.
inline int dim_q(int n, int d) { return n + static_cast<int>(binomial_size(d - 1 + n, n)) - 1; }

/// dim Q' = dim(Q cap H) for a general H of codimension a+1.
inline int dim_q_prime(int n, int d, int a) { return dim_q(n, d) - (a + 1); }

namespace detail {

/// Plucker Jacobian of (g1, g2, h) -> (h*g1) ^ (h*g2) at the given point.
/// Rows: pairs i < j of monomials of degree d. Columns: coefficients of g1, g2, h.
inline ExactMatrix plucker_jacobian(const HomogeneousPolynomial& g1, const HomogeneousPolynomial& g2,
                                    const HomogeneousPolynomial& h) {
  const int n = h.n();
  const int d = h.degree() + 1;
  const auto lin = monomial_basis(n, 1);
  const auto hbasis = monomial_basis(n, d - 1);
  const ExactVector f1 = (h * g1).coefficients();
  const ExactVector f2 = (h * g2).coefficients();
  const std::size_t big_n = f1.size();

  // Tangent directions (dF1, dF2) for each parameter.
  std::vector<std::pair<ExactVector, ExactVector>> dirs;
  const ExactVector zero(big_n);
  auto mono_poly = [n](const Monomial& m) {
    HomogeneousPolynomial p(n, static_cast<int>(m.degree()));
    p.add_term(m, 1);
    return p;
  };
  for (const auto& m : lin) dirs.emplace_back((h * mono_poly(m)).coefficients(), zero);
  for (const auto& m : lin) dirs.emplace_back(zero, (h * mono_poly(m)).coefficients());
  for (const auto& m : hbasis) {
    const auto theta = mono_poly(m);
    dirs.emplace_back((theta * g1).coefficients(), (theta * g2).coefficients());
  }

  ExactMatrix jac(big_n * (big_n - 1) / 2, dirs.size());
  for (std::size_t col = 0; col < dirs.size(); ++col) {
    const auto& [d1, d2] = dirs[col];
    std::size_t row = 0;
    for (std::size_t i = 0; i < big_n; ++i)
      for (std::size_t j = i + 1; j < big_n; ++j, ++row)
        jac(row, col) = d1[i] * f2[j] + f1[i] * d2[j] - d1[j] * f2[i] - f1[j] * d2[i];
  }
  return jac;
}

}  // namespace detail

/// dim Z from the exact rank of the Plucker Jacobian of the parametrization at random
/// integer points: rank = dimension of the affine cone over Z, so dim Z = rank - 1.
inline int dim_z_oracle(int n, int d, int trials, std::uint64_t seed) {
  if (n < 2 || d < 2) throw PreconditionError("dim_z_oracle: need n >= 2, d >= 2");
  if (trials < 1) throw PreconditionError("dim_z_oracle: trials must be positive");
  constexpr int kRetries = 16;
  std::size_t best = 0;
  bool any = false;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(seed, 0x6a61630000000000ULL, static_cast<std::uint64_t>(trial)));
    for (int attempt = 0; attempt < kRetries; ++attempt) {
      const auto g1 = HomogeneousPolynomial::random(n, 1, rng);
      const auto g2 = HomogeneousPolynomial::random(n, 1, rng);
      const auto h = HomogeneousPolynomial::random(n, d - 1, rng);
      // A point whose Plucker vector vanishes (g1, g2 dependent) is singular for the lift.
      ExactMatrix gs = hconcat(mult_matrix(g1, 0), mult_matrix(g2, 0));
      if (rank(gs) < 2) continue;
      best = std::max(best, rank(detail::plucker_jacobian(g1, g2, h)));
      any = true;
      break;
    }
  }
  if (!any) throw DegenerateError("dim_z_oracle: every sampled point was singular");
  return static_cast<int>(best) - 1;
}

/// A term sigma_{a,b} with a possibly invalid index pair (kept for diagnosis).
struct RawTerm {
  int a = 0;
  int b = 0;
  Integer c;
  friend bool operator==(const RawTerm&, const RawTerm&) = default;
};

/// Result of evaluating a class formula at a given dim Z.
struct EvaluatedClass {
  int dim_z = 0;
  int codim = 0;
  SchubertClass cls;
  /// Nonzero terms whose shifted index leaves the Grassmannian's range (b' < 0).
  std::vector<RawTerm> out_of_range;
  /// The separately computed sigma_{b,b} term of the n = 3, even-dimension case.
  std::optional<RawTerm> middle_term;
};

namespace detail {

struct ClassFrame {
  int big_n;
  int codim;
  int shift;          // (codim - dim) / 2; the dual of (a, b) is (a + shift, b + shift)
  bool middle_case;   // n = 3 and dim even
  int b_last;         // last b taken by the general coefficient formula
};

inline ClassFrame class_frame(int n, int d, int dim_z) {
  if (n != 2 && n != 3) throw PreconditionError("jumping class formulas need n in {2, 3}");
  if (d < 2) throw PreconditionError("jumping class formulas need d >= 2");
  const GrContext ctx(sections_dim(n, d));
  if (dim_z < 0 || dim_z > ctx.dimension())
    throw PreconditionError("dim Z = " + std::to_string(dim_z) + " outside [0, dim Gr = " +
                            std::to_string(ctx.dimension()) + "]");
  const int codim = ctx.dimension() - dim_z;
  if ((codim - dim_z) % 2 != 0) throw ConsistencyError("codim Z - dim Z is odd");
  const bool middle = n == 3 && dim_z % 2 == 0;
  return {ctx.N, codim, (codim - dim_z) / 2, middle, middle ? dim_z / 2 - 1 : dim_z / 2};
}

inline void place(EvaluatedClass& out, int a, int b, const Integer& c) {
  if (c == 0) return;
  if (out.cls.context().valid(a, b))
    out.cls.add(a, b, c);
  else
    out.out_of_range.push_back({a, b, c});
}

}  // namespace detail

/// [Z] from the closed formula: for 0 <= b <= floor(dim/2) (b < dim/2 in the n = 3 even case),
/// a = dim - b, coefficient C(a+1,n)C(b+1,n) - C(a+2,n)C(b,n) on sigma_{a',b'} with
/// (a', b') = (a, b) + (codim - dim)/2. The n = 3 even case adds C(dim/2+2,n)C(dim/2,n)
/// on the shifted middle index.
inline EvaluatedClass class_by_theorem(int n, int d, int dim_z) {
  const auto frame = detail::class_frame(n, d, dim_z);
  EvaluatedClass out{dim_z, frame.codim, SchubertClass(GrContext(frame.big_n)), {}, std::nullopt};
  for (int b = 0; b <= frame.b_last; ++b) {
    const int a = dim_z - b;
    const Integer c = binomial(a + 1, n) * binomial(b + 1, n) - binomial(a + 2, n) * binomial(b, n);
    detail::place(out, a + frame.shift, b + frame.shift, c);
  }
  if (frame.middle_case) {
    const int m = dim_z / 2;
    const Integer c = binomial(m + 2, n) * binomial(m, n);
    out.middle_term = RawTerm{m + frame.shift, m + frame.shift, c};
    detail::place(out, m + frame.shift, m + frame.shift, c);
  }
  return out;
}

/// One deg([Z] sigma_a sigma_b) evaluation, via the bidegree ring and in closed form.
struct Pairing {
  int a = 0;
  int b = 0;
  Integer bidegree;
  Integer closed_form;
};

/// deg([Z] sigma_a sigma_b) = deg(pr_2^* pr_{2,*} (alpha+beta)^{a+1} * (alpha+beta)^{b+1})
/// on P^n x P^M, M = C(n+d-1, n) - 1. Throws if it disagrees with C(a+1,n) C(b+1,n).
inline Pairing pushpull_pairing(int n, int d, int a, int b) {
  Pairing p{a, b, 0, 0};
  if (a < 0 || b < 0) return p;  // sigma_{-1} = 0
  const int big_m = static_cast<int>(binomial_size(n + d - 1, n)) - 1;
  const ProjectiveClass lambda = pushforward_factor2(BidegreeClass::hyperplane_power(n, big_m, a + 1));
  const BidegreeClass total =
      bidegree_product(pullback_factor2(lambda, n), BidegreeClass::hyperplane_power(n, big_m, b + 1));
  p.bidegree = bidegree_degree(total);
  p.closed_form = binomial(a + 1, n) * binomial(b + 1, n);
  if (p.bidegree != p.closed_form)
    throw ConsistencyError("push-pull mismatch at (a,b) = (" + std::to_string(a) + "," + std::to_string(b) +
                           "): bidegree " + to_string(p.bidegree) + " vs closed form " + to_string(p.closed_form) +
                           " (on P^" + std::to_string(n) + " x P^" + std::to_string(big_m) +
                           "; saturation needs a+b = " + std::to_string(2 * n - 2 + big_m) + ")");
  return p;
}

struct PushPullClass {
  EvaluatedClass evaluated;
  std::vector<Pairing> pairings;
};

/// [Z] assembled from deg([Z] sigma_{a,b}) = deg([Z] sigma_a sigma_b) - deg([Z] sigma_{a+1} sigma_{b-1})
/// with each special pairing from the bidegree pipeline. In the n = 3 even case the middle
/// pairing deg([Z] sigma_b sigma_b) is taken to be 0.
inline PushPullClass class_by_pushpull(int n, int d, int dim_z) {
  const auto frame = detail::class_frame(n, d, dim_z);
  PushPullClass out{{dim_z, frame.codim, SchubertClass(GrContext(frame.big_n)), {}, std::nullopt}, {}};
  auto pair = [&](int a, int b) {
    out.pairings.push_back(pushpull_pairing(n, d, a, b));
    return out.pairings.back().bidegree;
  };
  for (int b = 0; b <= frame.b_last; ++b) {
    const int a = dim_z - b;
    const Integer c = pair(a, b) - pair(a + 1, b - 1);
    detail::place(out.evaluated, a + frame.shift, b + frame.shift, c);
  }
  if (frame.middle_case) {
    const int m = dim_z / 2;
    const Integer c = Integer(0) - pair(m + 1, m - 1);
    out.evaluated.middle_term = RawTerm{m + frame.shift, m + frame.shift, c};
    detail::place(out.evaluated, m + frame.shift, m + frame.shift, c);
  }
  return out;
}

inline constexpr const char* kFlagDimMismatch = "DIM_MISMATCH";
inline constexpr const char* kFlagNegativeCoefficient = "NEGATIVE_COEFFICIENT";
inline constexpr const char* kFlagOutOfRangeIndex = "OUT_OF_RANGE_INDEX";
inline constexpr const char* kFlagMiddleTermDisagreement = "MIDDLE_TERM_DISAGREEMENT";
/// Non-middle coefficients of the two pipelines differ at the same dimension.
inline constexpr const char* kFlagCoefficientMismatch = "COEFFICIENT_MISMATCH";
/// The closed-formula dimension exceeds dim Gr(2,N), so the class cannot be evaluated there.
inline constexpr const char* kFlagClosedDimOutOfRange = "CLOSED_DIM_OUT_OF_RANGE";

struct CoefficientRow {
  int a = 0;
  int b = 0;
  Integer theorem;
  Integer pushpull;
  bool equal = false;
  bool middle = false;
};

struct JumpingClassReport {
  int n = 0;
  int d = 0;
  int big_n = 0;
  int dim_z_paper = 0;
  int dim_z_oracle = 0;
  std::optional<EvaluatedClass> theorem_at_paper;
  EvaluatedClass theorem_at_oracle;
  PushPullClass pushpull;
  std::vector<CoefficientRow> table;
  /// dim Q' = b - n + 1 for every b the formulas use, at the oracle dimension.
  bool dim_q_prime_identity = false;
  std::vector<std::string> flags;

  bool has_flag(const std::string& f) const { return std::find(flags.begin(), flags.end(), f) != flags.end(); }
};

/// Runs both dimension values and both class pipelines and records every disagreement
/// as a flag. Only a failure of the push-pull pipeline's own consistency check throws.
inline JumpingClassReport reconcile(int n, int d, int trials, std::uint64_t seed) {
  if (n != 2 && n != 3) throw PreconditionError("reconcile: n must be 2 or 3");
  if (d < 2) throw PreconditionError("reconcile: d must be >= 2");
  const int big_n = sections_dim(n, d);
  if (big_n > kDeskScaleMaxN)
    throw PreconditionError("desk-scale bound: N = " + std::to_string(big_n) + " exceeds " +
                            std::to_string(kDeskScaleMaxN));

  const int closed = dim_z_paper(n, d);
  const int oracle = dim_z_oracle(n, d, trials, seed);
  const GrContext ctx(big_n);
  JumpingClassReport r{n, d, big_n, closed, oracle, std::nullopt, class_by_theorem(n, d, oracle),
                       class_by_pushpull(n, d, oracle), {}, false, {}};
  if (closed <= ctx.dimension()) r.theorem_at_paper = class_by_theorem(n, d, closed);

  std::map<SchubertClass::Index, CoefficientRow> rows;
  for (const auto& [idx, c] : r.theorem_at_oracle.cls.terms()) rows[idx].theorem = c;
  for (const auto& [idx, c] : r.pushpull.evaluated.cls.terms()) rows[idx].pushpull = c;
  bool mismatch = false, middle_disagrees = false;
  for (auto& [idx, row] : rows) {
    row.a = idx.first;
    row.b = idx.second;
    row.equal = row.theorem == row.pushpull;
    const auto& mid = r.theorem_at_oracle.middle_term;
    row.middle = mid && mid->a == row.a && mid->b == row.b;
    if (!row.equal) (row.middle ? middle_disagrees : mismatch) = true;
    r.table.push_back(row);
  }
  if (r.theorem_at_oracle.middle_term && r.pushpull.evaluated.middle_term &&
      r.theorem_at_oracle.middle_term->c != r.pushpull.evaluated.middle_term->c)
    middle_disagrees = true;

  r.dim_q_prime_identity = true;
  for (int b = 0; b <= oracle / 2; ++b) {
    const int a = oracle - b;
    if (dim_q_prime(n, d, a) != b - n + 1) r.dim_q_prime_identity = false;
  }

  auto negative = [](const EvaluatedClass& e) {
    for (const auto& [idx, c] : e.cls.terms())
      if (c < 0) return true;
    for (const auto& t : e.out_of_range)
      if (t.c < 0) return true;
    return false;
  };
  if (closed != oracle) r.flags.emplace_back(kFlagDimMismatch);
  if (negative(r.theorem_at_oracle) || negative(r.pushpull.evaluated) ||
      (r.theorem_at_paper && negative(*r.theorem_at_paper)))
    r.flags.emplace_back(kFlagNegativeCoefficient);
  if (!r.theorem_at_oracle.out_of_range.empty() || !r.pushpull.evaluated.out_of_range.empty() ||
      (r.theorem_at_paper && !r.theorem_at_paper->out_of_range.empty()))
    r.flags.emplace_back(kFlagOutOfRangeIndex);
  if (middle_disagrees) r.flags.emplace_back(kFlagMiddleTermDisagreement);
  if (mismatch) r.flags.emplace_back(kFlagCoefficientMismatch);
  if (!r.theorem_at_paper) r.flags.emplace_back(kFlagClosedDimOutOfRange);
  return r;
}

}  // namespace verlinde
