#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "verlinde/errors.hpp"
#include "verlinde/rational.hpp"

namespace verlinde {

/// Gr(2, N): lines in P^{N-1}. Schubert indices satisfy N-2 >= a >= b >= 0.
struct GrContext {
  int N = 2;

  explicit GrContext(int n_dim) : N(n_dim) {
    if (N < 2) throw PreconditionError("Gr(2,N) needs N >= 2");
  }
  int max_index() const { return N - 2; }
  int dimension() const { return 2 * (N - 2); }
  bool valid(int a, int b) const { return max_index() >= a && a >= b && b >= 0; }

  friend bool operator==(const GrContext&, const GrContext&) = default;
};

/// Integer combination of sigma_{a,b} in A(Gr(2,N)); zero coefficients are pruned.
class SchubertClass {
 public:
  using Index = std::pair<int, int>;  // (a, b)
  using Terms = std::map<Index, Integer>;

  explicit SchubertClass(GrContext ctx) : ctx_(ctx) {}

  /// sigma_{a,b}; throws on invalid indices.
  static SchubertClass sigma(GrContext ctx, int a, int b = 0) {
    SchubertClass x(ctx);
    x.add(a, b, 1);
    return x;
  }
  static SchubertClass one(GrContext ctx) { return sigma(ctx, 0, 0); }
  static SchubertClass point(GrContext ctx) { return sigma(ctx, ctx.max_index(), ctx.max_index()); }

  void add(int a, int b, const Integer& c) {
    if (!ctx_.valid(a, b))
      throw PreconditionError("sigma_{" + std::to_string(a) + "," + std::to_string(b) + "} is not a class of Gr(2," +
                              std::to_string(ctx_.N) + ")");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(Index{a, b}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const GrContext& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Codimension a+b if every term has the same one.
  std::optional<int> codimension() const {
    std::optional<int> c;
    for (const auto& [idx, coef] : terms_) {
      const int cd = idx.first + idx.second;
      if (c && *c != cd) return std::nullopt;
      c = cd;
    }
    return c;
  }

  SchubertClass& operator+=(const SchubertClass& o) {
    check_same(o);
    for (const auto& [idx, c] : o.terms_) add(idx.first, idx.second, c);
    return *this;
  }
  SchubertClass& operator-=(const SchubertClass& o) {
    check_same(o);
    for (const auto& [idx, c] : o.terms_) add(idx.first, idx.second, -c);
    return *this;
  }
  friend SchubertClass operator+(SchubertClass x, const SchubertClass& y) { return x += y; }
  friend SchubertClass operator-(SchubertClass x, const SchubertClass& y) { return x -= y; }
  friend SchubertClass operator*(const Integer& c, const SchubertClass& x) {
    SchubertClass out(x.ctx_);
    for (const auto& [idx, v] : x.terms_) out.add(idx.first, idx.second, c * v);
    return out;
  }

  friend bool operator==(const SchubertClass&, const SchubertClass&) = default;

  void check_same(const SchubertClass& o) const {
    if (!(ctx_ == o.ctx_)) throw PreconditionError("Schubert classes from different Grassmannians");
  }

 private:
  GrContext ctx_;
  Terms terms_;
};

inline std::string to_string(const SchubertClass& x) {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  // Highest a first reads like the usual presentation (6*s[3,1] + 3*s[2,2]).
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const auto& [idx, c] = *it;
    if (!first) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    s += to_string(Integer(abs(c))) + "*s[" + std::to_string(idx.first) + "," + std::to_string(idx.second) + "]";
    first = false;
  }
  return s;
}

/// sigma_c * x by Pieri: sigma_c * sigma_{a,b} = sum of sigma_{a',b'} with
/// a' + b' = a + b + c, N-2 >= a' >= a >= b' >= b.
inline SchubertClass pieri(int c, const SchubertClass& x) {
  const GrContext ctx = x.context();
  if (c < 0 || c > ctx.max_index()) throw PreconditionError("pieri: special index out of range");
  SchubertClass out(ctx);
  for (const auto& [idx, coef] : x.terms()) {
    const auto [a, b] = idx;
    const int total = a + b + c;
    for (int bp = b; bp <= a; ++bp) {
      const int ap = total - bp;
      if (ap < a || ap > ctx.max_index()) continue;
      out.add(ap, bp, coef);
    }
  }
  return out;
}

/// coef * sigma_i * sigma_j
struct SpecialProduct {
  Integer coefficient;
  int i = 0;
  int j = 0;
};

/// sigma_{a,b} = sigma_a sigma_b - sigma_{a+1} sigma_{b-1}, as special-class products.
/// Products whose factors vanish in Gr(2,N) (index > N-2 or < 0) are omitted.
inline std::vector<SpecialProduct> giambelli(const GrContext& ctx, int a, int b) {
  if (!ctx.valid(a, b)) throw PreconditionError("giambelli: index out of bounds");
  std::vector<SpecialProduct> out{{1, a, b}};
  if (b >= 1 && a + 1 <= ctx.max_index()) out.push_back({-1, a + 1, b - 1});
  return out;
}

/// Expands special-class products by repeated Pieri.
inline SchubertClass expand(const GrContext& ctx, const std::vector<SpecialProduct>& products) {
  SchubertClass out(ctx);
  for (const auto& p : products) out += p.coefficient * pieri(p.i, pieri(p.j, SchubertClass::one(ctx)));
  return out;
}

/// x * sigma_{a,b} for each term of y, via Giambelli then Pieri.
inline SchubertClass product(const SchubertClass& x, const SchubertClass& y) {
  x.check_same(y);
  const GrContext ctx = x.context();
  SchubertClass out(ctx);
  for (const auto& [idx, coef] : y.terms()) {
    for (const auto& sp : giambelli(ctx, idx.first, idx.second))
      out += (coef * sp.coefficient) * pieri(sp.i, pieri(sp.j, x));
  }
  return out;
}

inline SchubertClass operator*(const SchubertClass& x, const SchubertClass& y) { return product(x, y); }

/// Coefficient of the point class sigma_{N-2,N-2}; other components contribute 0.
inline Integer degree(const SchubertClass& x) {
  const int m = x.context().max_index();
  return x.coefficient(m, m);
}

// ---------------------------------------------------------------------------
// Truncated bidegree ring Z[alpha, beta] / (alpha^{r+1}, beta^{s+1}) of P^r x P^s.
// ---------------------------------------------------------------------------

class BidegreeClass {
 public:
  BidegreeClass(int r, int s) : r_(r), s_(s), coeffs_(static_cast<std::size_t>((r + 1) * (s + 1))) {
    if (r < 0 || s < 0) throw PreconditionError("bidegree ring: negative dimension");
  }

  /// coef * alpha^i beta^j (zero if outside the truncation).
  static BidegreeClass monomial(int r, int s, int i, int j, const Integer& coef = 1) {
    BidegreeClass x(r, s);
    if (i >= 0 && j >= 0 && i <= r && j <= s) x.at(i, j) = coef;
    return x;
  }

  /// (alpha + beta)^m, expanded binomially and truncated.
  static BidegreeClass hyperplane_power(int r, int s, int m) {
    BidegreeClass x(r, s);
    for (int i = 0; i <= std::min(m, r); ++i)
      if (m - i <= s) x.at(i, m - i) = binomial(m, i);
    return x;
  }

  int r() const { return r_; }
  int s() const { return s_; }
  Integer& at(int i, int j) { return coeffs_[static_cast<std::size_t>(i * (s_ + 1) + j)]; }
  const Integer& at(int i, int j) const { return coeffs_[static_cast<std::size_t>(i * (s_ + 1) + j)]; }

  friend bool operator==(const BidegreeClass&, const BidegreeClass&) = default;

 private:
  int r_;
  int s_;
  std::vector<Integer> coeffs_;
};

inline BidegreeClass bidegree_product(const BidegreeClass& x, const BidegreeClass& y) {
  if (x.r() != y.r() || x.s() != y.s()) throw PreconditionError("bidegree_product: incompatible rings");
  BidegreeClass out(x.r(), x.s());
  for (int i = 0; i <= x.r(); ++i)
    for (int j = 0; j <= x.s(); ++j) {
      if (x.at(i, j) == 0) continue;
      for (int k = 0; i + k <= x.r(); ++k)
        for (int l = 0; j + l <= x.s(); ++l)
          if (y.at(k, l) != 0) out.at(i + k, j + l) += x.at(i, j) * y.at(k, l);
    }
  return out;
}

/// Coefficient of alpha^r beta^s.
inline Integer bidegree_degree(const BidegreeClass& x) { return x.at(x.r(), x.s()); }

/// Class on P^s given by coefficients of beta^j.
using ProjectiveClass = std::vector<Integer>;

/// pr_{2,*}: keeps the alpha^r coefficients, lowering the alpha-degree by r.
inline ProjectiveClass pushforward_factor2(const BidegreeClass& x) {
  ProjectiveClass out(static_cast<std::size_t>(x.s()) + 1);
  for (int j = 0; j <= x.s(); ++j) out[static_cast<std::size_t>(j)] = x.at(x.r(), j);
  return out;
}

/// pr_2^*: beta^j -> alpha^0 beta^j.
inline BidegreeClass pullback_factor2(const ProjectiveClass& y, int r) {
  BidegreeClass x(r, static_cast<int>(y.size()) - 1);
  for (std::size_t j = 0; j < y.size(); ++j) x.at(0, static_cast<int>(j)) = y[j];
  return x;
}

}  // namespace verlinde
