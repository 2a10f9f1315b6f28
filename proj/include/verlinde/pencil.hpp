#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "verlinde/errors.hpp"
#include "verlinde/matrix.hpp"
#include "verlinde/random.hpp"

namespace verlinde {

/// The sheaf map s*A + t*B : O(-1)^u -> O^w on P^1; A and B are w x u.
class Pencil {
 public:
  Pencil(ExactMatrix a, ExactMatrix b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.rows() != b_.rows() || a_.cols() != b_.cols())
      throw PreconditionError("pencil: A and B must have equal dimensions");
    if (a_.cols() > a_.rows()) throw PreconditionError("pencil: need u <= w");
  }

  /// The pencil with u = 0: its cokernel is O^w.
  static Pencil trivial(std::size_t w) { return Pencil(ExactMatrix(w, 0), ExactMatrix(w, 0)); }

  const ExactMatrix& a() const { return a_; }
  const ExactMatrix& b() const { return b_; }
  std::size_t w() const { return a_.rows(); }
  std::size_t u() const { return a_.cols(); }

  /// s*A + t*B at the point (s:t).
  ExactMatrix at(const Rational& s, const Rational& t) const { return combine(s, a_, t, b_); }

  friend bool operator==(const Pencil&, const Pencil&) = default;

 private:
  ExactMatrix a_;
  ExactMatrix b_;
};

/// Non-increasing tuple of nonnegative integers (b_1 >= ... >= b_r >= 0).
class SplittingType {
 public:
  SplittingType() = default;
  explicit SplittingType(std::vector<int> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i] < 0) throw PreconditionError("splitting type entries must be >= 0");
      if (i > 0 && entries_[i] > entries_[i - 1])
        throw PreconditionError("splitting type must be non-increasing");
    }
  }

  /// (1,...,1,0,...,0) with `ones` ones and total length `length`.
  static SplittingType generic(std::size_t length, std::size_t ones) {
    if (ones > length) throw PreconditionError("generic type: more ones than entries");
    std::vector<int> e(length, 0);
    std::fill_n(e.begin(), ones, 1);
    return SplittingType(std::move(e));
  }

  const std::vector<int>& entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }
  long sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0L); }
  std::size_t zeros() const {
    return static_cast<std::size_t>(std::count(entries_.begin(), entries_.end(), 0));
  }

  friend bool operator==(const SplittingType&, const SplittingType&) = default;

 private:
  std::vector<int> entries_;
};

inline std::string to_string(const SplittingType& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.length(); ++i) s += (i ? "," : "") + std::to_string(t.entries()[i]);
  return s + ")";
}

enum class Dominance { dominates, not_dominates, incomparable_frame };

/// Prefix-sum order: t1 >= t2 iff every prefix sum of t1 is >= that of t2.
/// Types of different length or sum live in different frames and are never compared.
inline Dominance compare_dominance(const SplittingType& t1, const SplittingType& t2) {
  if (t1.length() != t2.length() || t1.sum() != t2.sum()) return Dominance::incomparable_frame;
  long p1 = 0, p2 = 0;
  for (std::size_t i = 0; i < t1.length(); ++i) {
    p1 += t1.entries()[i];
    p2 += t2.entries()[i];
    if (p1 < p2) return Dominance::not_dominates;
  }
  return Dominance::dominates;
}

inline bool dominates(const SplittingType& t1, const SplittingType& t2) {
  return compare_dominance(t1, t2) == Dominance::dominates;
}

/// Exact rank of the pencil over the function field Q(s) (with t = 1).
/// A nonzero maximal minor has degree <= u in s, so it cannot vanish at all of s = 0..u:
/// the maximum rank over these u+1 specializations is the generic rank.
inline std::size_t generic_rank(const Pencil& p) {
  std::size_t best = 0;
  for (std::size_t s = 0; s <= p.u() && best < p.u(); ++s)
    best = std::max(best, rank(p.at(Rational(static_cast<long>(s)), Rational(1))));
  return best;
}

/// True iff s*A + t*B is injective as a sheaf map, i.e. has generic rank u.
/// Tries three random points first; the exact evaluation scheme decides the rest.
inline bool is_injective(const Pencil& p, std::uint64_t seed = 0) {
  if (p.u() == 0) return true;
  Rng rng(derive_seed(seed, 0x696e6a0000000000ULL));
  for (int i = 0; i < 3; ++i) {
    long s = rng.coefficient(), t = rng.coefficient();
    if (s == 0 && t == 0) t = 1;
    if (rank(p.at(s, t)) == p.u()) return true;
  }
  return generic_rank(p) == p.u();
}

/// Sylvester block matrix S_j of the transposed pencil, acting
/// H^0(O(j-1)) (x) W* -> H^0(O(j)) (x) U*: size (j+1)u x jw, column block i carries
/// A^T in row block i and B^T in row block i+1. S_0 is empty.
inline ExactMatrix sylvester_block(const Pencil& p, std::size_t j) {
  const std::size_t w = p.w(), u = p.u();
  ExactMatrix s((j + 1) * u, j * w);
  for (std::size_t blk = 0; blk < j; ++blk)
    for (std::size_t r = 0; r < u; ++r)
      for (std::size_t c = 0; c < w; ++c) {
        s(blk * u + r, blk * w + c) = p.a()(c, r);
        s((blk + 1) * u + r, blk * w + c) = p.b()(c, r);
      }
  return s;
}

/// h^0(E(-t)) of the cokernel E, from the twisted structure sequence:
/// h^0(E(-t)) = t*u - rank(S_{t-1}) for t >= 1.
inline std::size_t twisted_section_dim(const Pencil& p, std::size_t t) {
  if (t == 0) throw PreconditionError("twisted_section_dim: t must be >= 1");
  return t * p.u() - rank(sylvester_block(p, t - 1));
}

/// h_1..h_{t_max}. The sequence is non-increasing, so once it hits 0 the rest is filled in.
inline std::vector<std::size_t> twisted_section_dims(const Pencil& p, std::size_t t_max) {
  if (!is_injective(p)) throw PreconditionError("twisted_section_dims: pencil is not injective");
  std::vector<std::size_t> h;
  h.reserve(t_max);
  for (std::size_t t = 1; t <= t_max; ++t) {
    if (!h.empty() && h.back() == 0) {
      h.push_back(0);
      continue;
    }
    h.push_back(twisted_section_dim(p, t));
  }
  return h;
}

/// Splitting type of coker(s*A + t*B), read off the counts c_t = h_t - h_{t+1} = #{i : b_i >= t}.
/// A locally free cokernel is a quotient of O^w, so its entries are >= 0 and h_{u+1} = 0.
/// Torsion of length tau adds tau to every h_t; such pencils are rejected.
inline SplittingType splitting_type(const Pencil& p) {
  if (!is_injective(p)) throw PreconditionError("splitting_type: pencil is not injective");
  const std::size_t w = p.w(), u = p.u();
  const std::size_t length = w - u;
  if (u == 0) return SplittingType(std::vector<int>(length, 0));

  auto inconsistent = [](const std::string& why) {
    return PreconditionError("splitting_type: inconsistent h-sequence (" + why + ")");
  };
  std::vector<std::size_t> h{twisted_section_dim(p, 1)};
  const std::size_t t_max = u + 1;
  while (h.back() != 0) {
    if (h.size() >= t_max) throw inconsistent("h_t does not vanish by t = u + 1");
    h.push_back(twisted_section_dim(p, h.size() + 1));
    if (h.back() > h[h.size() - 2]) throw inconsistent("h_t increased");
  }
  // counts[t-1] = #{i : b_i >= t}
  std::vector<std::size_t> counts;
  for (std::size_t t = 0; t + 1 < h.size(); ++t) counts.push_back(h[t] - h[t + 1]);
  for (std::size_t t = 1; t < counts.size(); ++t)
    if (counts[t] > counts[t - 1]) throw inconsistent("h_t is not convex");
  if (counts.empty() || counts[0] > length) throw inconsistent("more positive entries than the rank");

  std::vector<int> entries(length, 0);
  for (std::size_t t = 0; t < counts.size(); ++t)
    for (std::size_t i = 0; i < counts[t]; ++i) entries[i] = static_cast<int>(t + 1);
  SplittingType out(std::move(entries));
  if (out.sum() != static_cast<long>(u)) throw inconsistent("entries do not sum to u");
  return out;
}

/// Block-diagonal pencil with one Kronecker block L_b per entry: (b+1) x b with
/// A = [I_b ; 0] and B = [0 ; I_b]; an entry 0 contributes a bare zero row.
inline Pencil kronecker_blocks(const SplittingType& type) {
  const std::size_t u = static_cast<std::size_t>(type.sum());
  const std::size_t w = u + type.length();
  ExactMatrix a(w, u), b(w, u);
  std::size_t row = 0, col = 0;
  for (int e : type.entries()) {
    const auto be = static_cast<std::size_t>(e);
    for (std::size_t i = 0; i < be; ++i) {
      a(row + i, col + i) = 1;
      b(row + i + 1, col + i) = 1;
    }
    row += be + 1;
    col += be;
  }
  return Pencil(std::move(a), std::move(b));
}

/// (P*A*Q, P*B*Q) for the given invertible P (w x w) and Q (u x u).
inline Pencil transform(const Pencil& p, const ExactMatrix& left, const ExactMatrix& right) {
  return Pencil(left * p.a() * right, left * p.b() * right);
}

/// Reparametrizes P^1: (A, B) -> (alpha*A + beta*B, gamma*A + delta*B).
inline Pencil change_coordinates(const Pencil& p, const Rational& alpha, const Rational& beta, const Rational& gamma,
                                 const Rational& delta) {
  if (alpha * delta - beta * gamma == 0) throw PreconditionError("change_coordinates: singular substitution");
  return Pencil(combine(alpha, p.a(), beta, p.b()), combine(gamma, p.a(), delta, p.b()));
}

inline Pencil swap_coordinates(const Pencil& p) { return Pencil(p.b(), p.a()); }

/// Kronecker pencil of the given type, mixed by seeded random invertible integer
/// row and column transformations.
inline Pencil kronecker_pencil(const SplittingType& type, std::size_t w, std::size_t u, std::uint64_t seed) {
  if (type.sum() != static_cast<long>(u) || type.length() + u != w)
    throw PreconditionError("kronecker_pencil: need sum = u and length = w - u");
  Rng rng(derive_seed(seed, 0x6b726f6e00000000ULL));
  const ExactMatrix left = random_invertible(w, rng);
  const ExactMatrix right = random_invertible(u, rng);
  return transform(kronecker_blocks(type), left, right);
}

}  // namespace verlinde
