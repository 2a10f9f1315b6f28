#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "verlinde/errors.hpp"
#include "verlinde/random.hpp"
#include "verlinde/rational.hpp"

namespace verlinde {

/// Dense row-major matrix over Q.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ExactMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw PreconditionError("ragged matrix literal");
      for (long v : row) data_.emplace_back(v);
    }
  }

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

using ExactVector = std::vector<Rational>;

inline ExactMatrix transpose(const ExactMatrix& m) {
  ExactMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

inline ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw PreconditionError("matrix product: inner dimensions differ");
  ExactMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline ExactVector operator*(const ExactMatrix& a, const ExactVector& v) {
  if (a.cols() != v.size()) throw PreconditionError("matrix-vector product: size mismatch");
  ExactVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0 && v[j] != 0) out[i] += a(i, j) * v[j];
  return out;
}

/// alpha * a + beta * b.
inline ExactMatrix combine(const Rational& alpha, const ExactMatrix& a, const Rational& beta,
                           const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw PreconditionError("linear combination of differently sized matrices");
  ExactMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = alpha * a(i, j) + beta * b(i, j);
  return c;
}

/// [a | b]
inline ExactMatrix hconcat(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows()) throw PreconditionError("hconcat: row counts differ");
  ExactMatrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

/// [a ; b]
inline ExactMatrix vconcat(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.cols()) throw PreconditionError("vconcat: column counts differ");
  ExactMatrix c(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
  return c;
}

namespace detail {

/// Rows scaled to integers (each row times the lcm of its denominators); rank-preserving.
inline std::vector<std::vector<Integer>> integer_rows(const ExactMatrix& m) {
  std::vector<std::vector<Integer>> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    bool any = false;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      any = true;
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    if (!any) continue;  // zero rows never contribute to the rank
    std::vector<Integer> row(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      Integer scaled = l / m(i, j).get_den();
      row[j] = scaled * m(i, j).get_num();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

/// Exact rank by Bareiss fraction-free elimination over Z (after clearing denominators).
/// Every intermediate entry is a minor of the input, so the only divisions are exact.
/// Dense and uniform in cost; kept as an independent check on rank().
inline std::size_t rank_bareiss(const ExactMatrix& m) {
  auto a = detail::integer_rows(m);
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  Integer prev = 1;
  Integer tmp;
  for (std::size_t col = 0; col < cols && r < a.size(); ++col) {
    std::size_t piv = a.size();
    for (std::size_t i = r; i < a.size(); ++i) {
      if (sgn(a[i][col]) == 0) continue;
      if (piv == a.size() || mpz_cmpabs(a[i][col].get_mpz_t(), a[piv][col].get_mpz_t()) < 0) piv = i;
    }
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    const Integer& p = a[r][col];
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      auto& row = a[i];
      const Integer lead = row[col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        const bool row_zero = sgn(row[j]) == 0;
        const bool sub_zero = sgn(a[r][j]) == 0 || sgn(lead) == 0;
        if (row_zero && sub_zero) continue;
        mpz_mul(tmp.get_mpz_t(), p.get_mpz_t(), row[j].get_mpz_t());
        if (!sub_zero) mpz_submul(tmp.get_mpz_t(), lead.get_mpz_t(), a[r][j].get_mpz_t());
        mpz_divexact(row[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      row[col] = 0;
    }
    prev = p;
    ++r;
  }
  return r;
}

namespace detail {

/// Sparse integer row: (column, nonzero value), columns increasing.
using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

inline void make_primitive(SparseRow& row) {
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

/// x*row - y*pivot, dropping the leading column (which cancels) and any zeros.
inline SparseRow eliminate(const SparseRow& row, const SparseRow& pivot, const Integer& x, const Integer& y) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 1, j = 1;
  Integer v;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, x * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -(y * pivot[j].second));
      ++j;
    } else {
      mpz_mul(v.get_mpz_t(), x.get_mpz_t(), row[i].second.get_mpz_t());
      mpz_submul(v.get_mpz_t(), y.get_mpz_t(), pivot[j].second.get_mpz_t());
      if (sgn(v) != 0) out.emplace_back(row[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace detail

/// Exact rank over Q by fraction-free elimination on sparse primitive integer rows.
/// Only rows with a nonzero in the pivot column are touched, and each updated row is
/// divided by its content, so banded inputs keep their band and entries stay small.
inline std::size_t rank(const ExactMatrix& m) {
  // Rows bucketed by their leading column; a row is reduced when it reaches its bucket's pivot.
  std::vector<std::vector<detail::SparseRow>> by_lead(m.cols());
  for (auto& dense : detail::integer_rows(m)) {
    detail::SparseRow row;
    for (std::size_t j = 0; j < dense.size(); ++j)
      if (sgn(dense[j]) != 0) row.emplace_back(j, std::move(dense[j]));
    detail::make_primitive(row);
    const std::size_t lead = row.front().first;
    by_lead[lead].push_back(std::move(row));
  }
  std::size_t r = 0;
  Integer g, x, y;
  for (std::size_t col = 0; col < m.cols(); ++col) {
    auto& bucket = by_lead[col];
    if (bucket.empty()) continue;
    // Markowitz-style choice: sparsest row, then smallest leading entry.
    std::size_t piv = 0;
    for (std::size_t i = 1; i < bucket.size(); ++i) {
      const auto& a = bucket[i];
      const auto& b = bucket[piv];
      if (a.size() < b.size() ||
          (a.size() == b.size() && mpz_cmpabs(a.front().second.get_mpz_t(), b.front().second.get_mpz_t()) < 0))
        piv = i;
    }
    std::swap(bucket[piv], bucket.back());
    const detail::SparseRow pivot = std::move(bucket.back());
    bucket.pop_back();
    ++r;
    for (auto& row : bucket) {
      const Integer& p = pivot.front().second;
      const Integer& lead = row.front().second;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), lead.get_mpz_t());
      mpz_divexact(x.get_mpz_t(), p.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(y.get_mpz_t(), lead.get_mpz_t(), g.get_mpz_t());
      detail::SparseRow reduced = detail::eliminate(row, pivot, x, y);
      if (reduced.empty()) continue;
      detail::make_primitive(reduced);
      const std::size_t next = reduced.front().first;
      by_lead[next].push_back(std::move(reduced));
    }
    bucket.clear();
    bucket.shrink_to_fit();
  }
  return r;
}

/// Reduced row echelon form over Q; returns the pivot column of each nonzero row.
inline std::vector<std::size_t> rref_in_place(ExactMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    const Rational inv = 1 / m(r, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

/// Basis of the right null space {v : M v = 0}, one vector per free column, with a 1 in that column.
inline std::vector<ExactVector> kernel_basis(const ExactMatrix& m) {
  ExactMatrix red = m;
  const auto pivots = rref_in_place(red);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<ExactVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ExactVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Random integer matrix with entries in [-bound, bound].
inline ExactMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng, long bound) {
  ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform(-bound, bound);
  return m;
}

/// Random invertible integer matrix; resamples until the determinant is nonzero.
inline ExactMatrix random_invertible(std::size_t n, Rng& rng, long bound = 3) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    ExactMatrix m = random_matrix(n, n, rng, bound);
    if (rank(m) == n) return m;
  }
  throw DegenerateError("could not sample an invertible matrix");
}

}  // namespace verlinde
