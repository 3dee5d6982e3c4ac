// Copyright 2026 The defcoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DEFCOH_LINALG_HPP
#define DEFCOH_LINALG_HPP

/// \file linalg.hpp
/// Dense exact linear algebra over an exact field: reduced row echelon
/// form, kernels, affine solves and the subspace bookkeeping used by every
/// cohomology computation. Over Q the elimination is fraction free.

#include "defcoh/field.hpp"

#include <Eigen/Core>

#include <optional>
#include <type_traits>
#include <vector>

namespace defcoh {

using Index = Eigen::Index;

template <class F>
using Matrix = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;
template <class F>
using Vector = Eigen::Matrix<F, Eigen::Dynamic, 1>;

template <class F>
struct RowEchelon {
  Matrix<F> reduced;
  std::vector<Index> pivots;  // pivot column of each nonzero row, increasing
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  using F = typename Derived::Scalar;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!(m(i, j) == F(0))) return false;
  return true;
}

template <class F>
Matrix<F> zeros(Index rows, Index cols) {
  Matrix<F> m(rows, cols);
  m.setConstant(F(0));
  return m;
}

template <class F>
Vector<F> zero_vector(Index n) {
  Vector<F> v(n);
  v.setConstant(F(0));
  return v;
}

template <class F>
Matrix<F> identity(Index n) {
  Matrix<F> m = zeros<F>(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = F(1);
  return m;
}

/// Concatenates blocks side by side; all blocks must share the row count.
template <class F>
Matrix<F> hstack(const std::vector<Matrix<F>>& blocks, Index rows) {
  Index cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  Matrix<F> out = zeros<F>(rows, cols);
  Index at = 0;
  for (const auto& b : blocks) {
    if (b.cols() > 0) out.block(0, at, rows, b.cols()) = b;
    at += b.cols();
  }
  return out;
}

namespace detail {

template <class F>
RowEchelon<F> rref_field(Matrix<F> a) {
  RowEchelon<F> out;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index piv = -1;
    for (Index i = row; i < a.rows(); ++i)
      if (!is_zero(a(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) a.row(piv).swap(a.row(row));
    F inv = F(1) / a(row, col);
    for (Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == row || is_zero(a(i, col))) continue;
      F factor = a(i, col);
      for (Index j = col; j < a.cols(); ++j) a(i, j) -= factor * a(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

inline void remove_content(std::vector<mpz_class>& row) {
  mpz_class g = 0;
  for (const auto& x : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Fraction-free Gauss-Jordan on integer rows, with primitive-part
// normalization after every row operation; divides by pivots only at the end.
inline RowEchelon<Rational> rref_rational(const Matrix<Rational>& m) {
  const Index rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (Index i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (Index j = 0; j < cols; ++j) {
      mpz_class d = m(i, j).denominator();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (Index j = 0; j < cols; ++j)
      a[i][j] = m(i, j).numerator() * (l / m(i, j).denominator());
    remove_content(a[i]);
  }
  RowEchelon<Rational> out;
  Index row = 0;
  for (Index col = 0; col < cols && row < rows; ++col) {
    Index piv = -1;
    for (Index i = row; i < rows; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[row]);
    for (Index i = 0; i < rows; ++i) {
      if (i == row || a[i][col] == 0) continue;
      mpz_class p = a[row][col], q = a[i][col];
      for (Index j = 0; j < cols; ++j) a[i][j] = p * a[i][j] - q * a[row][j];
      remove_content(a[i]);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = zeros<Rational>(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    if (i < row) {
      const mpz_class& p = a[i][out.pivots[i]];
      for (Index j = 0; j < cols; ++j) out.reduced(i, j) = Rational(a[i][j], p);
    }
  }
  return out;
}

}  // namespace detail

/// Reduced row echelon form with the first nonzero entry of each column as
/// pivot. The result is unique, so it is bit-for-bit reproducible.
template <class Derived>
RowEchelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using F = typename Derived::Scalar;
  Matrix<F> a = m;
  if constexpr (std::is_same_v<F, Rational>) {
    return detail::rref_rational(a);
  } else {
    return detail::rref_field<F>(std::move(a));
  }
}

template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return rref(m).rank();
}

/// Columns spanning ker M; there are cols(M) - rank(M) of them and they are
/// independent (one per free column of the echelon form).
template <class Derived>
Matrix<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using F = typename Derived::Scalar;
  const Index n = m.cols();
  if (m.rows() == 0) return identity<F>(n);
  auto e = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix<F> k = zeros<F>(n, n - e.rank());
  Index c = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    k(free, c) = F(1);
    for (Index i = 0; i < e.rank(); ++i) k(e.pivots[static_cast<std::size_t>(i)], c) = -e.reduced(i, free);
    ++c;
  }
  return k;
}

/// One solution of M x = b, or nullopt when b is outside the column space.
template <class DM, class DB>
std::optional<Vector<typename DM::Scalar>> solve_affine(const Eigen::MatrixBase<DM>& m,
                                                       const Eigen::MatrixBase<DB>& b) {
  using F = typename DM::Scalar;
  if (m.rows() != b.rows()) throw std::invalid_argument("solve_affine: dimension mismatch");
  Matrix<F> aug(m.rows(), m.cols() + 1);
  if (m.cols() > 0) aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  Vector<F> x = zero_vector<F>(m.cols());
  if (m.rows() == 0) return x;
  auto e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  for (Index i = 0; i < e.rank(); ++i) x(e.pivots[static_cast<std::size_t>(i)]) = e.reduced(i, m.cols());
  return x;
}

/// A basis (subset of the columns) of the column space of M.
template <class Derived>
Matrix<typename Derived::Scalar> image_basis(const Eigen::MatrixBase<Derived>& m) {
  using F = typename Derived::Scalar;
  if (m.rows() == 0 || m.cols() == 0) return zeros<F>(m.rows(), 0);
  auto e = rref(m);
  Matrix<F> out(m.rows(), e.rank());
  for (Index i = 0; i < e.rank(); ++i) out.col(i) = m.col(e.pivots[static_cast<std::size_t>(i)]);
  return out;
}

/// Columns of `cocycles` whose classes form a basis of
/// span(cocycles) / span(coboundaries). Requires span(coboundaries) to lie
/// inside span(cocycles).
template <class F>
Matrix<F> complement_basis(const Matrix<F>& cocycles, const Matrix<F>& coboundaries) {
  const Index rows = cocycles.rows();
  Matrix<F> both = hstack<F>({coboundaries, cocycles}, rows);
  if (rows == 0 || both.cols() == 0) return zeros<F>(rows, 0);
  auto e = rref(both);
  std::vector<Index> picked;
  for (Index p : e.pivots)
    if (p >= coboundaries.cols()) picked.push_back(p - coboundaries.cols());
  Matrix<F> out(rows, static_cast<Index>(picked.size()));
  for (std::size_t i = 0; i < picked.size(); ++i) out.col(static_cast<Index>(i)) = cocycles.col(picked[i]);
  return out;
}

/// Coordinates of v modulo span(coboundaries) with respect to the class
/// basis `representatives`; nullopt if v is not in the joint span.
template <class F>
std::optional<Vector<F>> quotient_coordinates(const Matrix<F>& coboundaries,
                                              const Matrix<F>& representatives, const Vector<F>& v) {
  Matrix<F> basis = image_basis(coboundaries);
  Matrix<F> both = hstack<F>({basis, representatives}, v.rows());
  auto x = solve_affine(both, v);
  if (!x) return std::nullopt;
  return Vector<F>(x->tail(representatives.cols()));
}

/// Kronecker product of two dense matrices.
template <class F>
Matrix<F> kronecker(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> out = zeros<F>(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j))) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace defcoh

#endif  // DEFCOH_LINALG_HPP
