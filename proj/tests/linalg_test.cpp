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

#include "defcoh/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

namespace defcoh {
namespace {

template <class F>
Matrix<F> mat(std::initializer_list<std::initializer_list<long long>> rows) {
  Index r = static_cast<Index>(rows.size());
  Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  Matrix<F> m = zeros<F>(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long long v : row) m(i, j++) = F(v);
    ++i;
  }
  return m;
}

template <class F>
Matrix<F> random_matrix(std::mt19937_64& rng, Index r, Index c) {
  Matrix<F> m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = FieldTraits<F>::random(rng);
  return m;
}

TEST(Rref, ZeroMatrixHasRankZero) {
  auto e = rref(zeros<F2>(2, 2));
  EXPECT_EQ(e.rank(), 0);
  EXPECT_TRUE(e.pivots.empty());
}

TEST(Rref, IdentityPivots) {
  auto e = rref(identity<Rational>(3));
  EXPECT_EQ(e.pivots, (std::vector<Index>{0, 1, 2}));
}

TEST(Rref, EqualRowsOverF2) { EXPECT_EQ(rank(mat<F2>({{1, 1}, {1, 1}})), 1); }

TEST(Rref, RationalEntriesStayReduced) {
  Matrix<Rational> m(2, 2);
  m << Rational(2), Rational(4), Rational(mpz_class(1), mpz_class(3)), Rational(5);
  auto e = rref(m);
  EXPECT_EQ(e.rank(), 2);
  EXPECT_TRUE(e.reduced == identity<Rational>(2));
  Rational half(mpz_class(-2), mpz_class(-4));
  EXPECT_EQ(half.numerator(), 1);
  EXPECT_EQ(half.denominator(), 2);
  EXPECT_EQ(Rational(mpz_class(0), mpz_class(-7)).denominator(), 1);
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(identity<F3>(4)).cols(), 0);
  EXPECT_EQ(kernel_basis(zeros<F2>(1, 2)).cols(), 2);
  Matrix<Rational> m(1, 2);
  m << Rational(1), Rational(2);
  auto k = kernel_basis(m);
  ASSERT_EQ(k.cols(), 1);
  EXPECT_EQ(k(0, 0), Rational(-2));
  EXPECT_EQ(k(1, 0), Rational(1));
}

TEST(SolveAffine, Examples) {
  Vector<F5> b(3);
  b << F5(1), F5(4), F5(2);
  auto x = solve_affine(identity<F5>(3), b);
  ASSERT_TRUE(x);
  EXPECT_TRUE(*x == b);

  Vector<F2> one(1);
  one << F2(1);
  EXPECT_FALSE(solve_affine(zeros<F2>(1, 3), one));
  auto y = solve_affine(mat<F2>({{1, 1}}), one);
  ASSERT_TRUE(y);
  EXPECT_TRUE(mat<F2>({{1, 1}}) * *y == one);
}

template <class F>
void check_rank_nullity_and_idempotence(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 60; ++trial) {
    Index r = static_cast<Index>(rng() % 6), c = static_cast<Index>(rng() % 7);
    Matrix<F> m = random_matrix<F>(rng, r, c);
    if (trial % 3 == 0 && r > 1) m.row(r - 1) = m.row(0);
    auto k = kernel_basis(m);
    EXPECT_EQ(rank(m) + k.cols(), c);
    EXPECT_TRUE(is_zero(Matrix<F>(m * k)));
    EXPECT_EQ(rank(k), k.cols());
    if (r > 0 && c > 0) {
      auto e = rref(m);
      auto again = rref(e.reduced);
      EXPECT_TRUE(again.reduced == e.reduced);
      EXPECT_EQ(again.pivots, e.pivots);
    }
  }
}

TEST(Properties, RankNullityF2) { check_rank_nullity_and_idempotence<F2>(1); }
TEST(Properties, RankNullityF3) { check_rank_nullity_and_idempotence<F3>(2); }
TEST(Properties, RankNullityQ) { check_rank_nullity_and_idempotence<Rational>(3); }

// Inconsistency verdicts are confirmed by trying every vector in F2^n.
TEST(Properties, SolveAffineAgreesWithBruteForceOverF2) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Index r = 1 + static_cast<Index>(rng() % 6), n = 1 + static_cast<Index>(rng() % 12);
    Matrix<F2> m = random_matrix<F2>(rng, r, n);
    if (trial % 2 == 0) m.col(0).setConstant(F2(0));
    Vector<F2> b = random_matrix<F2>(rng, r, 1);
    auto x = solve_affine(m, b);
    if (x) {
      EXPECT_TRUE(m * *x == b);
      continue;
    }
    bool found = false;
    for (std::uint32_t bits = 0; bits < (1u << n) && !found; ++bits) {
      Vector<F2> v(n);
      for (Index i = 0; i < n; ++i) v(i) = F2((bits >> i) & 1u);
      found = (m * v == b);
    }
    EXPECT_FALSE(found);
  }
}

template <class F>
void check_field_axioms(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 300; ++i) {
    F a = FieldTraits<F>::random(rng), b = FieldTraits<F>::random(rng), c = FieldTraits<F>::random(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + (-a), F(0));
    EXPECT_EQ(a * F(1), a);
    if (!is_zero(a)) EXPECT_EQ(a * a.inverse(), F(1));
  }
}

TEST(Properties, FieldAxioms) {
  check_field_axioms<F2>(11);
  check_field_axioms<F3>(12);
  check_field_axioms<F5>(13);
  check_field_axioms<Rational>(14);
}

TEST(Numerals, ParseIntoField) {
  EXPECT_EQ(parse_numeral<F3>("-1"), F3(2));
  EXPECT_EQ(parse_numeral<F5>("1/2"), F5(3));
  EXPECT_EQ(parse_numeral<Rational>("6/4"), Rational(mpz_class(3), mpz_class(2)));
  EXPECT_EQ(parse_numeral<F2>("123456789012345678901"), F2(1));
  EXPECT_THROW(parse_numeral<F3>("1/3"), std::invalid_argument);
}

TEST(Subspaces, ComplementAndQuotientCoordinates) {
  Matrix<F2> cocycles = identity<F2>(3);
  Matrix<F2> coboundaries = mat<F2>({{1}, {1}, {0}});
  auto reps = complement_basis(cocycles, coboundaries);
  EXPECT_EQ(reps.cols(), 2);
  Vector<F2> v(3);
  v << F2(1), F2(1), F2(0);
  auto q = quotient_coordinates(coboundaries, reps, v);
  ASSERT_TRUE(q);
  EXPECT_TRUE(is_zero(*q));
}

}  // namespace
}  // namespace defcoh
