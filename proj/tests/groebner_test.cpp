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

#include "defcoh/groebner.hpp"
#include "defcoh/parse.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

namespace defcoh {
namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

template <class F>
Polynomial<F> P(const char* s, const std::vector<std::string>& names = kXY) {
  return parse_polynomial<F>(s, names);
}

template <class F>
PolyList<F> Ps(std::initializer_list<const char*> ss, const std::vector<std::string>& names = kXY) {
  PolyList<F> out;
  for (auto s : ss) out.push_back(P<F>(s, names));
  return out;
}

TEST(MonomialOrder, TotalMultiplicativeWithOneMinimal) {
  std::mt19937_64 rng(5);
  for (auto order : {MonomialOrder::grevlex(3), MonomialOrder::lex(3),
                     MonomialOrder(MonomialOrder::Kind::GrevLex, {2, 0, 1}),
                     MonomialOrder(MonomialOrder::Kind::Lex, {1, 2, 0})}) {
    auto rnd = [&] {
      return Monomial{static_cast<std::uint32_t>(rng() % 4), static_cast<std::uint32_t>(rng() % 4),
                      static_cast<std::uint32_t>(rng() % 4)};
    };
    for (int i = 0; i < 500; ++i) {
      Monomial a = rnd(), b = rnd(), c = rnd();
      auto ab = order.compare(a, b);
      EXPECT_EQ(ab == 0, a == b);
      EXPECT_EQ(ab < 0, order.compare(b, a) > 0);
      if (ab < 0) EXPECT_TRUE(order.less(a * c, b * c));
      if (ab < 0 && order.less(b, c)) EXPECT_TRUE(order.less(a, c));
      EXPECT_FALSE(order.less(a, Monomial(3)));
    }
  }
}

TEST(Polynomial, CancellationLeavesNoTerms) {
  auto f = P<Rational>("3*x^2*y - 1/2*y + 7");
  EXPECT_TRUE((f + (-f)).is_zero());
  EXPECT_EQ((f + (-f)).terms().size(), 0u);
}

TEST(Parse, Examples) {
  EXPECT_EQ(P<F2>("x^2 - y"), P<F2>("x^2 + y"));
  EXPECT_TRUE(P<F3>("0").is_zero());
  EXPECT_EQ(P<Rational>("x*y + y*x"), P<Rational>("2*x*y"));
  EXPECT_TRUE(P<F2>("x*y + y*x").is_zero());
  EXPECT_EQ(P<Rational>("-x^2"), Polynomial<Rational>::term(Monomial{2, 0}, Rational(-1)));
  EXPECT_EQ(P<Rational>("(x+y)^2"), P<Rational>("x^2 + 2*x*y + y^2"));
}

TEST(Parse, ErrorsCarryOffsets) {
  try {
    P<F2>("x + * y");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
  }
  try {
    P<F2>("x + w");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
  }
  EXPECT_THROW(P<F2>("(x + y"), ParseError);
}

TEST(Parse, PrinterRoundTrip) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    Polynomial<Rational> f(3);
    for (int t = 0; t < 5; ++t)
      f.add_term(Monomial{static_cast<std::uint32_t>(rng() % 3), static_cast<std::uint32_t>(rng() % 3),
                          static_cast<std::uint32_t>(rng() % 3)},
                 FieldTraits<Rational>::random(rng));
    EXPECT_EQ(parse_polynomial<Rational>(to_string(f, kXYZ), kXYZ), f) << to_string(f, kXYZ);
  }
}

TEST(NormalForm, Examples) {
  auto order = MonomialOrder::grevlex(2);
  auto g = buchberger(Ps<Rational>({"x*y"}), order);
  EXPECT_EQ(normal_form(P<Rational>("x^2*y + x"), g), P<Rational>("x"));
  EXPECT_TRUE(normal_form(P<Rational>("x^3*y^2 - 5*x*y"), g).is_zero());

  auto h = buchberger(Ps<Rational>({"x^2 + y", "y^2"}), order);
  EXPECT_TRUE(normal_form(P<Rational>("x^4"), h).is_zero());
  // The cofactor identity behind it.
  EXPECT_EQ(P<Rational>("(x^2+y)^2 - 2*y*(x^2+y) + y^2"), P<Rational>("x^4"));
  auto cert = ideal_member(P<Rational>("x^4"), h);
  ASSERT_TRUE(cert.member);
  EXPECT_EQ(dot(cert.cofactors, h.inputs), P<Rational>("x^4"));
}

TEST(Buchberger, Examples) {
  auto order = MonomialOrder::grevlex(2);
  auto g = buchberger(Ps<F3>({"x"}), order);
  EXPECT_EQ(g.elements, Ps<F3>({"x"}));
  auto h = buchberger(Ps<F3>({"x*y"}), order);
  EXPECT_EQ(h.elements, Ps<F3>({"x*y"}));
}

template <class F>
void check_reduced_basis(const GroebnerBasis<F>& g) {
  for (const auto& f : g.inputs) EXPECT_TRUE(normal_form(f, g).is_zero());
  for (std::size_t a = 0; a < g.size(); ++a) {
    EXPECT_EQ(g.elements[a].leading(g.order).second, F(1));
    for (std::size_t b = 0; b < g.size(); ++b) {
      if (a == b) continue;
      for (const auto& [m, c] : g.elements[a].terms()) EXPECT_FALSE(g.leads[b].divides(m));
      Monomial l = lcm(g.leads[a], g.leads[b]);
      auto s = g.elements[a].times_term(l / g.leads[a], F(1)) - g.elements[b].times_term(l / g.leads[b], F(1));
      EXPECT_TRUE(normal_form(s, g).is_zero());
    }
  }
  if (g.has_cofactors())
    for (std::size_t a = 0; a < g.size(); ++a) EXPECT_EQ(dot(g.cofactors[a], g.inputs), g.elements[a]);
}

TEST(Buchberger, SPairsReduceToZero) {
  auto g = buchberger(Ps<Rational>({"x^2 + y", "y^2"}), MonomialOrder::grevlex(2));
  check_reduced_basis(g);
}

template <class F>
PolyList<F> random_ideal(std::mt19937_64& rng, std::size_t nvars, std::size_t count, bool homogeneous) {
  PolyList<F> gens;
  for (std::size_t i = 0; i < count; ++i) {
    Polynomial<F> f(nvars);
    std::uint32_t deg = 1 + static_cast<std::uint32_t>(rng() % 2);
    for (int t = 0; t < 3; ++t) {
      std::uint32_t d = homogeneous ? deg : static_cast<std::uint32_t>(rng() % 3);
      auto mons = monomials_of_degree(nvars, d);
      f.add_term(mons[rng() % mons.size()], FieldTraits<F>::random(rng));
    }
    if (f.is_zero()) f = Polynomial<F>::variable(nvars, i % nvars);
    gens.push_back(f);
  }
  return gens;
}

template <class F>
void check_random_bases(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + rng() % 2;
    auto gens = random_ideal<F>(rng, n, 2 + rng() % 2, trial % 2 == 0);
    for (auto order : {MonomialOrder::grevlex(n), MonomialOrder::lex(n)}) {
      auto g = buchberger(gens, order);
      check_reduced_basis(g);
      auto shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      EXPECT_EQ(buchberger(shuffled, order).elements, g.elements);

      Polynomial<F> a = random_ideal<F>(rng, n, 1, false)[0], b = random_ideal<F>(rng, n, 1, false)[0];
      EXPECT_EQ(normal_form(a + b, g), normal_form(normal_form(a, g) + normal_form(b, g), g));
    }
  }
}

TEST(Buchberger, RandomIdealsF2) { check_random_bases<F2>(21); }
TEST(Buchberger, RandomIdealsF3) { check_random_bases<F3>(22); }
TEST(Buchberger, RandomIdealsQ) { check_random_bases<Rational>(23); }

TEST(IdealMember, Examples) {
  auto gens = Ps<Rational>({"x^2 + y", "y^2"});
  auto first = ideal_member(gens[0], gens);
  ASSERT_TRUE(first.member);
  EXPECT_EQ(dot(first.cofactors, gens), gens[0]);

  auto one = ideal_member(P<Rational>("1", {"x"}), Ps<Rational>({"x"}, {"x"}));
  EXPECT_FALSE(one.member);

  auto minus = Ps<Rational>({"x^2 - y", "y^2"});
  EXPECT_FALSE(ideal_member(P<Rational>("x^3"), minus).member);
  auto x5 = ideal_member(P<Rational>("x^5"), minus);
  ASSERT_TRUE(x5.member);
  EXPECT_EQ(dot(x5.cofactors, minus), P<Rational>("x^5"));
}

// Independent oracle: all syzygies whose entries have degree <= d, found by
// plain linear algebra on coefficient vectors, must lie in the k-span of
// monomial multiples of the returned generators up to degree d + slack.
template <class F>
void expect_degree_bounded_complete(const PolyList<F>& gens, const SyzygyMatrix<F>& syz, std::uint32_t d,
                                    std::uint32_t slack) {
  const std::size_t n = gens.front().nvars(), m = gens.size();
  std::vector<Monomial> mons;
  for (std::uint32_t e = 0; e <= d; ++e)
    for (auto& mo : monomials_of_degree(n, e)) mons.push_back(mo);
  std::map<Monomial, Index> out_index;
  std::vector<std::vector<std::pair<Monomial, F>>> columns;
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& mo : mons) {
      std::vector<std::pair<Monomial, F>> col;
      for (const auto& [gm, gc] : gens[i].terms()) {
        out_index.try_emplace(gm * mo, static_cast<Index>(out_index.size()));
        col.emplace_back(gm * mo, gc);
      }
      columns.push_back(std::move(col));
    }
  Matrix<F> a = zeros<F>(std::max<Index>(1, static_cast<Index>(out_index.size())), static_cast<Index>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [mo, v] : columns[c]) a(out_index.at(mo), static_cast<Index>(c)) += v;
  Matrix<F> k = kernel_basis(a);

  std::map<std::pair<std::size_t, Monomial>, Index> coord;
  auto idx = [&](std::size_t i, const Monomial& mo) {
    return coord.try_emplace({i, mo}, static_cast<Index>(coord.size())).first->second;
  };
  std::vector<std::vector<std::pair<Index, F>>> span;
  for (const auto& col : syz.columns)
    for (std::uint32_t e = 0; e + static_cast<std::uint32_t>(std::max<long long>(0, degree(col))) <= d + slack; ++e)
      for (const auto& mu : monomials_of_degree(n, e)) {
        std::vector<std::pair<Index, F>> v;
        for (std::size_t i = 0; i < m; ++i)
          for (const auto& [mo, c] : col[i].terms()) v.emplace_back(idx(i, mo * mu), c);
        span.push_back(std::move(v));
      }
  std::vector<std::vector<std::pair<Index, F>>> targets;
  for (Index c = 0; c < k.cols(); ++c) {
    std::vector<std::pair<Index, F>> v;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < mons.size(); ++j) {
        F x = k(static_cast<Index>(i * mons.size() + j), c);
        if (!is_zero(x)) v.emplace_back(idx(i, mons[j]), x);
      }
    targets.push_back(std::move(v));
  }
  Matrix<F> s = zeros<F>(static_cast<Index>(coord.size()), static_cast<Index>(span.size()));
  for (std::size_t c = 0; c < span.size(); ++c)
    for (const auto& [r, x] : span[c]) s(r, static_cast<Index>(c)) += x;
  for (const auto& t : targets) {
    Vector<F> b = zero_vector<F>(s.rows());
    for (const auto& [r, x] : t) b(r) += x;
    EXPECT_TRUE(solve_affine(s, b).has_value());
  }
}

template <class F>
void expect_annihilates(const PolyList<F>& gens, const SyzygyMatrix<F>& syz) {
  for (const auto& c : syz.columns) EXPECT_TRUE(dot(c, gens).is_zero());
}

TEST(Syzygies, PrincipalIdealHasNone) {
  auto gens = Ps<F2>({"x^2"}, {"x"});
  EXPECT_TRUE(syzygy_basis(gens).columns.empty());
}

TEST(Syzygies, FatPointDeterminantal) {
  auto gens = Ps<Rational>({"x^2", "x*y", "y^2"});
  auto syz = syzygy_basis(gens);
  expect_annihilates(gens, syz);
  ASSERT_EQ(syz.columns.size(), 2u);
  for (const auto& c : syz.columns) EXPECT_EQ(degree(c), 1);
  expect_degree_bounded_complete(gens, syz, 4, 0);
  // Both expected columns lie in the returned span and vice versa (rank 2
  // in degree 1).
  auto a = Ps<Rational>({"y", "-x", "0"}), b = Ps<Rational>({"0", "y", "-x"});
  SyzygyMatrix<Rational> expected{3, {a, b}};
  expect_degree_bounded_complete(gens, expected, 4, 0);
}

TEST(Syzygies, KoszulPair) {
  auto gens = Ps<F3>({"x", "y"});
  auto syz = syzygy_basis(gens);
  ASSERT_EQ(syz.columns.size(), 1u);
  expect_annihilates(gens, syz);
  EXPECT_EQ(dot(syz.columns[0], Ps<F3>({"y", "-x"})).is_zero(), false);
  expect_degree_bounded_complete(gens, syz, 4, 0);
}

TEST(Syzygies, RandomHomogeneousIdealsAreComplete) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 2 + rng() % 2;
    auto gens = random_ideal<F2>(rng, n, 2 + rng() % 2, true);
    auto syz = syzygy_basis(gens);
    expect_annihilates(gens, syz);
    expect_degree_bounded_complete(gens, syz, n == 2 ? 4 : 3, 1);
  }
}

TEST(Syzygies, InhomogeneousWithSlack) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 15; ++trial) {
    auto gens = random_ideal<F2>(rng, 2, 2 + rng() % 2, false);
    auto syz = syzygy_basis(gens);
    expect_annihilates(gens, syz);
    expect_degree_bounded_complete(gens, syz, 3, 3);
  }
}

TEST(Syzygies, RelativeToAmbientIdeal) {
  // Over k[x,y]/(x*y): y kills x.
  auto gens = Ps<Rational>({"x"});
  auto syz = relative_syzygies(gens, Ps<Rational>({"x*y"}), MonomialOrder::grevlex(2));
  ASSERT_EQ(syz.columns.size(), 1u);
  EXPECT_EQ(syz.columns[0][0], P<Rational>("y"));
}

}  // namespace
}  // namespace defcoh
