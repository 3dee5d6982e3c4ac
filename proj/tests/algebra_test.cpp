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

#include "defcoh/ls_complex.hpp"
#include "defcoh/oracle.hpp"
#include "defcoh/parse.hpp"

#include <gtest/gtest.h>

#include <array>

namespace defcoh {
namespace {

template <Field F>
PresentedAlgebra<F> alg(std::vector<std::string> vars, std::vector<std::string> rels,
                        std::vector<std::string> base = {}, std::vector<std::string> base_rels = {}) {
  std::vector<std::string> names = base;
  names.insert(names.end(), vars.begin(), vars.end());
  PolyList<F> f, g;
  for (const auto& s : rels) f.push_back(parse_polynomial<F>(s, names));
  for (const auto& s : base_rels) g.push_back(parse_polynomial<F>(s, names));
  return PresentedAlgebra<F>(base, g, vars, f);
}

template <Field F>
std::array<Index, 3> dims(const PresentedAlgebra<F>& b, const FiniteModule<F>& j) {
  return t_dimensions(cochains(build_ls(b), j));
}

template <Field F>
std::array<Index, 3> dims_k(const PresentedAlgebra<F>& b) {
  return dims(b, residue_module(b));
}

using Dims = std::array<Index, 3>;

TEST(Truncate, Dimensions) {
  EXPECT_EQ(truncate(alg<F2>({"x"}, {}), 3).dim(), 3);
  EXPECT_EQ(truncate(alg<F2>({"x", "y"}, {}), 2).dim(), 3);
  EXPECT_EQ(truncate(alg<F3>({"x", "y"}, {"x*y"}), 4).dim(), 7);
  EXPECT_EQ(truncate(alg<F3>({"x", "y"}, {"x^2", "y^3"}), 0).dim(), 6);
  EXPECT_EQ(truncate(alg<F2>({"x"}, {"x^2", "t*x"}, {"t"}, {"t^2"}), 0).dim(), 3);
  EXPECT_THROW(truncate(alg<F2>({"x"}, {}), 0), NotFiniteDimensional);
}

TEST(Truncate, StructureAlgebraIsValid) {
  for (const auto& b : {alg<F3>({"x", "y"}, {"x^2", "x*y", "y^2"}), alg<F3>({"x", "y"}, {"x*y - y^2", "x^3"}),
                        alg<F3>({"x"}, {"x^3", "t*x"}, {"t"}, {"t^2"})}) {
    auto m = truncate(b, 0);
    EXPECT_TRUE(validate(m.algebra).empty());
    EXPECT_TRUE(validate(regular_module(m), b).empty());
    EXPECT_TRUE(validate(residue_module(b), b).empty());
  }
}

TEST(Homs, EnumerationCounts) {
  auto dual = truncate(alg<F2>({"u"}, {"u^2"}), 0).algebra;
  auto cube = truncate(alg<F2>({"u"}, {"u^3"}), 0).algebra;
  EXPECT_EQ(hom_enumerate(truncate(alg<F2>({"x"}, {"x^2"}), 0).algebra, dual).size(), 2u);
  EXPECT_EQ(hom_enumerate(truncate(alg<F3>({"x"}, {"x^2"}), 0).algebra, truncate(alg<F3>({"u"}, {"u^2"}), 0).algebra).size(), 3u);
  // x, y -> multiples of u^2.
  EXPECT_EQ(hom_enumerate(truncate(alg<F2>({"x", "y"}, {"x^2", "x*y", "y^2"}), 0).algebra, cube).size(), 4u);
  for (const auto& h : hom_enumerate(truncate(alg<F2>({"x"}, {"x^3"}), 0).algebra, cube))
    EXPECT_TRUE(validate(h, truncate(alg<F2>({"x"}, {"x^3"}), 0).algebra, cube).empty());
}

TEST(Homs, Compose) {
  auto s = std::make_shared<const PresentedAlgebra<F2>>(alg<F2>({"s"}, {"s^2"}));
  auto x = std::make_shared<const PresentedAlgebra<F2>>(alg<F2>({"x"}, {"x^2"}));
  auto u = std::make_shared<const PresentedAlgebra<F2>>(alg<F2>({"u"}, {"u^3"}));
  AlgebraHom<F2> g{s, x, {parse_polynomial<F2>("x", x->names())}};
  AlgebraHom<F2> f{x, u, {parse_polynomial<F2>("u^2", u->names())}};
  auto fg = compose(f, g);
  EXPECT_EQ(to_string(fg.images[0], u->names()), "u^2");
  EXPECT_THROW(compose(g, f), std::invalid_argument);
  AlgebraHom<F2> bad{x, u, {parse_polynomial<F2>("u", u->names())}};
  EXPECT_FALSE(validate(bad).empty());
}

TEST(Derivations, Examples) {
  // D(x) = a, D(y) = b with D(xy) = ay + bx = 0 in k: both free.
  EXPECT_EQ(derivation_space(alg<F3>({"x", "y"}, {"x*y"}), residue_module(alg<F3>({"x", "y"}, {"x*y"}))).dim, 2);
  // k[x]/(x^2) into itself: D(x) in (x) unless 2 = 0.
  auto b2 = alg<F2>({"x"}, {"x^2"});
  auto b3 = alg<F3>({"x"}, {"x^2"});
  EXPECT_EQ(derivation_space(b2, regular_module(truncate(b2, 0))).dim, 2);
  EXPECT_EQ(derivation_space(b3, regular_module(truncate(b3, 0))).dim, 1);
  auto d = derivation_space(b3, regular_module(truncate(b3, 0)));
  Derivation<F3> der{d.basis.col(0)};
  EXPECT_TRUE(validate(der, b3, regular_module(truncate(b3, 0))).empty());
  Derivation<F3> unit{Vector<F3>::Constant(2, F3(0))};
  unit.images(0) = F3(1);
  EXPECT_FALSE(validate(unit, b3, regular_module(truncate(b3, 0))).empty());
}

template <FiniteField F>
void check_derivation_counts(const PresentedAlgebra<F>& b) {
  auto m = truncate(b, 0);
  for (const auto& j : {residue_module(b), regular_module(m)}) {
    std::uint64_t expect = 1;
    for (Index i = 0; i < derivation_space(b, j).dim; ++i) expect *= FieldTraits<F>::order;
    EXPECT_EQ(enumerate_derivations(m, j).size(), expect);
  }
}

TEST(Derivations, OracleCountsMatch) {
  check_derivation_counts(alg<F2>({"x"}, {"x^3"}));
  check_derivation_counts(alg<F2>({"x", "y"}, {"x^2", "x*y", "y^2"}));
  check_derivation_counts(alg<F3>({"x", "y"}, {"x^2", "y^2"}));
  check_derivation_counts(alg<F2>({"x"}, {"x^2", "t*x"}, {"t"}, {"t^2"}));
}

TEST(Kaehler, HomOmegaIsDerivations) {
  for (const auto& b : {alg<F3>({"x", "y"}, {"x^2", "x*y", "y^2"}), alg<F3>({"x", "y"}, {"y^2 - x^3"}),
                        alg<F3>({"x"}, {"x^2", "t*x"}, {"t"}, {"t^2"})}) {
    auto j = regular_module(truncate(b, 3));
    EXPECT_EQ(hom_dimension(kaehler(b), j), derivation_space(b, j).dim);
    EXPECT_TRUE(validate(conormal(b), b).empty());
  }
}

TEST(Cotangent, DimensionsOverResidueField) {
  for (int field = 0; field < 3; ++field) {
    auto run = [](auto tag) {
      using F = decltype(tag);
      EXPECT_EQ(dims_k(alg<F>({"x"}, {"x^2"})), (Dims{1, 1, 0}));
      EXPECT_EQ(dims_k(alg<F>({"x"}, {"x^3"})), (Dims{1, 1, 0}));
      EXPECT_EQ(dims_k(alg<F>({"x", "y"}, {"x^2", "x*y", "y^2"})), (Dims{2, 3, 2}));
      EXPECT_EQ(dims_k(alg<F>({"x", "y", "z"}, {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"})), (Dims{3, 6, 8}));
      EXPECT_EQ(dims_k(alg<F>({"x", "y"}, {"x*y"})), (Dims{2, 1, 0}));
      EXPECT_EQ(dims_k(alg<F>({"x", "y"}, {"x^2", "y^3"})), (Dims{2, 2, 0}));
      EXPECT_EQ(dims_k(alg<F>({"x", "y"}, {"y^2 - x^3"})), (Dims{2, 1, 0}));
      EXPECT_EQ(dims_k(alg<F>({"x", "y", "z"}, {})), (Dims{3, 0, 0}));
    };
    if (field == 0) run(F2{});
    if (field == 1) run(F3{});
    if (field == 2) run(Rational{});
  }
}

TEST(Cotangent, RegularModuleDependsOnCharacteristic) {
  auto reg = [](auto b) { return dims(b, regular_module(truncate(b, 0))); };
  EXPECT_EQ(reg(alg<F2>({"x"}, {"x^2"})), (Dims{2, 2, 0}));
  EXPECT_EQ(reg(alg<F3>({"x"}, {"x^2"})), (Dims{1, 1, 0}));
  EXPECT_EQ(reg(alg<Rational>({"x"}, {"x^2"})), (Dims{1, 1, 0}));
  EXPECT_EQ(reg(alg<F3>({"x", "y"}, {"x^2", "x*y", "y^2"})), (Dims{4, 4, 1}));
}

TEST(Cotangent, RelativeOverDualNumbers) {
  auto b = alg<F2>({"x"}, {"x^2", "t*x"}, {"t"}, {"t^2"});
  EXPECT_EQ(dims_k(b), (Dims{1, 2, 2}));
  // A free algebra over any base has no higher cohomology.
  auto free = alg<F3>({"x", "y"}, {}, {"t"}, {"t^2"});
  EXPECT_EQ(dims(free, regular_module(truncate(free, 2))), (Dims{12, 0, 0}));
}

TEST(Cotangent, ComplexComposesToZero) {
  for (const auto& b : {alg<F3>({"x", "y"}, {"x^2", "x*y", "y^2"}), alg<F3>({"x", "y", "z"}, {"x*y", "y*z", "x*z"}),
                        alg<F3>({"x", "y"}, {"x^2 - y^2", "x*y", "y^3"}), alg<F3>({"x"}, {"x^3", "t*x^2"}, {"t"}, {"t^2"})}) {
    auto m = truncate(b, 3);
    for (const auto& j : {residue_module(b), regular_module(m)}) {
      auto c = cochains(build_ls(b), j);
      if (c.d0.rows() > 0 && c.d1.rows() > 0) EXPECT_TRUE(is_zero(Matrix<F3>(c.d1 * c.d0)));
      if (c.k2.rows() > 0 && c.d1.rows() > 0) EXPECT_TRUE(is_zero(Matrix<F3>(c.k2 * c.d1)));
    }
  }
}

TEST(Cotangent, CompleteIntersectionsHaveNoT2) {
  for (const auto& b : {alg<F3>({"x", "y"}, {"x^2", "y^3"}), alg<F3>({"x", "y", "z"}, {"x^2 - y*z", "y^2", "z^3"}),
                        alg<F3>({"x"}, {"x^2 - t"}, {"t"}, {"t^2"})}) {
    EXPECT_EQ(dims_k(b)[2], 0);
    EXPECT_EQ(dims(b, regular_module(truncate(b, 0)))[2], 0);
  }
}

TEST(Cotangent, CoboundaryWitnesses) {
  auto b = alg<F3>({"x"}, {"x^2"});
  auto c = cochains(build_ls(b), regular_module(truncate(b, 0)));
  Vector<F3> w(2);
  w << F3(1), F3(2);
  Vector<F3> image = c.d0 * w;
  auto back = is_coboundary(c, CohomologyClass<F3>{1, image});
  ASSERT_TRUE(back.has_value());
  EXPECT_TRUE(c.d0 * *back == image);
  auto t1 = t_module(c, 1);
  EXPECT_FALSE(is_coboundary(c, CohomologyClass<F3>{1, Vector<F3>(t1.representatives.col(0))}).has_value());
  EXPECT_TRUE(is_zero(class_coordinates(t1, image)));
  EXPECT_THROW(t_module(c, 3), std::invalid_argument);
}

}  // namespace
}  // namespace defcoh
