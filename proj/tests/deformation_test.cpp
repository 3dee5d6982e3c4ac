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

#include "defcoh/deformation.hpp"
#include "defcoh/oracle.hpp"
#include "defcoh/parse.hpp"

#include <gtest/gtest.h>

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
PolyList<F> polys(const PresentedAlgebra<F>& b, std::initializer_list<const char*> ss) {
  PolyList<F> out;
  for (auto s : ss) out.push_back(parse_polynomial<F>(s, b.names()));
  return out;
}

template <Field F>
Vector<F> vec(std::initializer_list<long long> xs) {
  Vector<F> v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (auto x : xs) v(i++) = F(x);
  return v;
}

// B = A[x]/(x^2, tx) over A = k[t]/(t^2), deformed to A' = k[t]/(t^3) with
// I = (t^2) acting into J = B/(t) = <1, x>.
template <Field F>
BaseDeformationProblem<F> crafted(Vector<F> phi) {
  BaseDeformationProblem<F> p;
  p.algebra = alg<F>({"x"}, {"x^2", "t*x"}, {"t"}, {"t^2"});
  p.module.dimension = 2;
  p.module.labels = {"1", "x"};
  p.module.action.assign(2, zeros<F>(2, 2));
  p.module.action[1](1, 0) = F(1);
  p.base_lift = polys(p.algebra, {"t^3"});
  p.base_ideal = polys(p.algebra, {"t^2"});
  p.phi = {phi};
  return normalize(p);
}

TEST(Exal, DualNumbersHaveTwoClasses) {
  auto b = alg<F2>({"x"}, {"x^2"});
  auto j = residue_module(b);
  auto res = exal_classify(build_ls(b), j);
  ASSERT_EQ(res.classes.size(), 2u);
  const auto& triv = res.classes[0].extension;
  const auto& twisted = res.classes[1].extension;
  EXPECT_EQ(triv.algebra.dim(), 3);
  EXPECT_TRUE(validate(twisted).empty());
  EXPECT_FALSE(extension_isomorphism(triv, twisted).has_value());
  EXPECT_TRUE(extension_isomorphism(twisted, twisted).has_value());
  // The nontrivial class is k[x]/(x^3): x^2 spans J.
  EXPECT_TRUE(is_zero(Vector<F2>(evaluate_in(triv, polys(b, {"x^2"})[0], {}))));
  EXPECT_FALSE(is_zero(Vector<F2>(evaluate_in(twisted, polys(b, {"x^2"})[0], {}))));
}

TEST(Exal, CocyclesRoundTrip) {
  auto b = alg<F3>({"x", "y"}, {"x^2", "x*y", "y^2"});
  auto j = residue_module(b);
  auto ls = build_ls(b);
  auto res = exal_classify(ls, j);
  ASSERT_EQ(res.classes.size(), 27u);
  auto c = cochains(ls, j);
  for (const auto& cl : res.classes) {
    Vector<F3> phi = cocycle_from_extension(cl.extension);
    EXPECT_TRUE(phi == cl.cocycle);
    EXPECT_TRUE(class_coordinates(res.t1, phi) == cl.coordinates);
  }
}

TEST(Exal, BaerSumsAreAdditive) {
  auto b = alg<F3>({"x"}, {"x^3"});
  auto ls = build_ls(b);
  auto j = residue_module(b);
  auto res = exal_classify(ls, j);
  ASSERT_EQ(res.classes.size(), 3u);
  const auto& e1 = res.classes[1].extension;
  auto twice = baer_sum(e1, e1);
  EXPECT_TRUE(extension_isomorphism(twice, res.classes[2].extension).has_value());
  auto thrice = baer_sum(twice, e1);
  EXPECT_TRUE(extension_isomorphism(thrice, res.classes[0].extension).has_value());
  EXPECT_TRUE(extension_isomorphism(difference_extension(e1, e1), res.classes[0].extension).has_value());
}

TEST(Exal, OracleFindsEveryClass) {
  auto b = alg<F2>({"x", "y"}, {"x*y"});
  auto j = residue_module(b);
  auto res = exal_classify(build_ls(b), j, 4);
  auto oracle = enumerate_deformations(exal_search(b, j, res.truncation));
  ASSERT_EQ(oracle.representatives.size(), res.classes.size());
  for (const auto& cl : res.classes) {
    int hits = 0;
    for (auto i : oracle.representatives) hits += extension_isomorphism(cl.extension, oracle.solutions[i]).has_value();
    EXPECT_EQ(hits, 1);
  }
}

TEST(Exal, RationalBasis) {
  auto b = alg<Rational>({"x", "y"}, {"x^2", "x*y", "y^2"});
  auto res = exal_classify(build_ls(b), residue_module(b));
  EXPECT_EQ(res.t1.dim, 3);
  EXPECT_EQ(res.classes.size(), 4u);  // zero, then a basis
}

TEST(Truncation, Defaults) {
  auto node = alg<F2>({"x", "y"}, {"x*y"});
  EXPECT_EQ(choose_truncation(node, residue_module(node), 0), default_truncation(node, residue_module(node)));
  EXPECT_EQ(choose_truncation(node, residue_module(node), 5), 5u);
  auto fat = alg<F2>({"x"}, {"x^2"});
  EXPECT_EQ(choose_truncation(fat, residue_module(fat), 5), 0u);
}

template <FiniteField F>
LiftProblem<F> lift_problem(const char* target, const char* ideal, std::vector<const char*> images) {
  auto cp = alg<F>({"u"}, {target});
  auto c = alg<F>({"u"}, {target, ideal});
  auto cprime = truncate(cp, 0), quotient = truncate(c, 0);
  LiftProblem<F> p;
  p.source = alg<F>({"x"}, {"x^2"});
  p.extension = cprime.algebra;
  p.quotient = quotient.algebra;
  p.projection = Matrix<F>(quotient.dim(), cprime.dim());
  for (Index k = 0; k < cprime.dim(); ++k)
    p.projection.col(k) = quotient.coords(Polynomial<F>::term(cprime.basis[static_cast<std::size_t>(k)], F(1)));
  for (auto s : images) p.images.push_back(quotient.coords(parse_polynomial<F>(s, {"u"})));
  return p;
}

TEST(Lift, ObstructedWhenTheSquareSurvives) {
  // x -> u into k[u]/(u^2); any lift to k[u]/(u^4) squares to u^2 + ... != 0.
  auto p = lift_problem<F2>("u^4", "u^2", {"u"});
  EXPECT_TRUE(validate(p).empty());
  auto res = lift_homomorphism(p);
  EXPECT_TRUE(res.obstructed);
  EXPECT_EQ(res.kernel.cols(), 2);
  EXPECT_FALSE(is_zero(res.class_coordinates));
  EXPECT_TRUE(enumerate_lifts(p).empty());
}

TEST(Lift, TorsorUnderDerivations) {
  auto p = lift_problem<F3>("u^3", "u^2", {"0"});
  auto res = lift_homomorphism(p);
  ASSERT_FALSE(res.obstructed);
  auto lifts = enumerate_lifts(p);
  EXPECT_EQ(res.freedom.cols(), 1);
  EXPECT_EQ(lifts.size(), 3u);
  std::vector<Vector<F3>> group;
  for (long long a = 0; a < 3; ++a) group.push_back(res.freedom * vec<F3>({a}));
  auto act = [&](const Vector<F3>& d, const std::vector<Vector<F3>>& l) {
    return std::vector<Vector<F3>>{Vector<F3>(l[0] + res.kernel * d)};
  };
  auto eq = [](const auto& a, const auto& b) { return a == b; };
  EXPECT_TRUE(check_torsor_action(lifts, group, act, eq).bijection);
  std::vector<Vector<F3>> half(group.begin(), group.begin() + 2);
  EXPECT_FALSE(check_torsor_action(lifts, half, act, eq).bijection);
}

TEST(Deformation, CraftedObstruction) {
  auto p = crafted<F2>(vec<F2>({1, 0}));
  EXPECT_TRUE(validate(p).empty());
  auto ob = obstruction_class(p);
  EXPECT_FALSE(ob.zero);
  EXPECT_TRUE(ob.lifts_agree);
  EXPECT_EQ(ob.t2.dim, 1);
  auto res = realize_deformation(p);
  EXPECT_FALSE(res.solution.has_value());
  EXPECT_TRUE(enumerate_deformations(deformation_search(p, 0)).solutions.empty());
}

TEST(Deformation, CraftedSolutions) {
  for (auto phi : {vec<F2>({0, 1}), vec<F2>({0, 0})}) {
    auto p = crafted<F2>(phi);
    auto res = realize_deformation(p);
    ASSERT_TRUE(res.solution.has_value());
    EXPECT_EQ(res.solution->algebra.dim(), 5);
    auto oracle = enumerate_deformations(deformation_search(p, 0));
    EXPECT_EQ(oracle.solutions.size(), 32u);
    EXPECT_EQ(oracle.representatives.size(), 8u);
    EXPECT_EQ(t_module(res.obstruction.complex, 1).dim, 3);
    bool found = false;
    for (auto i : oracle.representatives) found |= extension_isomorphism(*res.solution, oracle.solutions[i]).has_value();
    EXPECT_TRUE(found);
  }
}

TEST(Deformation, FreeAlgebraPushout) {
  BaseDeformationProblem<F2> p;
  p.algebra = alg<F2>({"x"}, {}, {"e"}, {"e"});
  auto model = truncate(p.algebra, 2);
  p.module = regular_module(model);
  p.base_lift = polys(p.algebra, {"e^2"});
  p.base_ideal = polys(p.algebra, {"e"});
  p.phi = {model.coords(polys(p.algebra, {"1"})[0])};
  p = normalize(p);
  EXPECT_TRUE(validate(p).empty());
  auto res = realize_deformation(p, 2);
  ASSERT_TRUE(res.solution.has_value());
  EXPECT_EQ(res.obstruction.t2.dim, 0);
  auto oracle = enumerate_deformations(deformation_search(p, res.truncation));
  EXPECT_EQ(oracle.representatives.size(), 1u);
}

TEST(Deformation, TwistMovesWithinTheTorsor) {
  auto p = crafted<F3>(vec<F3>({0, 1}));
  auto base = realize_deformation(p);
  ASSERT_TRUE(base.solution.has_value());
  auto t1 = t_module(base.obstruction.complex, 1);
  auto twisted = realize_deformation(p, 0, Vector<F3>(t1.representatives.col(0)));
  ASSERT_TRUE(twisted.solution.has_value());
  EXPECT_FALSE(extension_isomorphism(*base.solution, *twisted.solution).has_value());
  auto diff = difference_extension(*twisted.solution, *base.solution);
  Vector<F3> phi = cocycle_from_extension(diff);
  EXPECT_TRUE(class_coordinates(t1, phi) == class_coordinates(t1, Vector<F3>(t1.representatives.col(0))));
}

TEST(Deformation, ObstructionIndependentOfSeed) {
  auto p = crafted<F3>(vec<F3>({1, 0}));
  auto a = obstruction_class(p, 1), b = obstruction_class(p, 99);
  EXPECT_TRUE(a.lifts_agree && b.lifts_agree);
  EXPECT_TRUE(a.class_coordinates == b.class_coordinates);
}

TEST(Deformation, ValidationCatchesBadInput) {
  auto p = crafted<F2>(vec<F2>({0, 1}));
  auto wrong_base = p;
  wrong_base.base_lift = polys(p.algebra, {"t"});
  EXPECT_FALSE(validate(wrong_base).empty());
  auto not_square_zero = p;
  not_square_zero.base_lift = {};
  EXPECT_FALSE(validate(not_square_zero).empty());
  auto short_phi = p;
  short_phi.phi = {vec<F2>({1})};
  EXPECT_FALSE(validate(short_phi).empty());
}

TEST(Torsor, EmptySetIsPseudoTorsor) {
  std::vector<int> none, group{0, 1};
  auto r = check_torsor_action(none, group, [](int g, int x) { return g + x; }, [](int a, int b) { return a == b; });
  EXPECT_TRUE(r.empty);
  EXPECT_EQ(r.verdict, "pseudo-torsor, empty");
}

}  // namespace
}  // namespace defcoh
