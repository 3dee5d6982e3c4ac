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

#include "defcoh/corpus.hpp"

#include "defcoh/oracle.hpp"
#include "defcoh/parse.hpp"
#include "defcoh/problem.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

namespace defcoh {

namespace {

// Pinned wall-clock limits, seconds.
constexpr double kLimits[8] = {0, 5, 60, 120, 300, 30, 30, 5};
constexpr std::uint64_t kOracleBudget = std::uint64_t{1} << 24;

template <Field F>
PresentedAlgebra<F> algebra(const std::vector<std::string>& base, const std::vector<std::string>& g,
                            const std::vector<std::string>& vars, const std::vector<std::string>& f) {
  std::vector<std::string> names = base;
  names.insert(names.end(), vars.begin(), vars.end());
  PolyList<F> gp, fp;
  for (const auto& s : g) gp.push_back(parse_polynomial<F>(s, names));
  for (const auto& s : f) fp.push_back(parse_polynomial<F>(s, names));
  return PresentedAlgebra<F>(base, gp, vars, fp);
}

template <Field F>
PresentedAlgebra<F> over_k(const std::vector<std::string>& vars, const std::vector<std::string>& f) {
  return algebra<F>({}, {}, vars, f);
}

template <Field F>
std::uint64_t field_power(Index d) {
  std::uint64_t c = 1;
  for (Index i = 0; i < d; ++i) c *= FieldTraits<F>::order;
  return c;
}

struct Tally {
  std::size_t cases = 0;
  std::vector<std::string> failures;
  void fail(const std::string& s) { failures.push_back(s); }
  std::string summary(const std::string& what) const {
    std::string out = std::to_string(cases) + " " + what + ", " + std::to_string(failures.size()) + " exceptions";
    if (!failures.empty()) out += " (first: " + failures.front() + ")";
    return out;
  }
};

// ------------------------------------------------------------------ 1

template <Field F>
void free_vanishing(Tally& t) {
  const std::vector<std::vector<std::string>> var_sets{{"x"}, {"x", "y"}, {"x", "y", "z"}};
  for (const auto& vars : var_sets)
    for (int base = 0; base < 2; ++base) {
      auto b = base == 0 ? over_k<F>(vars, {}) : algebra<F>({"t"}, {"t^2"}, vars, {});
      std::vector<FiniteModule<F>> mods{residue_module(b), regular_module(truncate(b, 2)), regular_module(truncate(b, 3))};
      for (std::size_t m = 0; m < mods.size(); ++m) {
        ++t.cases;
        auto d = t_dimensions(cochains(build_ls(b), mods[m]));
        if (d[1] != 0 || d[2] != 0)
          t.fail(FieldTraits<F>::name() + " " + std::to_string(vars.size()) + " generators, module " + std::to_string(m));
      }
    }
}

CriterionResult criterion1() {
  Tally t;
  free_vanishing<F2>(t);
  free_vanishing<F3>(t);
  free_vanishing<Rational>(t);
  return {1, "free algebras: T1 = T2 = 0", t.failures.empty() && t.cases >= 27, t.summary("(field, algebra, module) cases"), 0, 0};
}

// ------------------------------------------------------------------ 2

template <FiniteField F>
void lift_corpus(Tally& t, std::size_t& solvable, std::size_t& obstructed) {
  struct Target {
    std::vector<std::string> vars, rel, ideal;
  };
  const std::vector<Target> targets{
      {{"u"}, {"u^2"}, {"u"}},
      {{"u"}, {"u^3"}, {"u^2"}},
      {{"u"}, {"u^4"}, {"u^2"}},
      {{"u"}, {"u^4"}, {"u^3"}},
      {{"u", "v"}, {"u^2", "u*v", "v^2"}, {"u", "v"}},
      {{"u", "v"}, {"u^2", "u*v", "v^2"}, {"v"}},
      {{"u", "v"}, {"u^2", "v^2"}, {"u*v"}},
      {{"u", "v"}, {"u^2", "v^2"}, {"v"}},
  };
  const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> sources{
      {{"x"}, {"x^2"}}, {{"x"}, {"x^3"}}, {{"x"}, {}}, {{"x", "y"}, {"x^2", "x*y", "y^2"}},
      {{"x", "y"}, {"x*y"}}, {{"x", "y"}, {"x^2", "y^2"}}};
  for (const auto& tg : targets) {
    auto cp = over_k<F>(tg.vars, tg.rel);
    auto rel = tg.rel;
    rel.insert(rel.end(), tg.ideal.begin(), tg.ideal.end());
    auto cprime = truncate(cp, 0);
    auto c = truncate(over_k<F>(tg.vars, rel), 0);
    Matrix<F> pi(c.dim(), cprime.dim());
    for (Index k = 0; k < cprime.dim(); ++k) pi.col(k) = c.coords(Polynomial<F>::term(cprime.basis[static_cast<std::size_t>(k)], F(1)));
    for (const auto& [vars, f] : sources) {
      auto b = over_k<F>(vars, f);
      const Index n = static_cast<Index>(vars.size());
      const std::uint64_t total = vector_count<F>(n * c.dim(), std::uint64_t{1} << 16);
      std::vector<std::vector<Vector<F>>> homs;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        Vector<F> flat = vector_from_index<F>(idx, n * c.dim());
        std::vector<Vector<F>> img;
        for (Index i = 0; i < n; ++i) img.push_back(flat.segment(i * c.dim(), c.dim()));
        bool ok = true;
        for (const auto& r : b.relations())
          ok = ok && is_zero(evaluate(r, img, c.algebra.unit(), [&](const Vector<F>& x, const Vector<F>& y) { return c.algebra.mul(x, y); }));
        if (ok) homs.push_back(std::move(img));
      }
      // A spread of at most three homomorphisms per pair.
      std::vector<std::size_t> pick;
      for (std::size_t s = 0; s < std::min<std::size_t>(3, homs.size()); ++s) pick.push_back(s * (homs.size() - 1) / 2);
      std::sort(pick.begin(), pick.end());
      pick.erase(std::unique(pick.begin(), pick.end()), pick.end());
      for (auto h : pick) {
        ++t.cases;
        LiftProblem<F> lp{b, cprime.algebra, c.algebra, pi, homs[h], {}};
        const std::string tag = FieldTraits<F>::name() + " lift #" + std::to_string(t.cases);
        auto res = lift_homomorphism(lp);
        auto lifts = enumerate_lifts(lp);
        const Index dj = res.kernel.cols();
        if (res.obstructed) {
          ++obstructed;
          if (!lifts.empty()) t.fail(tag + ": obstructed but the oracle found lifts");
          if (is_coboundary(res.complex, CohomologyClass<F>{1, res.cocycle})) t.fail(tag + ": class is a coboundary");
          auto rep = check_torsor_action(lifts, std::vector<int>{}, [](int, const auto& x) { return x; }, [](const auto&, const auto&) { return false; });
          if (!rep.empty) t.fail(tag + ": expected an empty pseudo-torsor");
          continue;
        }
        ++solvable;
        if (lifts.size() != field_power<F>(res.freedom.cols())) t.fail(tag + ": |lifts| != |Der|");
        std::vector<Vector<F>> group;
        for (std::uint64_t g = 0; g < field_power<F>(res.freedom.cols()); ++g) group.push_back(res.freedom * vector_from_index<F>(g, res.freedom.cols()));
        auto act = [&](const Vector<F>& d, const std::vector<Vector<F>>& l) {
          auto moved = l;
          for (Index i = 0; i < n; ++i) moved[static_cast<std::size_t>(i)] += res.kernel * Vector<F>(d.segment(i * dj, dj));
          return moved;
        };
        auto rep = check_torsor_action(lifts, group, act, [](const auto& x, const auto& y) { return x == y; });
        if (!rep.bijection) t.fail(tag + ": " + rep.verdict);
        // Differences of lifts are derivations.
        for (std::size_t a = 0; a < lifts.size(); ++a)
          for (std::size_t e = 0; e < lifts.size(); ++e) {
            Vector<F> diff(n * dj);
            for (Index i = 0; i < n; ++i) {
              auto y = solve_affine(res.kernel, Vector<F>(lifts[a][static_cast<std::size_t>(i)] - lifts[e][static_cast<std::size_t>(i)]));
              if (!y) {
                t.fail(tag + ": lifts differ outside the ideal");
                continue;
              }
              diff.segment(i * dj, dj) = *y;
            }
            if (!validate(Derivation<F>{diff}, b, res.module).empty()) t.fail(tag + ": difference of lifts is not a derivation");
          }
      }
    }
  }
}

CriterionResult criterion2() {
  Tally t;
  std::size_t solvable = 0, obstructed = 0;
  lift_corpus<F2>(t, solvable, obstructed);
  lift_corpus<F3>(t, solvable, obstructed);
  bool ok = t.failures.empty() && t.cases >= 50 && solvable > 0 && obstructed > 0;
  return {2, "lifting: torsor law and obstructions", ok,
          t.summary("lift problems") + "; " + std::to_string(solvable) + " solvable, " + std::to_string(obstructed) + " obstructed", 0, 0};
}

// ------------------------------------------------------------------ 3

CriterionResult criterion3() {
  using F = F2;
  struct Case {
    std::string name;
    PresentedAlgebra<F> b;
    unsigned d;
    Index expect;
  };
  std::vector<Case> cases{{"k[x]/(x^2)", over_k<F>({"x"}, {"x^2"}), 0, 1},
                          {"k[x]/(x^3)", over_k<F>({"x"}, {"x^3"}), 0, 1},
                          {"k[x,y]/(x^2,xy,y^2)", over_k<F>({"x", "y"}, {"x^2", "x*y", "y^2"}), 0, 3},
                          {"k[x,y]/(xy), d=4", over_k<F>({"x", "y"}, {"x*y"}), 4, 1}};
  Tally t;
  std::string dims;
  std::size_t pairs = 0;
  for (auto& c : cases) {
    ++t.cases;
    auto j = residue_module(c.b);
    auto ls = build_ls(c.b);
    auto cc = cochains(ls, j);
    auto res = exal_classify(ls, j, c.d);
    dims += (dims.empty() ? "" : ",") + std::to_string(res.t1.dim);
    if (res.t1.dim != c.expect) t.fail(c.name + ": dim T1 = " + std::to_string(res.t1.dim));
    auto oracle = enumerate_deformations(exal_search(c.b, j, res.truncation));
    if (oracle.representatives.size() != field_power<F>(res.t1.dim)) t.fail(c.name + ": oracle class count");
    for (const auto& e1 : res.classes)
      for (const auto& e2 : res.classes) {
        ++pairs;
        auto sum_geo = baer_sum(e1.extension, e2.extension);
        auto sum_cocycle = extension_from_cocycle(ls, j, Vector<F>(e1.cocycle + e2.cocycle), res.truncation);
        if (!extension_isomorphism(sum_geo, sum_cocycle)) t.fail(c.name + ": Baer sums disagree");
        auto diff_geo = difference_extension(e1.extension, e2.extension);
        auto diff_cocycle = extension_from_cocycle(ls, j, Vector<F>(e1.cocycle - e2.cocycle), res.truncation);
        if (!extension_isomorphism(diff_geo, diff_cocycle)) t.fail(c.name + ": Baer differences disagree");
        Vector<F> cls = class_coordinates(res.t1, cocycle_from_extension(sum_geo));
        if (!(cls == Vector<F>(e1.coordinates + e2.coordinates))) t.fail(c.name + ": class map is not additive");
        if (!is_cocycle(cc, CohomologyClass<F>{1, cocycle_from_extension(sum_geo)})) t.fail(c.name + ": sum is not a cocycle");
      }
  }
  return {3, "extension classes and Baer sums", t.failures.empty(),
          "dim T1 = " + dims + " (expected 1,1,3,1); " + std::to_string(pairs) + " Baer pairs; " + t.summary("algebras"), 0, 0};
}

// ------------------------------------------------------------------ 4

struct DeformCase {
  std::string name;
  std::vector<std::string> base, g, vars, f;
  std::string module;  // "k", "regular", or "custom:<json of actions>"
  std::vector<std::string> base_lift, ideal;
  std::vector<std::string> phi;  // polynomials (regular) or comma-separated coordinates
  unsigned truncation = 0;
  bool binary_only = false;  // the F3 search is too large
};

std::vector<DeformCase> deformation_cases() {
  const std::vector<std::string> E{"e"}, Eg{"e"}, Elift{"e^2"}, Eideal{"e"};
  const std::vector<std::string> T{"t"}, Tg{"t^2"}, Tlift{"t^3"}, Tideal{"t^2"};
  return {
      // I = 0.
      {"I=0 k[x]/(x^2)", {}, {}, {"x"}, {"x^2"}, "k", {}, {}, {}},
      {"I=0 k[x]/(x^3)", {}, {}, {"x"}, {"x^3"}, "k", {}, {}, {}},
      {"I=0 fat point", {}, {}, {"x", "y"}, {"x^2", "x*y", "y^2"}, "k", {}, {}, {}},
      {"I=0 node", {}, {}, {"x", "y"}, {"x*y"}, "k", {}, {}, {}, 4},
      {"I=0 k[x]/(x^2), J=B", {}, {}, {"x"}, {"x^2"}, "regular", {}, {}, {}},
      {"I=0 over k[t]/(t^2)", T, Tg, {"x"}, {"x^2", "t*x"}, "k", Tg, {}, {}},
      // Free B: pushout solutions.
      {"free A[x], J=k", E, Eg, {"x"}, {}, "k", Elift, Eideal, {"1"}},
      {"free A[x], J=B_2, phi=1", E, Eg, {"x"}, {}, "regular", Elift, Eideal, {"1"}},
      {"free A[x], J=B_2, phi=x", E, Eg, {"x"}, {}, "regular", Elift, Eideal, {"x"}},
      {"free A[x,y], J=k", E, Eg, {"x", "y"}, {}, "k", Elift, Eideal, {"1"}},
      // Complete intersections.
      {"ci A[x]/(x^2)", T, Tg, {"x"}, {"x^2"}, "k", Tlift, Tideal, {"1"}},
      {"ci A[x]/(x^2 - t)", T, Tg, {"x"}, {"x^2 - t"}, "k", Tlift, Tideal, {"1"}},
      {"ci A[x,y]/(x^2, y^2)", T, Tg, {"x", "y"}, {"x^2", "y^2"}, "k", Tlift, Tideal, {"1"}},
      {"ci A[x]/(x^2), J=B", T, Tg, {"x"}, {"x^2"}, "regular", Tlift, Tideal, {"t*x"}, 0, true},
      {"ci A[x,y]/(x y), J=k", T, Tg, {"x", "y"}, {"x*y"}, "k", Tlift, Tideal, {"1"}, 3},
      // Fat points with dim T2 = 2.
      {"fat A[x,y], phi=1", E, Eg, {"x", "y"}, {"x^2", "x*y", "y^2"}, "k", Elift, Eideal, {"1"}},
      {"fat A[x,y], phi=0", E, Eg, {"x", "y"}, {"x^2", "x*y", "y^2"}, "k", Elift, Eideal, {"0"}},
      {"fat A[x,y], J=B, phi=x", E, Eg, {"x", "y"}, {"x^2", "x*y", "y^2"}, "regular", Elift, Eideal, {"x"}},
      // Fat points over k[t]/(t^2) with a crafted phi.
      {"fat k[t,x], phi=1", T, Tg, {"x"}, {"x^2", "t*x"}, "custom:x", Tlift, Tideal, {"1,0"}},
      {"fat k[t,x], phi=x", T, Tg, {"x"}, {"x^2", "t*x"}, "custom:x", Tlift, Tideal, {"0,1"}},
      {"fat k[t,x], phi=0", T, Tg, {"x"}, {"x^2", "t*x"}, "custom:x", Tlift, Tideal, {"0,0"}},
      {"fat k[t,x], J=k", T, Tg, {"x"}, {"x^2", "t*x"}, "k", Tlift, Tideal, {"1"}},
      {"fat k[t,x,y], phi=1", T, Tg, {"x", "y"}, {"x^2", "x*y", "y^2", "t*x", "t*y"}, "custom:xy", Tlift, Tideal, {"1,0,0"}, 0, true},
      {"fat k[t,x,y], phi=y", T, Tg, {"x", "y"}, {"x^2", "x*y", "y^2", "t*x", "t*y"}, "custom:xy", Tlift, Tideal, {"0,0,1"}, 0, true},
  };
}

template <Field F>
BaseDeformationProblem<F> build_problem(const DeformCase& c) {
  BaseDeformationProblem<F> p;
  p.algebra = algebra<F>(c.base, c.g, c.vars, c.f);
  const auto& b = p.algebra;
  auto names = b.names();
  FiniteModel<F> model;
  if (c.module == "k") {
    p.module = residue_module(b);
  } else if (c.module == "regular") {
    model = truncate(b, choose_truncation(b, residue_module(b), c.truncation));
    p.module = regular_module(model);
  } else {
    // B/(t): basis 1 followed by the relative generators, each x_i sending 1 to x_i.
    const Index dim = static_cast<Index>(b.nrelative()) + 1;
    p.module.dimension = dim;
    p.module.action.assign(b.nvars(), zeros<F>(dim, dim));
    p.module.labels.push_back("1");
    for (std::size_t i = 0; i < b.nrelative(); ++i) {
      p.module.labels.push_back(b.vars()[i]);
      p.module.action[b.flat(i)](static_cast<Index>(i) + 1, 0) = F(1);
    }
  }
  for (const auto& s : c.base_lift) p.base_lift.push_back(parse_polynomial<F>(s, names));
  for (const auto& s : c.ideal) p.base_ideal.push_back(parse_polynomial<F>(s, names));
  for (const auto& s : c.phi) {
    if (c.module == "regular") {
      p.phi.push_back(model.coords(parse_polynomial<F>(s, names)));
      continue;
    }
    Vector<F> v(p.module.dim());
    std::stringstream in(s);
    std::string item;
    Index i = 0;
    while (std::getline(in, item, ',')) v(i++) = parse_numeral<F>(item);
    p.phi.push_back(v);
  }
  if (p.base_lift.empty() && p.base_ideal.empty()) p.base_lift = b.base_relations();
  return normalize(p);
}

struct DeformStats {
  std::size_t solvable = 0, obstructed = 0, gerbe_checks = 0;
};

template <FiniteField F>
void deformation_corpus(Tally& t, DeformStats& st, std::uint64_t seed) {
  for (const auto& c : deformation_cases()) {
    if (c.binary_only && FieldTraits<F>::order != 2) continue;
    ++t.cases;
    const std::string tag = FieldTraits<F>::name() + " " + c.name;
    auto p = build_problem<F>(c);
    auto bad = validate(p);
    if (!bad.empty()) {
      t.fail(tag + ": " + bad.front());
      continue;
    }
    unsigned d = choose_truncation(p.algebra, p.module, c.truncation);
    auto res = realize_deformation(p, d, std::nullopt, seed);
    const auto& ob = res.obstruction;
    OracleResult<F> oracle;
    try {
      oracle = enumerate_deformations(deformation_search(p, d), EnumerationBudget{kOracleBudget, std::uint64_t{1} << 16});
    } catch (const BudgetExceeded& e) {
      t.fail(tag + ": " + e.what());
      continue;
    }
    if (!ob.lifts_agree) t.fail(tag + ": relation lifts disagree");
    if (ob.zero != !oracle.solutions.empty()) t.fail(tag + ": obstruction and oracle disagree");
    if (!ob.zero) {
      ++st.obstructed;
      continue;
    }
    ++st.solvable;
    Index t1 = t_module(ob.complex, 1).dim;
    if (oracle.representatives.size() != field_power<F>(t1)) t.fail(tag + ": class count != p^dim T1");
    bool found = false;
    for (auto i : oracle.representatives) found |= extension_isomorphism(*res.solution, oracle.solutions[i]).has_value();
    if (!found) t.fail(tag + ": realized solution not found by the oracle");
    // Any two solutions differ by an extension class; twisting recovers the other.
    for (auto i : oracle.representatives) {
      ++st.gerbe_checks;
      auto diff = difference_extension(oracle.solutions[i], *res.solution);
      Vector<F> phi = cocycle_from_extension(diff);
      if (!is_cocycle(ob.complex, CohomologyClass<F>{1, phi})) t.fail(tag + ": difference class is not in T1");
      auto twisted = realize_deformation(p, d, phi, seed);
      if (!twisted.solution || !extension_isomorphism(*twisted.solution, oracle.solutions[i]))
        t.fail(tag + ": twisting by the difference class misses the solution");
    }
  }
}

CriterionResult criterion4(std::uint64_t seed) {
  Tally t;
  DeformStats st;
  deformation_corpus<F2>(t, st, seed);
  deformation_corpus<F3>(t, st, seed);
  bool ok = t.failures.empty() && t.cases >= 20 && st.obstructed > 0 && st.solvable > 0;
  return {4, "deformations: obstruction vanishes iff solutions exist", ok,
          t.summary("problems") + "; " + std::to_string(st.solvable) + " solvable, " + std::to_string(st.obstructed) +
              " obstructed, " + std::to_string(st.gerbe_checks) + " difference/twist checks",
          0, 0};
}

// ------------------------------------------------------------------ 5

template <Field F>
void presentations(Tally& t, const std::string& name, const std::vector<PresentedAlgebra<F>>& list, bool finite) {
  ++t.cases;
  std::vector<std::array<Index, 3>> dims;
  for (const auto& b : list) {
    dims.push_back(t_dimensions(cochains(build_ls(b), residue_module(b))));
    if (finite) {
      auto d = t_dimensions(cochains(build_ls(b), regular_module(truncate(b, 0))));
      dims.back() = {dims.back()[0] * 1000 + d[0], dims.back()[1] * 1000 + d[1], dims.back()[2] * 1000 + d[2]};
    }
  }
  for (const auto& d : dims)
    if (d != dims.front()) t.fail(FieldTraits<F>::name() + " " + name);
}

template <Field F>
void presentation_corpus(Tally& t) {
  presentations<F>(t, "k[x]/(x^2)", {over_k<F>({"x"}, {"x^2"}), over_k<F>({"x", "z"}, {"x^2", "z"}), over_k<F>({"y"}, {"y^2"}),
                                     algebra<F>({"s"}, {"s"}, {"x"}, {"x^2"})}, true);
  presentations<F>(t, "k[x]/(x^3)", {over_k<F>({"x"}, {"x^3"}), over_k<F>({"x", "y"}, {"y - x^2", "x*y"})}, true);
  presentations<F>(t, "fat point", {over_k<F>({"x", "y"}, {"x^2", "x*y", "y^2"}),
                                    over_k<F>({"x", "y"}, {"x^2 + 2*x*y + y^2", "x*y + y^2", "y^2"}),
                                    over_k<F>({"y", "x"}, {"y^2", "x^2", "y*x"})}, true);
  presentations<F>(t, "node", {over_k<F>({"x", "y"}, {"x*y"}), over_k<F>({"y", "x"}, {"y*x"}),
                               over_k<F>({"x", "y", "w"}, {"x*y", "w - x^2"})}, false);
  presentations<F>(t, "k[x,y]/(x^2,y^3)", {over_k<F>({"x", "y"}, {"x^2", "y^3"}), over_k<F>({"x", "y", "z"}, {"x^2", "y^3", "z - x*y"}),
                                           over_k<F>({"x", "y"}, {"y^3", "x^2 + y^3"})}, true);
}

CriterionResult criterion5() {
  Tally t;
  presentation_corpus<F2>(t);
  presentation_corpus<F3>(t);
  presentation_corpus<Rational>(t);
  // u^2 - v^2 is a node only away from characteristic 2.
  presentations<F3>(t, "node as u^2 - v^2", {over_k<F3>({"x", "y"}, {"x*y"}), over_k<F3>({"u", "v"}, {"u^2 - v^2"})}, false);
  presentations<Rational>(t, "node as u^2 - v^2", {over_k<Rational>({"x", "y"}, {"x*y"}), over_k<Rational>({"u", "v"}, {"u^2 - v^2"})}, false);
  return {5, "presentation independence of T0, T1, T2", t.failures.empty() && t.cases >= 5, t.summary("algebras"), 0, 0};
}

// ------------------------------------------------------------------ 6

template <FiniteField F>
void obstruction_lifts(Tally& t) {
  for (const auto& c : deformation_cases()) {
    auto p = build_problem<F>(c);
    for (std::uint64_t s = 1; s <= 3; ++s) {
      ++t.cases;
      auto ob = obstruction_class(p, s);
      auto ob0 = obstruction_class(p, 0);
      if (!ob.lifts_agree || !(ob.class_coordinates == ob0.class_coordinates) || ob.zero != ob0.zero)
        t.fail(FieldTraits<F>::name() + " " + c.name + ": lifts disagree for seed " + std::to_string(s));
    }
  }
}

template <FiniteField F>
void section_choices(Tally& t, std::mt19937_64& rng) {
  std::vector<std::pair<PresentedAlgebra<F>, unsigned>> algs{{over_k<F>({"x"}, {"x^2"}), 0},
                                                             {over_k<F>({"x", "y"}, {"x^2", "x*y", "y^2"}), 0},
                                                             {over_k<F>({"x", "y"}, {"x*y"}), 4},
                                                             {algebra<F>({"t"}, {"t^2"}, {"x"}, {"x^2", "t*x"}), 0}};
  for (const auto& [b, d] : algs) {
    auto j = residue_module(b);
    auto ls = build_ls(b);
    auto c = cochains(ls, j);
    for (const auto& cl : exal_classify(ls, j, d).classes) {
      ++t.cases;
      std::vector<Vector<F>> shift;
      for (std::size_t i = 0; i < b.nrelative(); ++i) {
        Vector<F> v(j.dim());
        for (Index k = 0; k < j.dim(); ++k) v(k) = FieldTraits<F>::random(rng);
        shift.push_back(v);
      }
      Vector<F> a = cocycle_from_extension(cl.extension), s = cocycle_from_extension(cl.extension, shift);
      if (!is_coboundary(c, CohomologyClass<F>{1, Vector<F>(a - s)})) t.fail(FieldTraits<F>::name() + ": section choice changed the class");
    }
  }
}

void determinism(Tally& t, std::mt19937_64& rng) {
  using json = nlohmann::ordered_json;
  const std::vector<std::vector<std::string>> ideals{
      {"x^2", "x*y", "y^2"}, {"x*y"}, {"x^2", "y^3"}, {"x^3 + y^2", "x*y^2", "y^4"}, {"x^2 - y", "y^2"}, {"x*y - z", "x^2", "z^2"}};
  for (const auto& rel : ideals) {
    std::vector<std::string> vars{"x", "y", "z"};
    std::vector<std::string> order = rel;
    std::string first;
    for (int round = 0; round < 4; ++round) {
      ++t.cases;
      json doc = {{"field", "F3"},
                  {"algebras", {{"B", {{"vars", vars}, {"relations", order}}}}},
                  {"modules", {{"k", {{"algebra", "B"}, {"residue", true}}}}},
                  {"problems", json::array({{{"kind", "tmods"}, {"algebra", "B"}, {"module", "k"}}})}};
      auto r = run_problems("tmods", doc, RunOptions{});
      auto b = over_k<F3>(vars, order);
      std::string gb;
      for (const auto& g : b.ideal_basis().elements) gb += to_string(g, b.names(), b.order()) + ";";
      std::string now = r.report.dump() + "|" + gb;
      if (round == 0)
        first = now;
      else if (now != first)
        t.fail("report changed under a permutation of the relations");
      std::shuffle(order.begin(), order.end(), rng);
    }
  }
  for (int trial = 0; trial < 20; ++trial) {
    ++t.cases;
    Matrix<F5> m(5, 6);
    for (Index i = 0; i < m.rows(); ++i)
      for (Index k = 0; k < m.cols(); ++k) m(i, k) = FieldTraits<F5>::random(rng) * FieldTraits<F5>::random(rng);
    std::vector<Index> perm{0, 1, 2, 3, 4};
    std::shuffle(perm.begin(), perm.end(), rng);
    Matrix<F5> p(5, 6);
    for (Index i = 0; i < 5; ++i) p.row(i) = m.row(perm[static_cast<std::size_t>(i)]);
    auto a = rref(m), b = rref(p);
    if (!(a.reduced == b.reduced) || a.pivots != b.pivots) t.fail("rref depends on row order");
  }
}

CriterionResult criterion6(std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed + 17);
  obstruction_lifts<F2>(t);
  obstruction_lifts<F3>(t);
  section_choices<F2>(t, rng);
  section_choices<F3>(t, rng);
  determinism(t, rng);
  return {6, "integrity: relation lifts, sections, determinism", t.failures.empty(), t.summary("checks"), 0, 0};
}

// ------------------------------------------------------------------ 7

CriterionResult criterion7() {
  Tally t;
  std::string dims;
  auto check = [&](const std::string& name, const std::vector<std::string>& vars, const std::vector<std::string>& f, unsigned d) {
    ++t.cases;
    auto q = over_k<Rational>(vars, f);
    Index t1 = t_module(q, residue_module(q), 1).dim;
    dims += (dims.empty() ? "" : ",") + std::to_string(t1);
    if (t1 != 1) t.fail(name + " over Q: dim T1 = " + std::to_string(t1));
    auto b2 = over_k<F2>(vars, f);
    auto b3 = over_k<F3>(vars, f);
    auto o2 = enumerate_deformations(exal_search(b2, residue_module(b2), choose_truncation(b2, residue_module(b2), d)));
    auto o3 = enumerate_deformations(exal_search(b3, residue_module(b3), choose_truncation(b3, residue_module(b3), d)));
    if (o2.representatives.size() != 2 || o3.representatives.size() != 3) t.fail(name + ": finite-field oracles disagree");
  };
  check("k[x]/(x^2)", {"x"}, {"x^2"}, 0);
  check("k[x,y]/(xy)", {"x", "y"}, {"x*y"}, 4);
  return {7, "rational regime: dim T1 = 1", t.failures.empty(), "dim T1 = " + dims + "; " + t.summary("algebras"), 0, 0};
}

}  // namespace

std::vector<CriterionResult> run_corpus(std::uint64_t seed, const std::vector<int>& only) {
  const std::vector<std::function<CriterionResult()>> all{
      criterion1, criterion2, criterion3, [seed] { return criterion4(seed); }, criterion5,
      [seed] { return criterion6(seed); }, criterion7};
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = all[i]();
    } catch (const std::exception& e) {
      r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what(), 0, 0};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.limit_seconds = kLimits[id];
    r.passed = r.passed && r.seconds < r.limit_seconds;
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.passed ? "PASS " : "FAIL ") << r.id << "  " << r.title << ": " << r.detail << " (" << std::fixed
    << std::setprecision(2) << r.seconds << " s, limit " << std::setprecision(0) << r.limit_seconds << " s)";
  return s.str();
}

}  // namespace defcoh
