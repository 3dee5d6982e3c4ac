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

#ifndef DEFCOH_LS_COMPLEX_HPP
#define DEFCOH_LS_COMPLEX_HPP

/// \file ls_complex.hpp
/// The three-term cotangent complex L2 -> L1 -> L0 of a presentation
/// P = A[x] -> B and the cohomology T^0, T^1, T^2 of Hom_B(-, J).
///
/// L0 is free on dx_i, L1 free on e_j, and L2 is generated by the syzygies
/// s_k of the relations over P modulo the Koszul relations. Hom_B(L2, J) is
/// cut out of J^r by the relations among the s_k modulo Koszul, which are
/// found as syzygies in P[e_1..e_m]/(e)^2.

#include "defcoh/differential.hpp"

#include <array>
#include <string>
#include <vector>

namespace defcoh {

template <Field F>
struct LSComplex {
  PresentedAlgebra<F> algebra;
  std::vector<PolyList<F>> jacobian;        // m x n, reduced mod I
  std::vector<ModuleElement<F>> syzygies;   // r generators of Rel, entries reduced mod (g)
  std::vector<ModuleElement<F>> koszul;     // f_a e_b - f_b e_a, a < b
  std::vector<ModuleElement<F>> l2_relations;  // c in P^r with sum c_k s_k in Kos + (g)

  std::size_t n() const { return algebra.nrelative(); }
  std::size_t m() const { return algebra.relations().size(); }
  std::size_t r() const { return syzygies.size(); }
};

namespace detail {

// Relations among the columns `s` (each of length m) modulo `extra`
// (submodule generators) and (g) P^m, computed as syzygies of the linear
// forms in the extended ring with (e)^2 = 0, restricted to e = 0.
template <Field F>
std::vector<ModuleElement<F>> relations_modulo(const std::vector<ModuleElement<F>>& s,
                                               const std::vector<ModuleElement<F>>& extra, const PolyList<F>& g,
                                               std::size_t m, const MonomialOrder& order) {
  const std::size_t nv = order.nvars(), big = nv + m;
  const std::size_t r = s.size();
  std::vector<std::size_t> keep(nv);
  for (std::size_t i = 0; i < nv; ++i) keep[i] = i;
  auto lift = [&](const Polynomial<F>& p) { return p.embed(big, keep); };
  auto e = [&](std::size_t j) { return Polynomial<F>::variable(big, nv + j); };
  auto linear = [&](const ModuleElement<F>& v) {
    Polynomial<F> out(big);
    for (std::size_t j = 0; j < m; ++j)
      if (!v[j].is_zero()) out += lift(v[j]) * e(j);
    return out;
  };
  PolyList<F> list;
  for (const auto& v : s) list.push_back(linear(v));
  for (const auto& v : extra) list.push_back(linear(v));
  for (const auto& p : g) list.push_back(lift(p));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) list.push_back(e(a) * e(b));
  auto syz = syzygy_basis(list, order.extended(big), false);

  GroebnerBasis<F> ambient = buchberger(g, order, false);
  std::vector<ModuleElement<F>> out;
  for (const auto& col : syz.columns) {
    ModuleElement<F> c(r, Polynomial<F>(nv));
    for (std::size_t k = 0; k < r; ++k)
      for (const auto& [mo, coeff] : col[k].terms()) {
        bool e_free = true;
        for (std::size_t j = nv; j < big; ++j) e_free = e_free && mo[j] == 0;
        if (!e_free) continue;
        Monomial small(std::vector<std::uint32_t>(mo.exponents().begin(), mo.exponents().begin() + static_cast<std::ptrdiff_t>(nv)));
        c[k].add_term(small, coeff);
      }
    for (auto& p : c) p = normal_form(p, ambient);
    if (!is_zero(c)) out.push_back(std::move(c));
  }
  if (out.empty()) return out;
  return prune_module(std::move(out), nv, order, ambient.elements, 1500);
}

}  // namespace detail

/// Builds the complex and checks that L2 -> L1 -> L0 composes to zero.
template <Field F>
LSComplex<F> build_ls(const PresentedAlgebra<F>& b) {
  LSComplex<F> ls;
  ls.algebra = b;
  const auto& f = b.relations();
  const std::size_t m = f.size(), nv = b.nvars();
  for (auto row : jacobian(b)) {
    for (auto& p : row) p = b.reduce(p);
    ls.jacobian.push_back(std::move(row));
  }
  if (m == 0) return ls;
  ls.syzygies = relative_syzygies(f, b.base_relations(), b.order()).columns;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = a + 1; c < m; ++c) {
      ModuleElement<F> k(m, Polynomial<F>(nv));
      k[c] = f[a];
      k[a] = -f[c];
      ls.koszul.push_back(std::move(k));
    }
  for (const auto& k : ls.koszul)
    if (!dot(k, f).is_zero()) throw std::logic_error("Koszul relation is not a syzygy");
  for (const auto& s : ls.syzygies) {
    if (!b.reduce(dot(s, f)).is_zero()) throw std::logic_error("syzygy does not annihilate the relations");
    for (std::size_t i = 0; i < b.nrelative(); ++i) {
      Polynomial<F> acc(nv);
      for (std::size_t j = 0; j < m; ++j) acc += s[j] * ls.jacobian[j][i];
      if (!b.reduce(acc).is_zero()) throw std::logic_error("L2 -> L0 composite is not zero");
    }
  }
  if (!ls.syzygies.empty())
    ls.l2_relations = detail::relations_modulo(ls.syzygies, ls.koszul, b.base_relations(), m, b.order());
  return ls;
}

/// Hom(L_i, J) as explicit matrices: C0 = J^n, C1 = J^m, C2 = ker(k2) in J^r.
template <Field F>
struct Cochains {
  Index dj = 0;
  Matrix<F> d0;  // C0 -> J^m
  Matrix<F> d1;  // J^m -> J^r
  Matrix<F> k2;  // constraints on J^r defining C2
  Matrix<F> c2;  // basis of C2 (columns in J^r)
};

template <Field F>
Cochains<F> cochains(const LSComplex<F>& ls, const FiniteModule<F>& j) {
  Cochains<F> c;
  c.dj = j.dim();
  c.d0 = block_action(ls.jacobian, ls.n(), j);
  if (ls.m() == 0) c.d0 = zeros<F>(0, static_cast<Index>(ls.n()) * c.dj);
  c.d1 = block_action(ls.syzygies, ls.m(), j);
  if (ls.r() == 0) c.d1 = zeros<F>(0, static_cast<Index>(ls.m()) * c.dj);
  c.k2 = block_action(ls.l2_relations, ls.r(), j);
  if (ls.l2_relations.empty()) c.k2 = zeros<F>(0, static_cast<Index>(ls.r()) * c.dj);
  c.c2 = c.k2.rows() == 0 ? identity<F>(c.k2.cols()) : kernel_basis(c.k2);
  return c;
}

/// T^i with its cocycles, coboundaries and a basis of class
/// representatives (columns, in the coordinates of C^i).
template <Field F>
struct TModule {
  int degree = 0;
  Index dim = 0;
  Index ambient = 0;
  Matrix<F> cocycles;
  Matrix<F> coboundaries;
  Matrix<F> representatives;
};

template <Field F>
TModule<F> t_module(const Cochains<F>& c, int i) {
  TModule<F> t;
  t.degree = i;
  auto kernel = [](const Matrix<F>& m) { return m.rows() == 0 ? identity<F>(m.cols()) : kernel_basis(m); };
  switch (i) {
    case 0:
      t.ambient = c.d0.cols();
      t.cocycles = kernel(c.d0);
      t.coboundaries = zeros<F>(t.ambient, 0);
      break;
    case 1:
      t.ambient = c.d0.rows();
      t.cocycles = kernel(c.d1);
      t.coboundaries = image_basis(c.d0);
      break;
    case 2:
      t.ambient = c.d1.rows();
      t.cocycles = c.c2;
      t.coboundaries = image_basis(c.d1);
      break;
    default:
      throw std::invalid_argument("t_module: degree must be 0, 1 or 2");
  }
  t.representatives = complement_basis(t.cocycles, t.coboundaries);
  t.dim = t.representatives.cols();
  return t;
}

template <Field F>
TModule<F> t_module(const PresentedAlgebra<F>& b, const FiniteModule<F>& j, int i) {
  return t_module(cochains(build_ls(b), j), i);
}

template <Field F>
std::array<Index, 3> t_dimensions(const Cochains<F>& c) {
  return {t_module(c, 0).dim, t_module(c, 1).dim, t_module(c, 2).dim};
}

/// A cochain of degree i together with the complex it lives in.
template <Field F>
struct CohomologyClass {
  int degree = 1;
  Vector<F> cocycle;
};

template <Field F>
bool is_cocycle(const Cochains<F>& c, const CohomologyClass<F>& x) {
  switch (x.degree) {
    case 0:
      return c.d0.rows() == 0 || is_zero(Vector<F>(c.d0 * x.cocycle));
    case 1:
      return c.d1.rows() == 0 || is_zero(Vector<F>(c.d1 * x.cocycle));
    case 2:
      return c.k2.rows() == 0 || is_zero(Vector<F>(c.k2 * x.cocycle));
    default:
      return false;
  }
}

/// The witness w with d(w) = cocycle, re-verified, or nullopt.
template <Field F>
std::optional<Vector<F>> is_coboundary(const Cochains<F>& c, const CohomologyClass<F>& x) {
  if (!is_cocycle(c, x)) throw std::invalid_argument("is_coboundary: not a cocycle");
  if (x.degree == 0) {
    if (is_zero(x.cocycle)) return Vector<F>(zero_vector<F>(0));
    return std::nullopt;
  }
  const Matrix<F>& d = x.degree == 1 ? c.d0 : c.d1;
  auto w = solve_affine(d, x.cocycle);
  if (w && !(d * *w == x.cocycle)) throw std::logic_error("coboundary witness failed verification");
  return w;
}

/// Coordinates of a cocycle's class in the representative basis of T.
template <Field F>
Vector<F> class_coordinates(const TModule<F>& t, const Vector<F>& cocycle) {
  auto q = quotient_coordinates(t.coboundaries, t.representatives, cocycle);
  if (!q) throw std::invalid_argument("class_coordinates: vector is not a cocycle");
  return *q;
}

}  // namespace defcoh

#endif  // DEFCOH_LS_COMPLEX_HPP
