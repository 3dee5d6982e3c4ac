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

#ifndef DEFCOH_DIFFERENTIAL_HPP
#define DEFCOH_DIFFERENTIAL_HPP

/// \file differential.hpp
/// Relative derivations into a finite module, the Jacobian presentation of
/// the Kaehler differentials, and the conormal module.

#include "defcoh/algebra.hpp"

#include <string>
#include <vector>

namespace defcoh {

/// Block matrix with block (j, i) = action of a_{ji} on J.
template <Field F>
Matrix<F> block_action(const std::vector<std::vector<Polynomial<F>>>& entries, std::size_t cols,
                       const FiniteModule<F>& j) {
  const Index d = j.dim();
  Matrix<F> out = zeros<F>(static_cast<Index>(entries.size()) * d, static_cast<Index>(cols) * d);
  for (std::size_t r = 0; r < entries.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (!entries[r][c].is_zero())
        out.block(static_cast<Index>(r) * d, static_cast<Index>(c) * d, d, d) = j.act(entries[r][c]);
  return out;
}

/// Raw partial derivatives d f_j / d x_i (not reduced), m rows by n columns.
template <Field F>
std::vector<PolyList<F>> jacobian(const PresentedAlgebra<F>& b) {
  std::vector<PolyList<F>> jac;
  for (const auto& f : b.relations()) {
    PolyList<F> row;
    for (std::size_t i = 0; i < b.nrelative(); ++i) row.push_back(f.derivative(b.flat(i)));
    jac.push_back(std::move(row));
  }
  return jac;
}

/// An A-derivation B -> J, stored by the images of the relative generators
/// stacked into one vector of length n * dim J.
template <Field F>
struct Derivation {
  Vector<F> images;

  Vector<F> image(std::size_t i, Index dj) const { return images.segment(static_cast<Index>(i) * dj, dj); }
};

template <Field F>
struct DerivationSpace {
  Index dim = 0;
  Matrix<F> basis;  // columns are stacked generator images
};

/// Der_A(B, J) as the solution space of the Jacobian condition.
template <Field F>
DerivationSpace<F> derivation_space(const PresentedAlgebra<F>& b, const FiniteModule<F>& j) {
  Matrix<F> d0 = block_action(jacobian(b), b.nrelative(), j);
  Matrix<F> k = d0.rows() == 0 ? identity<F>(static_cast<Index>(b.nrelative()) * j.dim()) : kernel_basis(d0);
  return {k.cols(), k};
}

template <Field F>
std::vector<std::string> validate(const Derivation<F>& d, const PresentedAlgebra<F>& b, const FiniteModule<F>& j) {
  if (d.images.rows() != static_cast<Index>(b.nrelative()) * j.dim()) return {"derivation has the wrong number of images"};
  std::vector<std::string> bad;
  Matrix<F> d0 = block_action(jacobian(b), b.nrelative(), j);
  if (d0.rows() > 0 && !is_zero(Vector<F>(d0 * d.images))) bad.push_back("Jacobian condition fails");
  return bad;
}

/// d(p) by the Leibniz rule: sum_i (d p / d x_i) . d(x_i); base variables
/// are killed.
template <Field F>
Vector<F> apply_derivation(const Derivation<F>& d, const PresentedAlgebra<F>& b, const FiniteModule<F>& j,
                           const Polynomial<F>& p) {
  Vector<F> out = zero_vector<F>(j.dim());
  for (std::size_t i = 0; i < b.nrelative(); ++i) {
    Polynomial<F> dp = p.derivative(b.flat(i));
    if (!dp.is_zero()) out += j.act(dp) * d.image(i, j.dim());
  }
  return out;
}

/// Omega_{B/A} = coker(B^m -> B^n), entries reduced modulo the ideal of B.
template <Field F>
struct KaehlerPresentation {
  std::size_t generators = 0;              // dx_1 .. dx_n
  std::vector<PolyList<F>> relations;      // one row per relation f_j, length n
};

template <Field F>
KaehlerPresentation<F> kaehler(const PresentedAlgebra<F>& b) {
  KaehlerPresentation<F> k{b.nrelative(), {}};
  for (auto row : jacobian(b)) {
    for (auto& p : row) p = b.reduce(p);
    k.relations.push_back(std::move(row));
  }
  return k;
}

/// dim_k Hom_B(Omega, J) read off the presentation: maps dx_i -> v_i with
/// every relation row sent to 0.
template <Field F>
Index hom_dimension(const KaehlerPresentation<F>& omega, const FiniteModule<F>& j) {
  Matrix<F> m = block_action(omega.relations, omega.generators, j);
  if (m.rows() == 0) return static_cast<Index>(omega.generators) * j.dim();
  return kernel_basis(m).cols();
}

/// I/I^2 generated by [f_1]..[f_m] with relations the syzygies of the f's
/// over A[x], entries reduced modulo I.
template <Field F>
struct ConormalPresentation {
  std::size_t generators = 0;
  std::vector<ModuleElement<F>> relations;
};

template <Field F>
ConormalPresentation<F> conormal(const PresentedAlgebra<F>& b) {
  ConormalPresentation<F> c{b.relations().size(), {}};
  if (b.relations().empty()) return c;
  auto syz = relative_syzygies(b.relations(), b.base_relations(), b.order());
  for (auto col : syz.columns) {
    for (auto& p : col) p = b.reduce(p);
    if (!is_zero(col)) c.relations.push_back(std::move(col));
  }
  return c;
}

/// Each stored relation, read in P, sends the generators into I^2 + (g).
template <Field F>
std::vector<std::string> validate(const ConormalPresentation<F>& c, const PresentedAlgebra<F>& b) {
  std::vector<std::string> bad;
  PolyList<F> sq = b.base_relations();
  const auto& f = b.relations();
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t e = a; e < f.size(); ++e) sq.push_back(f[a] * f[e]);
  if (sq.empty()) return bad;
  auto gb = buchberger(sq, b.order(), false);
  for (std::size_t k = 0; k < c.relations.size(); ++k)
    if (!normal_form(dot(c.relations[k], f), gb).is_zero())
      bad.push_back("conormal relation " + std::to_string(k) + " is not annihilated modulo I^2");
  return bad;
}

}  // namespace defcoh

#endif  // DEFCOH_DIFFERENTIAL_HPP
