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

#ifndef DEFCOH_DEFORMATION_HPP
#define DEFCOH_DEFORMATION_HPP

/// \file deformation.hpp
/// Square-zero extensions in cocycle and realized form, Baer sums both ways,
/// lifting homomorphisms along an extension, and deformations over a
/// square-zero extension of the base with their obstruction class.

#include "defcoh/ls_complex.hpp"

#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

namespace defcoh {

/// A square-zero extension 0 -> J -> B' -> B_d -> 0 realized on the space
/// B_d (+) J: coordinates [0, db) are the standard monomials of B_d, the
/// remaining dj coordinates are the basis of J. The quotient map is the
/// projection and J sits in the last block.
template <Field F>
struct Extension {
  PresentedAlgebra<F> presentation;  // B, untruncated
  FiniteModel<F> base;               // B_d
  FiniteModule<F> module;            // J
  StructureAlgebra<F> algebra;       // B'
  std::vector<Vector<F>> base_images;  // images of the base variables in B'
  std::vector<Vector<F>> lifts;        // default lifts of the relative variables

  Index db() const { return base.dim(); }
  Index dj() const { return module.dim(); }
  Vector<F> join(const Vector<F>& b, const Vector<F>& j) const {
    Vector<F> v(db() + dj());
    v.head(db()) = b;
    v.tail(dj()) = j;
    return v;
  }
  /// J-part of e_a * e_b for basis elements of B_d.
  Vector<F> defect(Index a, Index b) const {
    return algebra.left[static_cast<std::size_t>(a)].col(b).tail(dj());
  }
};

/// Action of each standard monomial of the model on J.
template <Field F>
std::vector<Matrix<F>> basis_actions(const FiniteModel<F>& model, const FiniteModule<F>& j) {
  std::vector<Matrix<F>> out;
  for (const auto& m : model.basis) out.push_back(j.act(Polynomial<F>::term(m, F(1))));
  return out;
}

/// The multiplication on B_d (+) J in which a product of standard monomials
/// picks up sum_l (cofactor_l acting on J) * values[l], from reducing the
/// product against `gens` (which must generate the ideal of B_d).
template <Field F>
Extension<F> realize(const PresentedAlgebra<F>& b, const FiniteModel<F>& model, const FiniteModule<F>& j,
                     const PolyList<F>& gens, const std::vector<Vector<F>>& values) {
  if (gens.size() != values.size()) throw std::invalid_argument("realize: one value per generator");
  auto gb = buchberger(gens, model.presentation.order(), true);
  if (!(gb.elements == model.gb.elements)) throw std::invalid_argument("realize: generators do not cut out B_d");
  Extension<F> e;
  e.presentation = b;
  e.base = model;
  e.module = j;
  const Index db = model.dim(), dj = j.dim(), n = db + dj;
  auto acts = basis_actions(model, j);
  auto image = [&](const Polynomial<F>& p) {
    Vector<F> out = zero_vector<F>(n);
    auto [rem, cof] = reduce_with_cofactors(p, gb);
    for (const auto& [m, coeff] : rem.terms()) out(model.position.at(m)) = coeff;
    for (std::size_t l = 0; l < cof.size(); ++l)
      if (!cof[l].is_zero() && !is_zero(values[l])) out.tail(dj) += j.act(cof[l]) * values[l];
    return out;
  };
  e.algebra = StructureAlgebra<F>::from_products(n, [&](Index a, Index c) {
    if (a >= db && c >= db) return zero_vector<F>(n);
    if (a >= db || c >= db) {
      Vector<F> out = zero_vector<F>(n);
      Index bi = a < db ? a : c, ji = a < db ? c : a;
      out.tail(dj) = acts[static_cast<std::size_t>(bi)].col(ji - db);
      return out;
    }
    return image(Polynomial<F>::term(model.basis[static_cast<std::size_t>(a)] * model.basis[static_cast<std::size_t>(c)], F(1)));
  });
  std::vector<std::string> labels = model.algebra.labels;
  for (Index k = 0; k < dj; ++k)
    labels.push_back("j" + std::to_string(k));
  e.algebra.labels = std::move(labels);
  for (std::size_t v = 0; v < b.nvars(); ++v)
    (v < b.nbase() ? e.base_images : e.lifts).push_back(image(b.variable(v)));
  return e;
}

/// Evaluates a polynomial in B' with base variables sent to their stored
/// images and relative generator i sent to its stored lift plus shift_i.
template <Field F>
Vector<F> evaluate_in(const Extension<F>& e, const Polynomial<F>& p, const std::vector<Vector<F>>& shift) {
  std::vector<Vector<F>> images = e.base_images;
  for (std::size_t i = 0; i < e.presentation.nrelative(); ++i) {
    Vector<F> v = e.lifts[i];
    if (!shift.empty()) v.tail(e.dj()) += shift[i];
    images.push_back(std::move(v));
  }
  return evaluate(p, images, e.algebra.unit(), [&](const Vector<F>& a, const Vector<F>& b) { return e.algebra.mul(a, b); });
}

/// With `check_base`, the base relations must also hold in B'.
template <Field F>
std::vector<std::string> validate(const Extension<F>& e, bool check_base = true) {
  std::vector<std::string> bad = validate(e.algebra);
  const Index db = e.db(), dj = e.dj();
  auto acts = basis_actions(e.base, e.module);
  for (Index a = 0; a < db; ++a)
    for (Index c = 0; c < db; ++c)
      if (!(Vector<F>(e.algebra.left[static_cast<std::size_t>(a)].col(c).head(db)) ==
            Vector<F>(e.base.algebra.left[static_cast<std::size_t>(a)].col(c))))
        bad.push_back("quotient map to B is not multiplicative");
  for (Index a = db; a < db + dj; ++a)
    for (Index c = db; c < db + dj; ++c)
      if (!is_zero(e.algebra.left[static_cast<std::size_t>(a)].col(c))) bad.push_back("ideal does not square to zero");
  for (Index a = 0; a < db; ++a)
    if (!(Matrix<F>(e.algebra.left[static_cast<std::size_t>(a)].block(db, db, dj, dj)) == acts[static_cast<std::size_t>(a)]) ||
        !is_zero(e.algebra.left[static_cast<std::size_t>(a)].block(0, db, db, dj)))
      bad.push_back("B-action on the ideal does not match J");
  for (std::size_t z = 0; z < e.base_images.size(); ++z)
    if (!(Vector<F>(e.base_images[z].head(db)) == e.base.var_images[z]))
      bad.push_back("base generator image does not lift its image in B");
  for (std::size_t i = 0; i < e.lifts.size(); ++i)
    if (!(Vector<F>(e.lifts[i].head(db)) == e.base.var_images[e.presentation.flat(i)]))
      bad.push_back("generator lift does not lift its image in B");
  if (check_base)
    for (const auto& g : e.presentation.base_relations())
      if (!is_zero(evaluate_in(e, g, {}))) bad.push_back("base relation fails in the extension");
  return bad;
}

/// Default truncation bound: (max relation degree) + 2, raised if needed so
/// that (x)^(d-1) kills J.
template <Field F>
unsigned default_truncation(const PresentedAlgebra<F>& b, const FiniteModule<F>& j) {
  unsigned d = static_cast<unsigned>(b.max_relation_degree()) + 2;
  // Smallest e with every product of e relative-generator actions zero.
  std::vector<Matrix<F>> level{identity<F>(j.dim())};
  unsigned e = 0;
  while (!level.empty() && e <= 64) {
    std::vector<Matrix<F>> next;
    for (const auto& m : level)
      for (std::size_t i = 0; i < b.nrelative(); ++i) {
        Matrix<F> p = j.action[b.flat(i)] * m;
        if (!is_zero(p)) next.push_back(p);
      }
    // Keep a spanning subset only.
    std::vector<Matrix<F>> pruned;
    for (auto& m : next) {
      Matrix<F> stack(j.dim() * j.dim(), static_cast<Index>(pruned.size()) + 1);
      for (std::size_t k = 0; k < pruned.size(); ++k)
        stack.col(static_cast<Index>(k)) = Eigen::Map<const Vector<F>>(pruned[k].data(), j.dim() * j.dim());
      stack.col(static_cast<Index>(pruned.size())) = Eigen::Map<const Vector<F>>(m.data(), j.dim() * j.dim());
      if (rank(stack) == static_cast<Index>(pruned.size()) + 1) pruned.push_back(std::move(m));
    }
    level = std::move(pruned);
    ++e;
  }
  return std::max(d, e + 1);
}

/// Picks the truncation used for realized objects: 0 if B is already
/// finite dimensional, else the requested bound or the default.
template <Field F>
unsigned choose_truncation(const PresentedAlgebra<F>& b, const FiniteModule<F>& j, unsigned requested) {
  try {
    standard_monomials(b.ideal_basis(), 4096);
    return 0;
  } catch (const NotFiniteDimensional&) {
    return requested > 0 ? requested : default_truncation(b, j);
  }
}

/// Generators of the truncated ideal in the order used for cofactors:
/// base relations, relations, truncation monomials.
template <Field F>
PolyList<F> model_generators(const FiniteModel<F>& model) {
  return model.presentation.all_relations();
}

/// Realizes the cocycle phi in J^m as an extension of B_d by J.
template <Field F>
Extension<F> extension_from_cocycle(const LSComplex<F>& ls, const FiniteModule<F>& j, const Vector<F>& phi,
                                    unsigned truncation = 0) {
  const auto& b = ls.algebra;
  auto c = cochains(ls, j);
  if (phi.rows() != static_cast<Index>(ls.m()) * j.dim()) throw std::invalid_argument("cocycle has the wrong length");
  if (c.d1.rows() > 0 && !is_zero(Vector<F>(c.d1 * phi))) throw std::invalid_argument("extension_from_cocycle: not a cocycle");
  unsigned d = choose_truncation(b, j, truncation);
  FiniteModel<F> model = truncate(b, d);
  PolyList<F> gens = model_generators(model);
  std::vector<Vector<F>> values(gens.size(), zero_vector<F>(j.dim()));
  for (std::size_t k = 0; k < ls.m(); ++k) values[b.base_relations().size() + k] = phi.segment(static_cast<Index>(k) * j.dim(), j.dim());
  Extension<F> e = realize(b, model, j, gens, values);
  auto bad = validate(e);
  if (!bad.empty()) throw std::logic_error("realized extension is invalid: " + bad.front());
  return e;
}

/// Relation defects f_j(lifted generators) in J, with relative generator i
/// lifted to (x_i, shift_i).
template <Field F>
Vector<F> cocycle_from_extension(const Extension<F>& e, const std::vector<Vector<F>>& shift = {}) {
  const auto& f = e.presentation.relations();
  Vector<F> phi(static_cast<Index>(f.size()) * e.dj());
  for (std::size_t k = 0; k < f.size(); ++k) {
    Vector<F> v = evaluate_in(e, f[k], shift);
    if (!is_zero(Vector<F>(v.head(e.db())))) throw std::logic_error("relation does not vanish in B");
    phi.segment(static_cast<Index>(k) * e.dj(), e.dj()) = v.tail(e.dj());
  }
  return phi;
}

/// The linear map B -> J (as dj x db matrix, first column zero) giving an
/// isomorphism of extensions e1 -> e2, x -> x + delta(pi x), or nullopt.
template <Field F>
std::optional<Matrix<F>> extension_isomorphism(const Extension<F>& e1, const Extension<F>& e2) {
  const Index db = e1.db(), dj = e1.dj();
  if (e2.db() != db || e2.dj() != dj) return std::nullopt;
  for (Index a = 0; a < db + dj; ++a)
    for (Index c = db; c < db + dj; ++c)
      if (!(e1.algebra.left[static_cast<std::size_t>(a)].col(c) == e2.algebra.left[static_cast<std::size_t>(a)].col(c)))
        return std::nullopt;
  if (db == 1) {
    for (std::size_t z = 0; z < e1.base_images.size(); ++z)
      if (!(e1.base_images[z] == e2.base_images[z])) return std::nullopt;
    return zeros<F>(dj, 1);
  }
  // Unknowns: delta(e_1..e_{db-1}), each in J.
  const Index unknowns = (db - 1) * dj;
  std::vector<Matrix<F>> rows;
  std::vector<Vector<F>> rhs;
  auto block = [&](Index basis) { return (basis - 1) * dj; };
  for (Index a = 1; a < db; ++a)
    for (Index c = a; c < db; ++c) {
      Matrix<F> m = zeros<F>(dj, unknowns);
      Vector<F> prod = e1.base.algebra.left[static_cast<std::size_t>(a)].col(c);
      for (Index k = 1; k < db; ++k)
        if (!is_zero(prod(k))) m.block(0, block(k), dj, dj) += prod(k) * identity<F>(dj);
      m.block(0, block(c), dj, dj) -= Matrix<F>(e1.algebra.left[static_cast<std::size_t>(a)].block(db, db, dj, dj));
      m.block(0, block(a), dj, dj) -= Matrix<F>(e1.algebra.left[static_cast<std::size_t>(c)].block(db, db, dj, dj));
      rows.push_back(m);
      rhs.push_back(e2.defect(a, c) - e1.defect(a, c));
    }
  for (std::size_t z = 0; z < e1.base_images.size(); ++z) {
    Matrix<F> m = zeros<F>(dj, unknowns);
    Vector<F> zb = e1.base_images[z].head(db);
    for (Index k = 1; k < db; ++k)
      if (!is_zero(zb(k))) m.block(0, block(k), dj, dj) += zb(k) * identity<F>(dj);
    rows.push_back(m);
    rhs.push_back(e2.base_images[z].tail(dj) - e1.base_images[z].tail(dj));
    if (!(Vector<F>(e2.base_images[z].head(db)) == zb)) return std::nullopt;
  }
  Matrix<F> a(static_cast<Index>(rows.size()) * dj, unknowns);
  Vector<F> b(static_cast<Index>(rows.size()) * dj);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    a.block(static_cast<Index>(r) * dj, 0, dj, unknowns) = rows[r];
    b.segment(static_cast<Index>(r) * dj, dj) = rhs[r];
  }
  auto x = solve_affine(a, b);
  if (!x) return std::nullopt;
  Matrix<F> delta = zeros<F>(dj, db);
  for (Index k = 1; k < db; ++k) delta.col(k) = x->segment(block(k), dj);
  // Re-verify as an algebra map.
  Matrix<F> phi = identity<F>(db + dj);
  phi.block(db, 0, dj, db) = delta;
  StructureHom<F> h{phi};
  if (!validate(h, e1.algebra, e2.algebra).empty()) throw std::logic_error("extension isomorphism failed verification");
  return delta;
}

// ------------------------------------------------------------ Baer sums

/// Geometric sum (sign = +1) or difference (sign = -1): the fibered product
/// B'_1 x_B B'_2 followed by the pushout along J x J -> J, (j1, j2) -> j1 + sign j2.
template <Field F>
Extension<F> baer_geometric(const Extension<F>& e1, const Extension<F>& e2, int sign) {
  const Index db = e1.db(), dj = e1.dj();
  if (e2.db() != db || e2.dj() != dj || !(e1.base.basis == e2.base.basis) ||
      e1.module.action.size() != e2.module.action.size())
    throw std::invalid_argument("baer sum: extensions of different (B, J)");
  for (std::size_t i = 0; i < e1.module.action.size(); ++i)
    if (!(e1.module.action[i] == e2.module.action[i])) throw std::invalid_argument("baer sum: different modules J");
  const Index n1 = db + dj;
  // Fibered product coordinates (b, j1, j2) inside B'_1 x B'_2.
  auto embed = [&](const Vector<F>& v) {
    Vector<F> a = v.head(n1), c(n1);
    c.head(db) = v.head(db);
    c.tail(dj) = v.tail(dj);
    return std::make_pair(a, c);
  };
  auto fp_mul = [&](const Vector<F>& u, const Vector<F>& v) {
    auto [u1, u2] = embed(u);
    auto [v1, v2] = embed(v);
    Vector<F> p1 = e1.algebra.mul(u1, v1), p2 = e2.algebra.mul(u2, v2);
    if (!(Vector<F>(p1.head(db)) == Vector<F>(p2.head(db)))) throw std::logic_error("fibered product is not closed");
    Vector<F> out(db + 2 * dj);
    out.head(db) = p1.head(db);
    out.segment(db, dj) = p1.tail(dj);
    out.tail(dj) = p2.tail(dj);
    return out;
  };
  const F s(sign);
  auto section = [&](const Vector<F>& w) {
    Vector<F> out = zero_vector<F>(db + 2 * dj);
    out.head(db) = w.head(db);
    out.segment(db, dj) = w.tail(dj);
    return out;
  };
  auto project = [&](const Vector<F>& fp) {
    Vector<F> out(n1);
    out.head(db) = fp.head(db);
    out.tail(dj) = fp.segment(db, dj) + s * fp.tail(dj);
    return out;
  };
  Extension<F> out = e1;
  out.algebra = StructureAlgebra<F>::from_products(
      n1, [&](Index a, Index c) { return project(fp_mul(section(e1.algebra.basis(a)), section(e1.algebra.basis(c)))); },
      e1.algebra.labels);
  for (std::size_t z = 0; z < e1.base_images.size(); ++z) {
    Vector<F> fp(db + 2 * dj);
    fp.head(db) = e1.base_images[z].head(db);
    fp.segment(db, dj) = e1.base_images[z].tail(dj);
    fp.tail(dj) = e2.base_images[z].tail(dj);
    out.base_images[z] = project(fp);
  }
  for (std::size_t i = 0; i < e1.lifts.size(); ++i) {
    Vector<F> fp(db + 2 * dj);
    fp.head(db) = e1.lifts[i].head(db);
    fp.segment(db, dj) = e1.lifts[i].tail(dj);
    fp.tail(dj) = e2.lifts[i].tail(dj);
    out.lifts[i] = project(fp);
  }
  auto bad = validate(out, false);
  if (!bad.empty()) throw std::logic_error("Baer construction is invalid: " + bad.front());
  return out;
}

template <Field F>
Extension<F> baer_sum(const Extension<F>& e1, const Extension<F>& e2) { return baer_geometric(e1, e2, 1); }

template <Field F>
Extension<F> difference_extension(const Extension<F>& e1, const Extension<F>& e2) { return baer_geometric(e1, e2, -1); }

// --------------------------------------------------------- classification

template <Field F>
struct ExalClass {
  Vector<F> coordinates;  // in the representative basis of T^1
  Vector<F> cocycle;
  Extension<F> extension;
};

template <Field F>
struct ExalResult {
  TModule<F> t1;
  unsigned truncation = 0;
  std::vector<ExalClass<F>> classes;  // all classes over F_p; a basis (after 0) over Q
};

template <Field F>
ExalResult<F> exal_classify(const LSComplex<F>& ls, const FiniteModule<F>& j, unsigned truncation = 0) {
  ExalResult<F> out;
  auto c = cochains(ls, j);
  out.t1 = t_module(c, 1);
  out.truncation = choose_truncation(ls.algebra, j, truncation);
  const Index k = out.t1.dim;
  std::vector<Vector<F>> coords;
  if constexpr (FiniteField<F>) {
    std::uint64_t total = vector_count<F>(k, std::uint64_t{1} << 16);
    if (total > (std::uint64_t{1} << 16)) throw BudgetExceeded("exal_classify: too many classes to list");
    for (std::uint64_t t = 0; t < total; ++t) coords.push_back(vector_from_index<F>(t, k));
  } else {
    coords.push_back(zero_vector<F>(k));
    for (Index i = 0; i < k; ++i) {
      Vector<F> v = zero_vector<F>(k);
      v(i) = F(1);
      coords.push_back(v);
    }
  }
  for (auto& v : coords) {
    Vector<F> phi = out.t1.representatives * v;
    if (k == 0) phi = zero_vector<F>(out.t1.ambient);
    out.classes.push_back({v, phi, extension_from_cocycle(ls, j, phi, out.truncation)});
  }
  return out;
}

// ------------------------------------------------------------- lifting

/// Lift B -> C along C' -> C with square-zero kernel J. `images` are the
/// images in C of all flattened variables of B; base variables additionally
/// have fixed images in C' (the A-algebra structure of C').
template <Field F>
struct LiftProblem {
  PresentedAlgebra<F> source;
  StructureAlgebra<F> extension;   // C'
  StructureAlgebra<F> quotient;    // C
  Matrix<F> projection;            // C' -> C
  std::vector<Vector<F>> images;   // in C
  std::vector<Vector<F>> base_images;  // in C'
};

template <Field F>
std::vector<std::string> validate(const LiftProblem<F>& p) {
  std::vector<std::string> bad = validate(p.extension);
  for (auto& s : validate(p.quotient)) bad.push_back("quotient: " + s);
  if (p.projection.rows() != p.quotient.dim() || p.projection.cols() != p.extension.dim())
    return {"projection has the wrong shape"};
  for (auto& s : validate(StructureHom<F>{p.projection}, p.extension, p.quotient)) bad.push_back("projection: " + s);
  if (rank(p.projection) != p.quotient.dim()) bad.push_back("projection is not surjective");
  Matrix<F> k = kernel_basis(p.projection);
  for (Index a = 0; a < k.cols(); ++a)
    for (Index c = 0; c < k.cols(); ++c)
      if (!is_zero(p.extension.mul(k.col(a), k.col(c)))) bad.push_back("kernel does not square to zero");
  if (p.images.size() != p.source.nvars()) bad.push_back("wrong number of generator images");
  if (p.base_images.size() != p.source.nbase()) bad.push_back("wrong number of base images");
  if (!bad.empty()) return bad;
  for (std::size_t z = 0; z < p.source.nbase(); ++z)
    if (!(p.projection * p.base_images[z] == p.images[z])) bad.push_back("base image does not lift the given map");
  auto mul = [&](const Vector<F>& a, const Vector<F>& b) { return p.quotient.mul(a, b); };
  for (const auto& r : p.source.all_relations())
    if (!is_zero(evaluate(r, p.images, p.quotient.unit(), mul))) bad.push_back("the map B -> C does not kill " + to_string(r, p.source.names()));
  std::vector<Vector<F>> padded = p.base_images;
  padded.resize(p.source.nvars(), zero_vector<F>(p.extension.dim()));
  auto emul = [&](const Vector<F>& a, const Vector<F>& b) { return p.extension.mul(a, b); };
  for (const auto& g : p.source.base_relations())
    if (!is_zero(evaluate(g, padded, p.extension.unit(), emul)))
      bad.push_back("base relation fails in C'");
  return bad;
}

template <Field F>
struct LiftResult {
  bool obstructed = false;
  Matrix<F> kernel;                 // basis of J inside C'
  FiniteModule<F> module;           // J as a B-module through the given map
  Cochains<F> complex;
  Vector<F> cocycle;                // relation defects of the canonical lifts
  Vector<F> class_coordinates;      // in T^1
  std::vector<Vector<F>> particular;  // images in C' of all flattened variables
  Matrix<F> freedom;                // basis of Der_A(B, J), stacked images
};

template <Field F>
LiftResult<F> lift_homomorphism(const LiftProblem<F>& p) {
  auto bad = validate(p);
  if (!bad.empty()) throw std::invalid_argument("invalid lift problem: " + bad.front());
  const auto& b = p.source;
  LiftResult<F> out;
  out.kernel = kernel_basis(p.projection);
  const Index dj = out.kernel.cols();
  auto j_coords = [&](const Vector<F>& v) {
    auto y = solve_affine(out.kernel, v);
    if (!y) throw std::logic_error("element is not in the kernel");
    return *y;
  };
  std::vector<Vector<F>> lifts;
  for (std::size_t v = 0; v < b.nvars(); ++v) {
    if (v < b.nbase()) {
      lifts.push_back(p.base_images[v]);
      continue;
    }
    auto pre = solve_affine(p.projection, p.images[v]);
    lifts.push_back(*pre);
  }
  out.module.dimension = dj;
  for (Index k = 0; k < dj; ++k) out.module.labels.push_back("j" + std::to_string(k));
  for (const auto& l : lifts) {
    Matrix<F> act(dj, dj);
    for (Index k = 0; k < dj; ++k) act.col(k) = j_coords(p.extension.mul(l, out.kernel.col(k)));
    out.module.action.push_back(act);
  }
  auto mul = [&](const Vector<F>& a, const Vector<F>& c) { return p.extension.mul(a, c); };
  auto ls = build_ls(b);
  out.complex = cochains(ls, out.module);
  out.cocycle = Vector<F>(static_cast<Index>(ls.m()) * dj);
  for (std::size_t k = 0; k < ls.m(); ++k)
    out.cocycle.segment(static_cast<Index>(k) * dj, dj) = j_coords(evaluate(b.relations()[k], lifts, p.extension.unit(), mul));
  TModule<F> t1 = t_module(out.complex, 1);
  out.class_coordinates = class_coordinates(t1, out.cocycle);
  out.freedom = t_module(out.complex, 0).cocycles;
  auto delta = solve_affine(out.complex.d0, Vector<F>(-out.cocycle));
  if (!delta) {
    out.obstructed = true;
    return out;
  }
  out.particular = lifts;
  for (std::size_t i = 0; i < b.nrelative(); ++i)
    out.particular[b.flat(i)] += out.kernel * delta->segment(static_cast<Index>(i) * dj, dj);
  for (const auto& r : b.all_relations())
    if (!is_zero(evaluate(r, out.particular, p.extension.unit(), mul))) throw std::logic_error("lift failed verification");
  return out;
}

// ----------------------------------------------------------- deformation

/// Deform B over A = k[z]/(g) along A' = k[z]/(g') -> A with kernel
/// I = (h), given an A-linear phi: I -> J by its values on the h's.
template <Field F>
struct BaseDeformationProblem {
  PresentedAlgebra<F> algebra;
  PolyList<F> base_lift;    // g'
  PolyList<F> base_ideal;   // h
  FiniteModule<F> module;   // J over B
  std::vector<Vector<F>> phi;
};

/// Replaces A' by A'/I^2.
template <Field F>
BaseDeformationProblem<F> normalize(BaseDeformationProblem<F> p) {
  const auto& h = p.base_ideal;
  for (std::size_t a = 0; a < h.size(); ++a)
    for (std::size_t c = a; c < h.size(); ++c) p.base_lift.push_back(h[a] * h[c]);
  auto gb = buchberger(p.base_lift, p.algebra.order(), false);
  p.base_lift = gb.elements;
  return p;
}

template <Field F>
std::vector<std::string> validate(const BaseDeformationProblem<F>& p) {
  std::vector<std::string> bad = validate(p.algebra);
  for (auto& s : validate(p.module, p.algebra)) bad.push_back("module: " + s);
  if (p.phi.size() != p.base_ideal.size()) bad.push_back("phi needs one value per generator of I");
  for (const auto& v : p.phi)
    if (v.rows() != p.module.dim()) bad.push_back("phi value has the wrong length");
  if (!bad.empty()) return bad;
  const auto& order = p.algebra.order();
  PolyList<F> both = p.base_lift;
  both.insert(both.end(), p.base_ideal.begin(), p.base_ideal.end());
  if (!(buchberger(both, order, false).elements == p.algebra.base_basis().elements))
    bad.push_back("A'/I is not the base A of the algebra");
  for (const auto& q : both)
    for (const auto& [m, c] : q.terms())
      for (std::size_t i = p.algebra.nbase(); i < p.algebra.nvars(); ++i)
        if (m[i] != 0) bad.push_back("base data involves a relative generator");
  auto sq = buchberger(p.base_lift, order, false);
  for (std::size_t a = 0; a < p.base_ideal.size(); ++a)
    for (std::size_t c = a; c < p.base_ideal.size(); ++c)
      if (!normal_form(p.base_ideal[a] * p.base_ideal[c], sq).is_zero()) bad.push_back("I^2 is not zero in A' (normalize first)");
  if (!p.base_ideal.empty()) {
    auto rel = relative_syzygies(p.base_ideal, p.base_lift, order, false);
    for (const auto& col : rel.columns) {
      Vector<F> acc = zero_vector<F>(p.module.dim());
      for (std::size_t k = 0; k < col.size(); ++k) acc += p.module.act(col[k]) * p.phi[k];
      if (!is_zero(acc)) bad.push_back("phi is not well defined on I");
    }
  }
  return bad;
}

template <Field F>
struct ObstructionResult {
  Cochains<F> complex;
  TModule<F> t2;
  Vector<F> cocycle;           // in C^2 (J^r)
  Vector<F> class_coordinates; // in T^2
  bool zero = true;
  Vector<F> second_cocycle;    // from a randomized relation lift
  bool lifts_agree = true;     // difference lies in im d1
};

namespace detail {

template <Field F>
Vector<F> obstruction_cocycle(const BaseDeformationProblem<F>& p, const LSComplex<F>& ls, const PolyList<F>& lifts,
                              const std::vector<ModuleElement<F>>& syz_lifts, const GroebnerBasis<F>& base_gb) {
  const Index dj = p.module.dim();
  const std::size_t q = p.base_ideal.size(), nb = p.algebra.nbase(), nv = p.algebra.nvars();
  Vector<F> ob = zero_vector<F>(static_cast<Index>(ls.r()) * dj);
  for (std::size_t k = 0; k < ls.r(); ++k) {
    Polynomial<F> e(nv);
    for (std::size_t j = 0; j < ls.m(); ++j) e += syz_lifts[k][j] * lifts[j];
    // Group by monomials in the relative generators; each coefficient is in (g', h).
    std::map<Monomial, Polynomial<F>> by_x;
    for (const auto& [m, c] : e.terms()) {
      Monomial xs(nv), zs(nv);
      for (std::size_t i = 0; i < nv; ++i) (i < nb ? zs : xs)[i] = m[i];
      by_x.try_emplace(xs, Polynomial<F>(nv)).first->second.add_term(zs, c);
    }
    Vector<F> acc = zero_vector<F>(dj);
    for (const auto& [xs, coeff] : by_x) {
      auto cert = ideal_member(coeff, base_gb);
      if (!cert.member) throw std::logic_error("lifted syzygy does not land in I A'[x]");
      for (std::size_t l = 0; l < q; ++l)
        if (!cert.cofactors[l].is_zero())
          acc += p.module.act(cert.cofactors[l] * Polynomial<F>::term(xs, F(1))) * p.phi[l];
    }
    ob.segment(static_cast<Index>(k) * dj, dj) = acc;
  }
  return ob;
}

template <Field F>
Polynomial<F> random_small(std::mt19937_64& rng, std::size_t nv) {
  Polynomial<F> r(nv);
  for (int t = 0; t < 3; ++t) {
    auto mons = monomials_of_degree(nv, static_cast<std::uint32_t>(rng() % 2));
    r.add_term(mons[rng() % mons.size()], FieldTraits<F>::random(rng));
  }
  return r;
}

}  // namespace detail

/// The obstruction cocycle in C^2 and its class in T^2, recomputed from a
/// second, randomized lift of the relations and syzygies.
template <Field F>
ObstructionResult<F> obstruction_class(const BaseDeformationProblem<F>& p, std::uint64_t seed = 0) {
  auto bad = validate(p);
  if (!bad.empty()) throw std::invalid_argument("invalid deformation problem: " + bad.front());
  const auto& b = p.algebra;
  auto ls = build_ls(b);
  ObstructionResult<F> out;
  out.complex = cochains(ls, p.module);
  out.t2 = t_module(out.complex, 2);
  PolyList<F> ideal_gens = p.base_ideal;
  ideal_gens.insert(ideal_gens.end(), p.base_lift.begin(), p.base_lift.end());
  auto base_gb = buchberger(ideal_gens, b.order(), true);

  PolyList<F> lifts;
  for (const auto& f : b.relations()) lifts.push_back(normal_form(f, b.base_basis()));
  std::vector<ModuleElement<F>> syz = ls.syzygies;
  for (auto& col : syz)
    for (auto& s : col) s = normal_form(s, b.base_basis());
  out.cocycle = detail::obstruction_cocycle(p, ls, lifts, syz, base_gb);

  std::mt19937_64 rng(seed);
  PolyList<F> lifts2 = lifts;
  auto syz2 = syz;
  auto perturb = [&](Polynomial<F>& x) {
    for (const auto& h : p.base_ideal) x += detail::random_small<F>(rng, b.nvars()) * h;
  };
  for (auto& f : lifts2) perturb(f);
  for (auto& col : syz2)
    for (auto& s : col) perturb(s);
  out.second_cocycle = detail::obstruction_cocycle(p, ls, lifts2, syz2, base_gb);

  if (!is_cocycle(out.complex, CohomologyClass<F>{2, out.cocycle}))
    throw std::logic_error("obstruction cochain does not vanish on the relations modulo Koszul");
  out.class_coordinates = class_coordinates(out.t2, out.cocycle);
  out.zero = is_coboundary(out.complex, CohomologyClass<F>{2, out.cocycle}).has_value();
  out.lifts_agree = is_coboundary(out.complex, CohomologyClass<F>{2, Vector<F>(out.cocycle - out.second_cocycle)}).has_value();
  return out;
}

template <Field F>
struct DeformationResult {
  ObstructionResult<F> obstruction;
  unsigned truncation = 0;
  std::optional<Extension<F>> solution;
  Vector<F> psi;  // relation values used for the solution
};

/// A realized B' completing the diagram when the obstruction vanishes; the
/// optional `twist` (a 1-cocycle in J^m) moves the solution within its
/// torsor.
template <Field F>
DeformationResult<F> realize_deformation(const BaseDeformationProblem<F>& p, unsigned truncation = 0,
                                         const std::optional<Vector<std::type_identity_t<F>>>& twist = std::nullopt,
                                         std::uint64_t seed = 0) {
  DeformationResult<F> out;
  out.obstruction = obstruction_class(p, seed);
  if (!out.obstruction.zero) return out;
  const auto& b = p.algebra;
  auto w = solve_affine(out.obstruction.complex.d1, out.obstruction.cocycle);
  out.psi = *w;
  if (twist) out.psi += *twist;
  out.truncation = choose_truncation(b, p.module, truncation);
  FiniteModel<F> model = truncate(b, out.truncation);
  const Index dj = p.module.dim();
  PolyList<F> gens = p.base_lift;
  std::vector<Vector<F>> values(gens.size(), zero_vector<F>(dj));
  for (std::size_t l = 0; l < p.base_ideal.size(); ++l) {
    gens.push_back(p.base_ideal[l]);
    values.push_back(p.phi[l]);
  }
  for (std::size_t k = 0; k < b.relations().size(); ++k) {
    gens.push_back(normal_form(b.relations()[k], b.base_basis()));
    values.push_back(out.psi.segment(static_cast<Index>(k) * dj, dj));
  }
  const auto& all = model.presentation.relations();
  for (std::size_t k = b.relations().size(); k < all.size(); ++k) {
    gens.push_back(all[k]);
    values.push_back(zero_vector<F>(dj));
  }
  Extension<F> e = realize(b, model, p.module, gens, values);
  auto bad = validate(e, false);
  if (!bad.empty()) throw std::logic_error("realized deformation is invalid: " + bad.front());
  for (const auto& g : p.base_lift)
    if (!is_zero(evaluate_in(e, g, {}))) throw std::logic_error("A' relation fails in the realized deformation");
  for (std::size_t l = 0; l < p.base_ideal.size(); ++l)
    if (!(evaluate_in(e, p.base_ideal[l], {}) == e.join(zero_vector<F>(e.db()), p.phi[l])))
      throw std::logic_error("ideal map does not restrict to phi");
  out.solution = std::move(e);
  return out;
}

// ------------------------------------------------------------- torsors

struct TorsorReport {
  std::size_t group_size = 0;
  std::size_t set_size = 0;
  bool empty = false;
  bool bijection = false;
  std::string verdict;
};

/// Checks that (g, x) -> (g.x, x) is a bijection G x X -> X x X.
template <class G, class X, class Act, class Eq>
TorsorReport check_torsor_action(const std::vector<X>& set, const std::vector<G>& group, Act&& act, Eq&& eq) {
  TorsorReport r;
  r.group_size = group.size();
  r.set_size = set.size();
  if (set.empty()) {
    r.empty = true;
    r.verdict = "pseudo-torsor, empty";
    return r;
  }
  auto index_of = [&](const X& x) -> std::size_t {
    for (std::size_t i = 0; i < set.size(); ++i)
      if (eq(set[i], x)) return i;
    return set.size();
  };
  std::vector<int> hits(set.size() * set.size(), 0);
  bool closed = true;
  for (const auto& g : group)
    for (std::size_t i = 0; i < set.size(); ++i) {
      std::size_t k = index_of(act(g, set[i]));
      if (k == set.size()) {
        closed = false;
        continue;
      }
      ++hits[k * set.size() + i];
    }
  r.bijection = closed && std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
  r.verdict = r.bijection ? "torsor: action map is a bijection" : (closed ? "action is not simply transitive" : "action leaves the set");
  return r;
}

}  // namespace defcoh

#endif  // DEFCOH_DEFORMATION_HPP
