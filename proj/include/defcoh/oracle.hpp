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

#ifndef DEFCOH_ORACLE_HPP
#define DEFCOH_ORACLE_HPP

/// \file oracle.hpp
/// Brute-force enumeration over finite fields, independent of the complex:
/// derivations, lifts, and square-zero deformations of a finite model up to
/// isomorphism. Used to check the cohomological answers on small inputs.

#include "defcoh/deformation.hpp"

#include <set>

namespace defcoh {

namespace detail {

template <FiniteField F>
std::uint64_t vector_index(const Vector<F>& v) {
  std::uint64_t idx = 0;
  for (Index i = v.rows(); i-- > 0;) idx = idx * FieldTraits<F>::order + FieldTraits<F>::index(v(i));
  return idx;
}

template <FiniteField F>
std::uint64_t checked_count(Index n, std::uint64_t cap, const std::string& what) {
  std::uint64_t c = vector_count<F>(n, cap);
  if (c > cap) throw BudgetExceeded(what + " exceeds the enumeration budget");
  return c;
}

}  // namespace detail

/// All A-derivations B_d -> J, by enumerating generator images and testing
/// the Leibniz rule on every pair of basis monomials.
template <FiniteField F>
std::vector<Matrix<F>> enumerate_derivations(const FiniteModel<F>& model, const FiniteModule<F>& j,
                                             const EnumerationBudget& budget = {}) {
  const auto& pres = model.presentation;
  const std::size_t n = pres.nrelative(), nv = pres.nvars();
  const Index db = model.dim(), dj = j.dim();
  auto acts = basis_actions(model, j);
  const std::uint64_t total = detail::checked_count<F>(static_cast<Index>(n) * dj, budget.candidates, "derivation search");
  std::vector<Matrix<F>> out;
  for (std::uint64_t t = 0; t < total; ++t) {
    Vector<F> flat = vector_from_index<F>(t, static_cast<Index>(n) * dj);
    std::vector<Vector<F>> gen(nv, zero_vector<F>(dj));
    for (std::size_t i = 0; i < n; ++i) gen[pres.flat(i)] = flat.segment(static_cast<Index>(i) * dj, dj);
    Matrix<F> d(dj, db);
    for (Index a = 0; a < db; ++a) {
      const Monomial& m = model.basis[static_cast<std::size_t>(a)];
      Vector<F> acc = zero_vector<F>(dj);
      for (std::size_t v = 0; v < nv; ++v) {
        if (m[v] == 0 || is_zero(gen[v])) continue;
        Monomial rest = m;
        rest[v] -= 1;
        acc += F(static_cast<long long>(m[v])) * (j.act(Polynomial<F>::term(rest, F(1))) * gen[v]);
      }
      d.col(a) = acc;
    }
    bool ok = true;
    for (Index a = 0; a < db && ok; ++a)
      for (Index c = a; c < db && ok; ++c) {
        Vector<F> lhs = d * model.algebra.left[static_cast<std::size_t>(a)].col(c);
        Vector<F> rhs = acts[static_cast<std::size_t>(a)] * d.col(c) + acts[static_cast<std::size_t>(c)] * d.col(a);
        ok = lhs == rhs;
      }
    for (std::size_t z = 0; z < pres.nbase() && ok; ++z) ok = is_zero(Vector<F>(d * model.var_images[z]));
    if (ok) out.push_back(std::move(d));
  }
  return out;
}

/// Every lift of a lift problem, as images in C' of the flattened variables.
template <FiniteField F>
std::vector<std::vector<Vector<F>>> enumerate_lifts(const LiftProblem<F>& p, const EnumerationBudget& budget = {}) {
  const auto& b = p.source;
  Matrix<F> k = kernel_basis(p.projection);
  const Index dj = k.cols();
  const std::size_t n = b.nrelative();
  std::vector<Vector<F>> base = p.base_images;
  for (std::size_t i = 0; i < n; ++i) {
    auto pre = solve_affine(p.projection, p.images[b.flat(i)]);
    if (!pre) throw std::invalid_argument("generator image has no preimage");
    base.push_back(*pre);
  }
  const std::uint64_t total = detail::checked_count<F>(static_cast<Index>(n) * dj, budget.candidates, "lift search");
  auto mul = [&](const Vector<F>& a, const Vector<F>& c) { return p.extension.mul(a, c); };
  const auto rels = b.all_relations();
  std::vector<std::vector<Vector<F>>> out;
  for (std::uint64_t t = 0; t < total; ++t) {
    Vector<F> flat = vector_from_index<F>(t, static_cast<Index>(n) * dj);
    auto img = base;
    for (std::size_t i = 0; i < n; ++i) img[b.flat(i)] += k * flat.segment(static_cast<Index>(i) * dj, dj);
    bool ok = true;
    for (const auto& r : rels)
      if (!is_zero(evaluate(r, img, p.extension.unit(), mul))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(std::move(img));
  }
  return out;
}

/// What the deformation search looks for: square-zero extensions B' of B_d
/// by J in which the base generators go to (z, delta_z) with
/// g'(z~) = 0 and h_l(z~) = phi_l, and in which every degree-d monomial in
/// the lifted relative generators vanishes (d = 0 disables this).
template <FiniteField F>
struct DeformationSearch {
  FiniteModel<F> base;
  FiniteModule<F> module;
  unsigned truncation = 0;
  PolyList<F> base_lift;
  PolyList<F> base_ideal;
  std::vector<Vector<F>> phi;
};

template <FiniteField F>
struct OracleResult {
  std::vector<Extension<F>> solutions;
  std::vector<std::size_t> representatives;  // one solution index per isomorphism class
  std::uint64_t nodes = 0;
  std::uint64_t group_size = 0;
};

/// Exal search: A' = A, no ideal.
template <FiniteField F>
DeformationSearch<F> exal_search(const PresentedAlgebra<F>& b, const FiniteModule<F>& j, unsigned truncation) {
  DeformationSearch<F> s;
  s.base = truncate(b, truncation);
  s.module = j;
  s.truncation = truncation;
  s.base_lift = b.base_relations();
  return s;
}

template <FiniteField F>
DeformationSearch<F> deformation_search(const BaseDeformationProblem<F>& p, unsigned truncation) {
  DeformationSearch<F> s;
  s.base = truncate(p.algebra, truncation);
  s.module = p.module;
  s.truncation = truncation;
  s.base_lift = p.base_lift;
  s.base_ideal = p.base_ideal;
  s.phi = p.phi;
  return s;
}

/// Backtracking over the symmetric defect table c(e_a, e_b) in J, pruning
/// on associativity as soon as a triple's entries are all assigned, then
/// over the base shifts; finally groups the solutions into orbits of the
/// gauge group Hom_k(B_d / k, J).
template <FiniteField F>
OracleResult<F> enumerate_deformations(const DeformationSearch<F>& s, const EnumerationBudget& budget = {}) {
  const auto& model = s.base;
  const auto& pres = model.presentation;
  const Index db = model.dim(), dj = s.module.dim(), n = db + dj;
  const std::uint64_t jsize = detail::checked_count<F>(dj, budget.candidates, "module size");
  std::vector<Vector<F>> jvals;
  for (std::uint64_t t = 0; t < jsize; ++t) jvals.push_back(vector_from_index<F>(t, dj));
  auto acts = basis_actions(model, s.module);
  auto prod = [&](Index a, Index c) -> const Eigen::Block<const Matrix<F>, Eigen::Dynamic, 1, true> {
    return model.algebra.left[static_cast<std::size_t>(a)].col(c);
  };

  // Pair variables for 1 <= a <= c < db.
  std::vector<std::pair<Index, Index>> pairs;
  std::vector<std::vector<int>> pid(static_cast<std::size_t>(db), std::vector<int>(static_cast<std::size_t>(db), -1));
  for (Index a = 1; a < db; ++a)
    for (Index c = a; c < db; ++c) {
      pid[a][c] = pid[c][a] = static_cast<int>(pairs.size());
      pairs.emplace_back(a, c);
    }
  const std::size_t np = pairs.size();

  // Associativity triples, each attached to the last pair it depends on.
  struct Triple { Index a, b, c; };
  std::vector<std::vector<Triple>> checks(np);
  std::vector<Triple> trivial;
  for (Index a = 1; a < db; ++a)
    for (Index b = 1; b < db; ++b)
      for (Index c = 1; c < db; ++c) {
        int last = std::max(pid[a][b], pid[b][c]);
        for (Index k = 1; k < db; ++k) {
          if (!is_zero(prod(a, b)(k))) last = std::max(last, pid[k][c]);
          if (!is_zero(prod(b, c)(k))) last = std::max(last, pid[a][k]);
        }
        (last < 0 ? trivial : checks[static_cast<std::size_t>(last)]).push_back({a, b, c});
      }

  std::vector<Vector<F>> table(np, zero_vector<F>(dj));
  auto defect = [&](Index a, Index c) -> Vector<F> {
    if (a == 0 || c == 0) return zero_vector<F>(dj);
    return table[static_cast<std::size_t>(pid[a][c])];
  };
  auto associative = [&](const Triple& t) {
    Vector<F> lhs = acts[static_cast<std::size_t>(t.c)] * defect(t.a, t.b);
    Vector<F> rhs = acts[static_cast<std::size_t>(t.a)] * defect(t.b, t.c);
    for (Index k = 1; k < db; ++k) {
      if (!is_zero(prod(t.a, t.b)(k))) lhs += prod(t.a, t.b)(k) * defect(k, t.c);
      if (!is_zero(prod(t.b, t.c)(k))) rhs += prod(t.b, t.c)(k) * defect(t.a, k);
    }
    return lhs == rhs;
  };
  for (const auto& t : trivial)
    if (!associative(t)) throw std::logic_error("B_d itself is not associative");

  auto build = [&](const std::vector<Vector<F>>& shifts) {
    Extension<F> e;
    e.presentation = pres;
    e.base = model;
    e.module = s.module;
    e.algebra = StructureAlgebra<F>::from_products(n, [&](Index a, Index c) {
      Vector<F> out = zero_vector<F>(n);
      if (a >= db && c >= db) return out;
      if (a >= db || c >= db) {
        Index bi = a < db ? a : c, ji = a < db ? c : a;
        out.tail(dj) = acts[static_cast<std::size_t>(bi)].col(ji - db);
        return out;
      }
      out.head(db) = prod(a, c);
      out.tail(dj) = defect(a, c);
      return out;
    });
    for (std::size_t z = 0; z < pres.nbase(); ++z) e.base_images.push_back(e.join(model.var_images[z], shifts[z]));
    for (std::size_t i = 0; i < pres.nrelative(); ++i)
      e.lifts.push_back(e.join(model.var_images[pres.flat(i)], zero_vector<F>(dj)));
    return e;
  };
  std::vector<Monomial> top;
  if (s.truncation > 0) {
    std::vector<std::size_t> rel(pres.nrelative());
    for (std::size_t i = 0; i < rel.size(); ++i) rel[i] = pres.flat(i);
    top = monomials_of_degree(pres.nvars(), rel, s.truncation);
  }

  OracleResult<F> out;
  const std::size_t nb = pres.nbase();
  const std::uint64_t shift_total = detail::checked_count<F>(static_cast<Index>(nb) * dj, budget.candidates, "base shift search");
  auto leaf = [&] {
    Extension<F> e = build(std::vector<Vector<F>>(nb, zero_vector<F>(dj)));
    for (const auto& m : top)
      if (!is_zero(evaluate_in(e, Polynomial<F>::term(m, F(1)), {}))) return;
    for (std::uint64_t t = 0; t < shift_total; ++t) {
      if (++out.nodes > budget.candidates) throw BudgetExceeded("deformation search exceeds the node budget");
      Vector<F> flat = vector_from_index<F>(t, static_cast<Index>(nb) * dj);
      for (std::size_t z = 0; z < nb; ++z) e.base_images[z] = e.join(model.var_images[z], flat.segment(static_cast<Index>(z) * dj, dj));
      bool ok = true;
      for (const auto& g : s.base_lift)
        if (!is_zero(evaluate_in(e, g, {}))) { ok = false; break; }
      for (std::size_t l = 0; l < s.base_ideal.size() && ok; ++l)
        ok = evaluate_in(e, s.base_ideal[l], {}) == e.join(zero_vector<F>(db), s.phi[l]);
      if (ok) out.solutions.push_back(e);
    }
  };
  std::function<void(std::size_t)> search = [&](std::size_t at) {
    if (at == np) {
      leaf();
      return;
    }
    for (std::uint64_t v = 0; v < jsize; ++v) {
      if (++out.nodes > budget.candidates) throw BudgetExceeded("deformation search exceeds the node budget");
      table[at] = jvals[v];
      bool ok = true;
      for (const auto& t : checks[at])
        if (!associative(t)) { ok = false; break; }
      if (ok) search(at + 1);
    }
    table[at] = zero_vector<F>(dj);
  };
  search(0);

  // Orbits under B' -> B', (b, j) -> (b, j + D b) with D(1) = 0.
  out.group_size = detail::checked_count<F>((db - 1) * dj, budget.isomorphisms, "gauge group");
  auto key = [&](const Extension<F>& e) {
    std::vector<std::uint64_t> k;
    for (Index a = 1; a < db; ++a)
      for (Index c = a; c < db; ++c) k.push_back(detail::vector_index<F>(e.defect(a, c)));
    for (const auto& z : e.base_images) k.push_back(detail::vector_index<F>(Vector<F>(z.tail(dj))));
    return k;
  };
  std::set<std::vector<std::uint64_t>> index;
  for (const auto& e : out.solutions) index.insert(key(e));
  std::set<std::vector<std::uint64_t>> seen;
  for (std::size_t i = 0; i < out.solutions.size(); ++i) {
    const auto& e = out.solutions[i];
    auto k0 = key(e);
    if (seen.count(k0)) continue;
    out.representatives.push_back(i);
    for (std::uint64_t g = 0; g < out.group_size; ++g) {
      Vector<F> flat = vector_from_index<F>(g, (db - 1) * dj);
      Matrix<F> d = zeros<F>(dj, db);
      for (Index a = 1; a < db; ++a) d.col(a) = flat.segment((a - 1) * dj, dj);
      std::vector<std::uint64_t> k;
      for (Index a = 1; a < db; ++a)
        for (Index c = a; c < db; ++c) {
          Vector<F> v = e.defect(a, c) + d * prod(a, c) - acts[static_cast<std::size_t>(a)] * d.col(c) -
                        acts[static_cast<std::size_t>(c)] * d.col(a);
          k.push_back(detail::vector_index<F>(v));
        }
      for (std::size_t z = 0; z < nb; ++z)
        k.push_back(detail::vector_index<F>(Vector<F>(e.base_images[z].tail(dj) + d * model.var_images[z])));
      if (!index.count(k)) throw std::logic_error("gauge action leaves the solution set");
      seen.insert(std::move(k));
    }
  }
  return out;
}

}  // namespace defcoh

#endif  // DEFCOH_ORACLE_HPP
