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

#ifndef DEFCOH_ALGEBRA_HPP
#define DEFCOH_ALGEBRA_HPP

/// \file algebra.hpp
/// Finitely presented algebras A -> B, finite-dimensional structure-constant
/// algebras, the truncation bridge between them, finite-dimensional modules
/// and algebra homomorphisms.

#include "defcoh/groebner.hpp"
#include "defcoh/linalg.hpp"

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace defcoh {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotFiniteDimensional : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Limits for exhaustive searches. `candidates` bounds backtracking nodes or
/// candidate tuples; `isomorphisms` bounds the group searched when
/// classifying up to isomorphism.
struct EnumerationBudget {
  std::uint64_t candidates = std::uint64_t{1} << 20;
  std::uint64_t isomorphisms = std::uint64_t{1} << 16;
};

/// B = A[x]/(f) with A = k[z]/(g). Everything is flattened over k: the
/// variables are z_0..z_{b-1} followed by x_0..x_{n-1}, and every stored
/// polynomial lives in that ring.
template <Field F>
class PresentedAlgebra {
 public:
  PresentedAlgebra() = default;
  PresentedAlgebra(std::vector<std::string> base_vars, PolyList<F> base_relations, std::vector<std::string> vars,
                   PolyList<F> relations)
      : base_vars_(std::move(base_vars)),
        vars_(std::move(vars)),
        base_relations_(std::move(base_relations)),
        relations_(std::move(relations)) {
    order_ = MonomialOrder::grevlex(nvars());
    for (const auto& p : base_relations_)
      if (p.nvars() != nvars()) throw std::invalid_argument("base relation lives in the wrong ring");
    for (const auto& p : relations_)
      if (p.nvars() != nvars()) throw std::invalid_argument("relation lives in the wrong ring");
    for (const auto& p : base_relations_)
      for (const auto& [m, c] : p.terms())
        for (std::size_t i = nbase(); i < nvars(); ++i)
          if (m[i] != 0) throw std::invalid_argument("base relation involves a relative generator");
    base_gb_ = buchberger(base_relations_, order_, false);
    PolyList<F> all = base_relations_;
    all.insert(all.end(), relations_.begin(), relations_.end());
    gb_ = buchberger(all, order_, false);
  }

  /// k[x]/(f), no base.
  static PresentedAlgebra over_field(std::vector<std::string> vars, PolyList<F> relations) {
    return PresentedAlgebra({}, {}, std::move(vars), std::move(relations));
  }

  std::size_t nbase() const noexcept { return base_vars_.size(); }
  std::size_t nrelative() const noexcept { return vars_.size(); }
  std::size_t nvars() const noexcept { return base_vars_.size() + vars_.size(); }
  std::size_t flat(std::size_t relative) const noexcept { return nbase() + relative; }

  const std::vector<std::string>& base_vars() const noexcept { return base_vars_; }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::vector<std::string> names() const {
    std::vector<std::string> out = base_vars_;
    out.insert(out.end(), vars_.begin(), vars_.end());
    return out;
  }
  const PolyList<F>& base_relations() const noexcept { return base_relations_; }
  const PolyList<F>& relations() const noexcept { return relations_; }
  PolyList<F> all_relations() const {
    PolyList<F> all = base_relations_;
    all.insert(all.end(), relations_.begin(), relations_.end());
    return all;
  }
  const MonomialOrder& order() const noexcept { return order_; }
  const GroebnerBasis<F>& ideal_basis() const noexcept { return gb_; }
  const GroebnerBasis<F>& base_basis() const noexcept { return base_gb_; }

  Polynomial<F> variable(std::size_t flat_index) const { return Polynomial<F>::variable(nvars(), flat_index); }
  Polynomial<F> reduce(const Polynomial<F>& p) const { return normal_form(p, gb_); }
  bool is_zero_ring() const { return gb_.is_unit_ideal(); }

  long long max_relation_degree() const {
    long long d = 0;
    for (const auto& p : relations_) d = std::max(d, p.total_degree());
    for (const auto& p : base_relations_) d = std::max(d, p.total_degree());
    return d;
  }

  /// The same algebra with every monomial of degree d in the relative
  /// generators added as a relation (d = 0 returns *this).
  PresentedAlgebra truncated(unsigned d) const {
    if (d == 0) return *this;
    std::vector<std::size_t> rel(nrelative());
    for (std::size_t i = 0; i < rel.size(); ++i) rel[i] = flat(i);
    PolyList<F> extra = relations_;
    for (const auto& m : monomials_of_degree(nvars(), rel, d)) extra.push_back(Polynomial<F>::term(m, F(1)));
    return PresentedAlgebra(base_vars_, base_relations_, vars_, extra);
  }

 private:
  std::vector<std::string> base_vars_, vars_;
  PolyList<F> base_relations_, relations_;
  MonomialOrder order_;
  GroebnerBasis<F> gb_, base_gb_;
};

/// Standard monomials of a zero-dimensional ideal, ascending in the order.
/// Throws NotFiniteDimensional past `limit`.
template <Field F>
std::vector<Monomial> standard_monomials(const GroebnerBasis<F>& g, std::size_t limit = 4096) {
  const std::size_t n = g.nvars;
  if (g.is_unit_ideal()) return {};
  auto standard = [&](const Monomial& m) {
    for (const auto& l : g.leads)
      if (l.divides(m)) return false;
    return true;
  };
  std::set<Monomial> seen{Monomial(n)};
  std::deque<Monomial> queue{Monomial(n)};
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < n; ++v) {
      Monomial next = m;
      next[v] += 1;
      if (seen.count(next) || !standard(next)) continue;
      seen.insert(next);
      if (seen.size() > limit) throw NotFiniteDimensional("quotient is not finite dimensional (standard monomial count exceeds " + std::to_string(limit) + ")");
      queue.push_back(std::move(next));
    }
  }
  std::vector<Monomial> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return g.order.less(a, b); });
  return out;
}

/// Commutative algebra on a basis e_0 = 1, e_1, ..., given by the matrices
/// of multiplication by each basis element: left[i](k, j) is the e_k
/// coefficient of e_i * e_j.
template <Field F>
struct StructureAlgebra {
  std::vector<std::string> labels;
  std::vector<Matrix<F>> left;

  Index dim() const { return static_cast<Index>(left.size()); }
  Vector<F> basis(Index i) const {
    Vector<F> v = zero_vector<F>(dim());
    v(i) = F(1);
    return v;
  }
  Vector<F> unit() const { return basis(0); }
  F structure(Index i, Index j, Index k) const { return left[static_cast<std::size_t>(i)](k, j); }

  Matrix<F> multiplication(const Vector<F>& u) const {
    Matrix<F> m = zeros<F>(dim(), dim());
    for (Index i = 0; i < dim(); ++i)
      if (!is_zero(u(i))) m += u(i) * left[static_cast<std::size_t>(i)];
    return m;
  }
  Vector<F> mul(const Vector<F>& u, const Vector<F>& v) const { return multiplication(u) * v; }

  /// Builds the tables from a product rule on basis indices.
  template <class Product>
  static StructureAlgebra from_products(Index n, Product&& product, std::vector<std::string> labels = {}) {
    StructureAlgebra a;
    a.labels = std::move(labels);
    a.left.assign(static_cast<std::size_t>(n), zeros<F>(n, n));
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) a.left[static_cast<std::size_t>(i)].col(j) = product(i, j);
    return a;
  }
};

/// A finite-dimensional quotient of a presented algebra together with the
/// bridge between polynomials and coordinate vectors.
template <Field F>
struct FiniteModel {
  PresentedAlgebra<F> presentation;  // already truncated, if a bound was used
  unsigned truncation = 0;
  GroebnerBasis<F> gb;
  std::vector<Monomial> basis;
  std::map<Monomial, Index> position;
  StructureAlgebra<F> algebra;
  std::vector<Vector<F>> var_images;  // one per flattened variable

  Index dim() const { return static_cast<Index>(basis.size()); }

  Vector<F> coords(const Polynomial<F>& p) const {
    Vector<F> v = zero_vector<F>(dim());
    Polynomial<F> r = normal_form(p, gb);
    for (const auto& [m, c] : r.terms()) v(position.at(m)) = c;
    return v;
  }
  Polynomial<F> polynomial(const Vector<F>& v) const {
    Polynomial<F> p(presentation.nvars());
    for (Index i = 0; i < dim(); ++i) p.add_term(basis[static_cast<std::size_t>(i)], v(i));
    return p;
  }
  /// Image of a polynomial computed inside the structure algebra.
  Vector<F> evaluate(const Polynomial<F>& p) const {
    return defcoh::evaluate(p, var_images, algebra.unit(),
                            [&](const Vector<F>& a, const Vector<F>& b) { return algebra.mul(a, b); });
  }
};

/// B/(x)^d as a structure-constant algebra on its standard monomials. With
/// d = 0 no truncation is applied and B itself must be finite dimensional.
template <Field F>
FiniteModel<F> truncate(const PresentedAlgebra<F>& b, unsigned d, std::size_t limit = 4096) {
  FiniteModel<F> out;
  out.presentation = b.truncated(d);
  out.truncation = d;
  out.gb = out.presentation.ideal_basis();
  out.basis = standard_monomials(out.gb, limit);
  if (out.basis.empty()) throw std::invalid_argument("truncate: the algebra is the zero ring");
  for (std::size_t i = 0; i < out.basis.size(); ++i) out.position.emplace(out.basis[i], static_cast<Index>(i));
  const auto names = b.names();
  std::vector<std::string> labels;
  for (const auto& m : out.basis) labels.push_back(m.to_string(names));
  out.algebra = StructureAlgebra<F>::from_products(
      out.dim(),
      [&](Index i, Index j) {
        return out.coords(Polynomial<F>::term(out.basis[static_cast<std::size_t>(i)] * out.basis[static_cast<std::size_t>(j)], F(1)));
      },
      std::move(labels));
  for (std::size_t v = 0; v < b.nvars(); ++v) out.var_images.push_back(out.coords(b.variable(v)));
  return out;
}

/// A module finite-dimensional over k: one action matrix per generator of
/// the owning algebra (flattened variables for a presented algebra, basis
/// elements for a structure algebra).
template <Field F>
struct FiniteModule {
  std::vector<std::string> labels;
  std::vector<Matrix<F>> action;
  Index dimension = 0;

  Index dim() const { return dimension; }

  /// Action of a polynomial in the generators.
  Matrix<F> act(const Polynomial<F>& p) const {
    return evaluate(p, action, identity<F>(dimension), [](const Matrix<F>& a, const Matrix<F>& b) { return Matrix<F>(a * b); });
  }
};

/// k = B/(all generators), every generator acting as 0.
template <Field F>
FiniteModule<F> residue_module(const PresentedAlgebra<F>& b) {
  return FiniteModule<F>{{"1"}, std::vector<Matrix<F>>(b.nvars(), zeros<F>(1, 1)), 1};
}

/// B/(x)^d as a module over B.
template <Field F>
FiniteModule<F> regular_module(const FiniteModel<F>& model) {
  FiniteModule<F> j;
  j.labels = model.algebra.labels;
  j.dimension = model.dim();
  for (const auto& v : model.var_images) j.action.push_back(model.algebra.multiplication(v));
  return j;
}

/// Homomorphism of presented algebras given by the images of the source's
/// flattened variables, written in the target's flattened ring.
template <Field F>
struct AlgebraHom {
  std::shared_ptr<const PresentedAlgebra<F>> source, target;
  PolyList<F> images;

  Polynomial<F> operator()(const Polynomial<F>& p) const {
    return target->reduce(substitute(p, images, target->nvars()));
  }
};

template <Field F>
AlgebraHom<F> identity_hom(std::shared_ptr<const PresentedAlgebra<F>> b) {
  PolyList<F> images;
  for (std::size_t i = 0; i < b->nvars(); ++i) images.push_back(b->variable(i));
  return {b, b, images};
}

/// Structure-constant homomorphism: column j is the image of e_j.
template <Field F>
struct StructureHom {
  Matrix<F> map;
};

// ---------------------------------------------------------------- validate

template <Field F>
std::vector<std::string> validate(const PresentedAlgebra<F>& b, bool allow_zero_ring = false) {
  std::vector<std::string> bad;
  if (b.is_zero_ring() && !allow_zero_ring) bad.push_back("flattened ideal contains 1 (zero ring)");
  for (std::size_t j = 0; j < b.relations().size(); ++j)
    if (!b.reduce(b.relations()[j]).is_zero()) bad.push_back("relation " + std::to_string(j) + " does not reduce to 0");
  return bad;
}

template <Field F>
std::vector<std::string> validate(const StructureAlgebra<F>& a) {
  std::vector<std::string> bad;
  const Index n = a.dim();
  if (n == 0) return {"empty structure algebra"};
  for (const auto& l : a.left)
    if (l.rows() != n || l.cols() != n) return {"multiplication table has the wrong shape"};
  if (!(a.left[0] == identity<F>(n))) bad.push_back("unit law fails: e0 is not the identity");
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (!(a.left[static_cast<std::size_t>(i)].col(j) == a.left[static_cast<std::size_t>(j)].col(i)))
        bad.push_back("commutativity fails: e" + std::to_string(i) + "*e" + std::to_string(j));
  // (e_i e_j) e_k = e_i (e_j e_k) for all triples, as L(e_i e_j) = L(e_i) L(e_j).
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Matrix<F> lhs = a.multiplication(a.left[static_cast<std::size_t>(i)].col(j));
      if (!(lhs == a.left[static_cast<std::size_t>(i)] * a.left[static_cast<std::size_t>(j)]))
        bad.push_back("associativity fails at e" + std::to_string(i) + ", e" + std::to_string(j));
    }
  return bad;
}

template <Field F>
std::vector<std::string> validate(const FiniteModule<F>& j, const PresentedAlgebra<F>& b) {
  std::vector<std::string> bad;
  if (j.action.size() != b.nvars()) return {"module has " + std::to_string(j.action.size()) + " action matrices, algebra has " + std::to_string(b.nvars()) + " generators"};
  for (const auto& m : j.action)
    if (m.rows() != j.dim() || m.cols() != j.dim()) return {"action matrix has the wrong shape"};
  const auto names = b.names();
  for (std::size_t a = 0; a < j.action.size(); ++a)
    for (std::size_t c = a + 1; c < j.action.size(); ++c)
      if (!(j.action[a] * j.action[c] == j.action[c] * j.action[a]))
        bad.push_back("actions of " + names[a] + " and " + names[c] + " do not commute");
  for (const auto& r : b.all_relations())
    if (!is_zero(j.act(r))) bad.push_back("relation " + to_string(r, names) + " does not act as 0");
  return bad;
}

template <Field F>
std::vector<std::string> validate(const FiniteModule<F>& j, const StructureAlgebra<F>& a) {
  if (static_cast<Index>(j.action.size()) != a.dim()) return {"module needs one action matrix per basis element"};
  std::vector<std::string> bad;
  if (!(j.action[0] == identity<F>(j.dim()))) bad.push_back("unit does not act as the identity");
  for (Index p = 0; p < a.dim(); ++p)
    for (Index q = 0; q < a.dim(); ++q) {
      Matrix<F> expect = zeros<F>(j.dim(), j.dim());
      for (Index k = 0; k < a.dim(); ++k) expect += a.structure(p, q, k) * j.action[static_cast<std::size_t>(k)];
      if (!(j.action[static_cast<std::size_t>(p)] * j.action[static_cast<std::size_t>(q)] == expect))
        bad.push_back("action is not multiplicative at e" + std::to_string(p) + ", e" + std::to_string(q));
    }
  return bad;
}

template <Field F>
bool same_base(const PresentedAlgebra<F>& a, const PresentedAlgebra<F>& b) {
  if (a.nbase() != b.nbase()) return false;
  return a.base_basis().elements.size() == b.base_basis().elements.size() && [&] {
    std::vector<std::size_t> pos(a.nbase());
    for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = i;
    for (std::size_t i = 0; i < a.base_basis().elements.size(); ++i) {
      // Compare the base ideals inside k[z].
      auto pa = a.base_basis().elements[i];
      auto pb = b.base_basis().elements[i];
      Polynomial<F> ra(a.nbase()), rb(b.nbase());
      for (const auto& [m, c] : pa.terms()) ra.add_term(Monomial(std::vector<std::uint32_t>(m.exponents().begin(), m.exponents().begin() + static_cast<std::ptrdiff_t>(a.nbase()))), c);
      for (const auto& [m, c] : pb.terms()) rb.add_term(Monomial(std::vector<std::uint32_t>(m.exponents().begin(), m.exponents().begin() + static_cast<std::ptrdiff_t>(b.nbase()))), c);
      if (!(ra == rb)) return false;
    }
    return true;
  }();
}

template <Field F>
std::vector<std::string> validate(const AlgebraHom<F>& h) {
  std::vector<std::string> bad;
  if (!h.source || !h.target) return {"homomorphism without source or target"};
  if (h.images.size() != h.source->nvars()) return {"wrong number of generator images"};
  const auto names = h.source->names();
  for (const auto& r : h.source->all_relations())
    if (!h(r).is_zero()) bad.push_back("relation " + to_string(r, names) + " does not map to 0");
  if (h.source->nbase() > 0 && same_base(*h.source, *h.target))
    for (std::size_t i = 0; i < h.source->nbase(); ++i)
      if (!(h.target->reduce(h.images[i]) == h.target->reduce(h.target->variable(i))))
        bad.push_back("base generator " + names[i] + " is not sent to itself");
  return bad;
}

template <Field F>
std::vector<std::string> validate(const StructureHom<F>& h, const StructureAlgebra<F>& b, const StructureAlgebra<F>& c) {
  if (h.map.rows() != c.dim() || h.map.cols() != b.dim()) return {"hom matrix has the wrong shape"};
  std::vector<std::string> bad;
  if (!(Vector<F>(h.map.col(0)) == c.unit())) bad.push_back("unit is not preserved");
  for (Index i = 0; i < b.dim(); ++i)
    for (Index j = i; j < b.dim(); ++j)
      if (!(h.map * b.left[static_cast<std::size_t>(i)].col(j) == c.mul(h.map.col(i), h.map.col(j))))
        bad.push_back("not multiplicative at e" + std::to_string(i) + ", e" + std::to_string(j));
  return bad;
}

/// f o g : source(g) -> target(f).
template <Field F>
AlgebraHom<F> compose(const AlgebraHom<F>& f, const AlgebraHom<F>& g) {
  if (g.target.get() != f.source.get() &&
      !(g.target->names() == f.source->names() && g.target->all_relations() == f.source->all_relations()))
    throw std::invalid_argument("compose: target of the inner map is not the source of the outer map");
  AlgebraHom<F> out{g.source, f.target, {}};
  for (const auto& img : g.images) out.images.push_back(f(img));
  if (!validate(out).empty()) throw std::logic_error("composite failed validation");
  return out;
}

// ---------------------------------------------------------- enumeration

/// Products of generators spanning a structure algebra: `words[i]` is the
/// exponent vector of the i-th basis word and `matrix` has those words'
/// vectors as columns (invertible).
template <Field F>
struct WordBasis {
  std::vector<Vector<F>> generators;
  std::vector<std::vector<std::uint32_t>> words;
  Matrix<F> matrix;
};

template <Field F>
WordBasis<F> word_basis(const StructureAlgebra<F>& a, std::vector<Vector<F>> generators) {
  const Index n = a.dim();
  WordBasis<F> wb;
  std::vector<Vector<F>> vecs;
  auto independent = [&](const Vector<F>& v) {
    Matrix<F> m(n, static_cast<Index>(vecs.size()) + 1);
    for (std::size_t i = 0; i < vecs.size(); ++i) m.col(static_cast<Index>(i)) = vecs[i];
    m.col(static_cast<Index>(vecs.size())) = v;
    return rank(m) == static_cast<Index>(vecs.size()) + 1;
  };
  auto close = [&] {
    wb.words.clear();
    vecs.clear();
    std::deque<std::pair<std::vector<std::uint32_t>, Vector<F>>> queue;
    wb.words.push_back(std::vector<std::uint32_t>(generators.size(), 0));
    vecs.push_back(a.unit());
    queue.emplace_back(wb.words.back(), vecs.back());
    while (!queue.empty()) {
      auto [w, v] = queue.front();
      queue.pop_front();
      for (std::size_t g = 0; g < generators.size(); ++g) {
        Vector<F> next = a.mul(v, generators[g]);
        if (!independent(next)) continue;
        auto nw = w;
        nw[g] += 1;
        wb.words.push_back(nw);
        vecs.push_back(next);
        queue.emplace_back(nw, next);
      }
    }
  };
  close();
  for (Index i = 1; i < n && static_cast<Index>(vecs.size()) < n; ++i) {
    if (!independent(a.basis(i))) continue;
    generators.push_back(a.basis(i));
    close();
  }
  if (static_cast<Index>(vecs.size()) != n) throw std::logic_error("word basis does not span");
  wb.generators = std::move(generators);
  wb.matrix = Matrix<F>(n, n);
  for (Index i = 0; i < n; ++i) wb.matrix.col(i) = vecs[static_cast<std::size_t>(i)];
  return wb;
}

template <Field F>
Matrix<F> inverse(const Matrix<F>& m) {
  const Index n = m.rows();
  Matrix<F> aug = hstack<F>({m, identity<F>(n)}, n);
  auto e = rref(aug);
  if (e.rank() < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1) throw std::domain_error("matrix is singular");
  return e.reduced.rightCols(n);
}

/// Every vector of F^n, in lexicographic index order.
template <FiniteField F>
Vector<F> vector_from_index(std::uint64_t idx, Index n) {
  Vector<F> v(n);
  for (Index i = 0; i < n; ++i) {
    v(i) = FieldTraits<F>::from_index(idx % FieldTraits<F>::order);
    idx /= FieldTraits<F>::order;
  }
  return v;
}

template <FiniteField F>
std::uint64_t vector_count(Index n, std::uint64_t cap) {
  std::uint64_t c = 1;
  for (Index i = 0; i < n; ++i) {
    if (c > cap / FieldTraits<F>::order) return cap + 1;
    c *= FieldTraits<F>::order;
  }
  return c;
}

/// All unital homomorphisms B -> C, by enumerating images of a generating
/// set of B (the given one, or a greedy one drawn from the basis).
template <FiniteField F>
std::vector<StructureHom<F>> hom_enumerate(const StructureAlgebra<F>& b, const StructureAlgebra<F>& c,
                                           std::vector<Vector<F>> generators = {},
                                           const EnumerationBudget& budget = {}) {
  WordBasis<F> wb = word_basis(b, std::move(generators));
  const std::size_t g = wb.generators.size();
  const std::uint64_t total = vector_count<F>(c.dim() * static_cast<Index>(g), budget.candidates);
  if (total > budget.candidates)
    throw BudgetExceeded("hom_enumerate: " + std::to_string(g) + " generators into a " + std::to_string(c.dim()) +
                         "-dimensional target exceed the candidate budget");
  Matrix<F> inv = inverse(wb.matrix);
  std::vector<StructureHom<F>> out;
  for (std::uint64_t t = 0; t < total; ++t) {
    Vector<F> flat = vector_from_index<F>(t, c.dim() * static_cast<Index>(g));
    std::vector<Vector<F>> img(g);
    for (std::size_t k = 0; k < g; ++k) img[k] = flat.segment(static_cast<Index>(k) * c.dim(), c.dim());
    Matrix<F> wc(c.dim(), b.dim());
    for (std::size_t w = 0; w < wb.words.size(); ++w) {
      Vector<F> v = c.unit();
      for (std::size_t k = 0; k < g; ++k)
        for (std::uint32_t e = 0; e < wb.words[w][k]; ++e) v = c.mul(v, img[k]);
      wc.col(static_cast<Index>(w)) = v;
    }
    StructureHom<F> h{wc * inv};
    if (validate(h, b, c).empty()) out.push_back(std::move(h));
  }
  return out;
}

}  // namespace defcoh

#endif  // DEFCOH_ALGEBRA_HPP
