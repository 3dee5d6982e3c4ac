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

#ifndef DEFCOH_GROEBNER_HPP
#define DEFCOH_GROEBNER_HPP

/// \file groebner.hpp
/// Division, Buchberger with cofactor tracking, ideal membership with a
/// certificate, and syzygies by Schreyer's construction.

#include "defcoh/linalg.hpp"
#include "defcoh/polynomial.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace defcoh {

template <Field F>
using PolyList = std::vector<Polynomial<F>>;

/// An element of a free module over a polynomial ring.
template <Field F>
using ModuleElement = std::vector<Polynomial<F>>;

template <Field F>
struct Division {
  PolyList<F> quotients;
  Polynomial<F> remainder;
};

/// Full multivariate division: f = sum q_i d_i + r with no term of r
/// divisible by a leading monomial of the divisors.
template <Field F>
Division<F> divide(const Polynomial<F>& f, const PolyList<F>& divisors, const MonomialOrder& order) {
  const std::size_t n = f.nvars();
  std::vector<std::pair<Monomial, F>> leads;
  leads.reserve(divisors.size());
  for (const auto& d : divisors) leads.push_back(d.leading(order));

  std::map<Monomial, F, DescendingBy> p(DescendingBy{&order});
  for (const auto& [m, c] : f.terms()) p.emplace(m, c);

  Division<F> out{PolyList<F>(divisors.size(), Polynomial<F>(n)), Polynomial<F>(n)};
  while (!p.empty()) {
    auto top = p.begin();
    const Monomial m = top->first;
    const F c = top->second;
    std::size_t hit = leads.size();
    for (std::size_t i = 0; i < leads.size(); ++i)
      if (leads[i].first.divides(m)) {
        hit = i;
        break;
      }
    if (hit == leads.size()) {
      out.remainder.add_term(m, c);
      p.erase(top);
      continue;
    }
    const Monomial t = m / leads[hit].first;
    const F q = c / leads[hit].second;
    out.quotients[hit].add_term(t, q);
    for (const auto& [dm, dc] : divisors[hit].terms()) {
      auto [it, fresh] = p.try_emplace(dm * t, F(0));
      it->second -= q * dc;
      if (is_zero(it->second)) p.erase(it);
    }
  }
  return out;
}

/// Reduced Groebner basis together with the transformation from the input
/// generators: elements[i] = sum_j cofactors[i][j] * inputs[j].
template <Field F>
struct GroebnerBasis {
  MonomialOrder order;
  std::size_t nvars = 0;
  PolyList<F> inputs;
  PolyList<F> elements;
  std::vector<PolyList<F>> cofactors;
  std::vector<Monomial> leads;

  std::size_t size() const { return elements.size(); }
  bool is_unit_ideal() const { return elements.size() == 1 && leads[0].is_one(); }
  bool has_cofactors() const { return cofactors.size() == elements.size(); }
};

template <Field F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& g) {
  if (g.elements.empty()) return f;
  return divide(f, g.elements, g.order).remainder;
}

namespace detail {

template <Field F>
PolyList<F> combine(const PolyList<F>& weights, const std::vector<PolyList<F>>& rows, std::size_t width,
                    std::size_t nvars) {
  PolyList<F> out(width, Polynomial<F>(nvars));
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].is_zero()) continue;
    for (std::size_t j = 0; j < width; ++j)
      if (!rows[i][j].is_zero()) out[j] += weights[i] * rows[i][j];
  }
  return out;
}

template <Field F>
void axpy(PolyList<F>& y, const Polynomial<F>& a, const PolyList<F>& x) {
  for (std::size_t j = 0; j < y.size(); ++j)
    if (!x[j].is_zero()) y[j] += a * x[j];
}

}  // namespace detail

/// Buchberger's algorithm with the normal selection strategy, the product
/// criterion and the chain criterion. The reduced basis is sorted by
/// increasing leading monomial, so it depends only on the ideal and order.
template <Field F>
GroebnerBasis<F> buchberger(const PolyList<F>& gens, const MonomialOrder& order, bool track = true) {
  GroebnerBasis<F> gb;
  gb.order = order;
  gb.nvars = order.nvars();
  gb.inputs = gens;
  const std::size_t n = gb.nvars, m = gens.size();
  for (const auto& g : gens)
    if (g.nvars() != n) throw std::invalid_argument("generator lives in the wrong ring");

  PolyList<F> basis;
  std::vector<Monomial> lm;
  std::vector<PolyList<F>> cof;
  auto unit_row = [&](std::size_t j, const F& c) {
    PolyList<F> row(track ? m : 0, Polynomial<F>(n));
    if (track) row[j] = Polynomial<F>::constant(n, c);
    return row;
  };

  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add = [&](Polynomial<F> g, PolyList<F> c) {
    F inv = F(1) / g.leading(order).second;
    g *= inv;
    for (auto& x : c) x *= inv;
    for (std::size_t k = 0; k < basis.size(); ++k) pending.emplace(k, basis.size());
    lm.push_back(g.leading_monomial(order));
    basis.push_back(std::move(g));
    cof.push_back(std::move(c));
  };

  // Reduce against the current basis, keeping the transformation up to date.
  auto reduce = [&](Polynomial<F> f, PolyList<F> c) {
    if (basis.empty()) return std::make_pair(std::move(f), std::move(c));
    auto d = divide(f, basis, order);
    if (track)
      for (std::size_t k = 0; k < basis.size(); ++k)
        if (!d.quotients[k].is_zero()) detail::axpy(c, -d.quotients[k], cof[k]);
    return std::make_pair(std::move(d.remainder), std::move(c));
  };

  for (std::size_t j = 0; j < m; ++j) {
    if (gens[j].is_zero()) continue;
    auto [r, c] = reduce(gens[j], unit_row(j, F(1)));
    if (!r.is_zero()) add(std::move(r), std::move(c));
  }

  while (!pending.empty()) {
    auto pick = pending.begin();
    Monomial best = lcm(lm[pick->first], lm[pick->second]);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = lcm(lm[it->first], lm[it->second]);
      if (order.compare(l, best) < 0) {
        best = std::move(l);
        pick = it;
      }
    }
    const auto [i, j] = *pick;
    pending.erase(pick);

    if (gcd(lm[i], lm[j]).is_one()) continue;
    bool chained = false;
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == i || k == j || !lm[k].divides(best)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      chained = !pending.count(key(i, k)) && !pending.count(key(j, k));
    }
    if (chained) continue;

    const Monomial ti = best / lm[i], tj = best / lm[j];
    Polynomial<F> s = basis[i].times_term(ti, F(1)) - basis[j].times_term(tj, F(1));
    PolyList<F> c(track ? m : 0, Polynomial<F>(n));
    if (track) {
      detail::axpy(c, Polynomial<F>::term(ti, F(1)), cof[i]);
      detail::axpy(c, Polynomial<F>::term(tj, F(-1)), cof[j]);
    }
    auto [r, rc] = reduce(std::move(s), std::move(c));
    if (!r.is_zero()) add(std::move(r), std::move(rc));
  }

  // Minimalize: ascending leading monomials, drop anything divisible by a
  // kept lead.
  std::vector<std::size_t> idx(basis.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return order.less(lm[a], lm[b]); });
  std::vector<std::size_t> kept;
  for (std::size_t k : idx) {
    bool redundant = false;
    for (std::size_t q : kept)
      if (lm[q].divides(lm[k])) redundant = true;
    if (!redundant) kept.push_back(k);
  }

  for (std::size_t a = 0; a < kept.size(); ++a) {
    PolyList<F> others;
    std::vector<std::size_t> who;
    for (std::size_t b = 0; b < kept.size(); ++b)
      if (b != a) {
        others.push_back(basis[kept[b]]);
        who.push_back(kept[b]);
      }
    const std::size_t me = kept[a];
    if (others.empty()) continue;
    auto d = divide(basis[me], others, order);
    if (track)
      for (std::size_t q = 0; q < others.size(); ++q)
        if (!d.quotients[q].is_zero()) detail::axpy(cof[me], -d.quotients[q], cof[who[q]]);
    basis[me] = std::move(d.remainder);
  }

  for (std::size_t k : kept) {
    F inv = F(1) / basis[k].leading(order).second;
    gb.elements.push_back(basis[k] * inv);
    gb.leads.push_back(lm[k]);
    if (track) {
      PolyList<F> row = cof[k];
      for (auto& x : row) x *= inv;
      gb.cofactors.push_back(std::move(row));
    }
  }
  return gb;
}

template <Field F>
GroebnerBasis<F> buchberger(const PolyList<F>& gens) {
  if (gens.empty()) throw std::invalid_argument("buchberger: no generators");
  return buchberger(gens, MonomialOrder::grevlex(gens.front().nvars()));
}

/// f - remainder written in the input generators of g.
template <Field F>
std::pair<Polynomial<F>, PolyList<F>> reduce_with_cofactors(const Polynomial<F>& f, const GroebnerBasis<F>& g) {
  if (!g.has_cofactors()) throw std::logic_error("Groebner basis was computed without cofactors");
  const std::size_t n = f.nvars(), m = g.inputs.size();
  if (g.elements.empty()) return {f, PolyList<F>(m, Polynomial<F>(n))};
  auto d = divide(f, g.elements, g.order);
  return {d.remainder, detail::combine(d.quotients, g.cofactors, m, n)};
}

template <Field F>
struct Membership {
  bool member = false;
  PolyList<F> cofactors;  // f = sum cofactors[i] * gens[i] when member
};

template <Field F>
Membership<F> ideal_member(const Polynomial<F>& f, const GroebnerBasis<F>& g) {
  auto [r, h] = reduce_with_cofactors(f, g);
  if (!r.is_zero()) return {};
  Polynomial<F> check(f.nvars());
  for (std::size_t i = 0; i < h.size(); ++i) check += h[i] * g.inputs[i];
  if (!(check == f)) throw std::logic_error("ideal membership certificate failed to expand");
  return {true, std::move(h)};
}

template <Field F>
Membership<F> ideal_member(const Polynomial<F>& f, const PolyList<F>& gens, const MonomialOrder& order) {
  return ideal_member(f, buchberger(gens, order));
}

template <Field F>
Membership<F> ideal_member(const Polynomial<F>& f, const PolyList<F>& gens) {
  return ideal_member(f, gens, MonomialOrder::grevlex(f.nvars()));
}

template <Field F>
struct SyzygyMatrix {
  std::size_t rank = 0;                    // number of generators
  std::vector<ModuleElement<F>> columns;   // each of length `rank`
};

template <Field F>
long long degree(const ModuleElement<F>& v) {
  long long d = -1;
  for (const auto& p : v) d = std::max(d, p.total_degree());
  return d;
}

template <Field F>
bool is_zero(const ModuleElement<F>& v) {
  return std::all_of(v.begin(), v.end(), [](const Polynomial<F>& p) { return p.is_zero(); });
}

template <Field F>
Polynomial<F> dot(const ModuleElement<F>& v, const PolyList<F>& gens) {
  Polynomial<F> s(gens.empty() ? 0 : gens.front().nvars());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s += v[i] * gens[i];
  return s;
}

namespace detail {

// Deterministic total order on module elements: by degree, then size, then
// terms in storage order.
template <Field F>
bool module_less(const ModuleElement<F>& a, const ModuleElement<F>& b) {
  auto da = degree(a), db = degree(b);
  if (da != db) return da < db;
  std::size_t sa = 0, sb = 0;
  for (const auto& p : a) sa += p.size();
  for (const auto& p : b) sb += p.size();
  if (sa != sb) return sa < sb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].terms() == b[i].terms()) continue;
    return std::lexicographical_compare(
        a[i].terms().begin(), a[i].terms().end(), b[i].terms().begin(), b[i].terms().end(),
        [](const auto& x, const auto& y) {
          if (x.first != y.first) return x.first < y.first;
          return x.second < y.second;
        });
  }
  return false;
}

template <Field F>
ModuleElement<F> normalize(ModuleElement<F> v, const MonomialOrder& order) {
  for (const auto& p : v)
    if (!p.is_zero()) {
      F inv = F(1) / p.leading(order).second;
      for (auto& q : v) q *= inv;
      break;
    }
  return v;
}

}  // namespace detail

/// Drops columns lying in the span of monomial multiples of the columns
/// kept before them (and of `ambient` times basis vectors), searched up to
/// the candidate's own degree. A span hit proves redundancy; a miss keeps
/// the column, so generation is never lost.
template <Field F>
std::vector<ModuleElement<F>> prune_module(std::vector<ModuleElement<F>> cols, std::size_t nvars,
                                           const MonomialOrder& order, const PolyList<F>& ambient = {},
                                           std::size_t max_columns = 6000) {
  for (auto& c : cols) c = detail::normalize(std::move(c), order);
  std::erase_if(cols, [](const ModuleElement<F>& c) { return is_zero(c); });
  std::sort(cols.begin(), cols.end(), detail::module_less<F>);
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  if (cols.empty()) return cols;
  const std::size_t width = cols.front().size();

  std::vector<ModuleElement<F>> kept;
  for (auto& cand : cols) {
    const long long dmax = degree(cand);
    std::vector<ModuleElement<F>> spanning;
    auto add_multiples = [&](const ModuleElement<F>& w) {
      long long dw = degree(w);
      for (long long e = 0; e + dw <= dmax; ++e)
        for (const auto& mu : monomials_of_degree(nvars, static_cast<std::uint32_t>(e))) {
          ModuleElement<F> v(width, Polynomial<F>(nvars));
          for (std::size_t i = 0; i < width; ++i) v[i] = w[i].times_term(mu, F(1));
          spanning.push_back(std::move(v));
        }
    };
    for (const auto& w : kept) add_multiples(w);
    for (const auto& a : ambient)
      for (std::size_t i = 0; i < width; ++i) {
        ModuleElement<F> w(width, Polynomial<F>(nvars));
        w[i] = a;
        add_multiples(w);
      }
    if (spanning.empty() || spanning.size() > max_columns) {
      kept.push_back(std::move(cand));
      continue;
    }
    std::map<std::pair<std::size_t, Monomial>, Index> coord;
    auto index_of = [&](std::size_t i, const Monomial& mo) {
      auto [it, fresh] = coord.try_emplace({i, mo}, static_cast<Index>(coord.size()));
      return it->second;
    };
    for (std::size_t i = 0; i < width; ++i)
      for (const auto& [mo, c] : cand[i].terms()) index_of(i, mo);
    std::vector<std::vector<std::pair<Index, F>>> sparse;
    for (const auto& v : spanning) {
      std::vector<std::pair<Index, F>> entries;
      for (std::size_t i = 0; i < width; ++i)
        for (const auto& [mo, c] : v[i].terms()) entries.emplace_back(index_of(i, mo), c);
      sparse.push_back(std::move(entries));
    }
    Matrix<F> a = zeros<F>(static_cast<Index>(coord.size()), static_cast<Index>(spanning.size()));
    for (std::size_t k = 0; k < sparse.size(); ++k)
      for (const auto& [r, c] : sparse[k]) a(r, static_cast<Index>(k)) = c;
    Vector<F> b = zero_vector<F>(a.rows());
    for (std::size_t i = 0; i < width; ++i)
      for (const auto& [mo, c] : cand[i].terms()) b(coord.at({i, mo})) = c;
    if (!solve_affine(a, b)) kept.push_back(std::move(cand));
  }
  return kept;
}

/// Generators of the syzygy module of `gens`: Schreyer syzygies of the
/// reduced basis, pulled back through the recorded transformation, plus
/// the rows of (I - QT) that account for the change of generators.
template <Field F>
SyzygyMatrix<F> syzygy_basis(const PolyList<F>& gens, const MonomialOrder& order, bool prune = true) {
  const std::size_t m = gens.size();
  if (m == 0) throw std::invalid_argument("syzygy_basis: no generators");
  const std::size_t n = order.nvars();
  GroebnerBasis<F> g = buchberger(gens, order, true);
  const std::size_t t = g.size();

  std::vector<ModuleElement<F>> out;
  for (std::size_t a = 0; a < t; ++a)
    for (std::size_t b = a + 1; b < t; ++b) {
      Monomial l = lcm(g.leads[a], g.leads[b]);
      Monomial ta = l / g.leads[a], tb = l / g.leads[b];
      Polynomial<F> s = g.elements[a].times_term(ta, F(1)) - g.elements[b].times_term(tb, F(1));
      auto d = divide(s, g.elements, order);
      if (!d.remainder.is_zero()) throw std::logic_error("S-polynomial does not reduce to zero");
      PolyList<F> sigma(t, Polynomial<F>(n));
      for (std::size_t k = 0; k < t; ++k) sigma[k] = -d.quotients[k];
      sigma[a] += Polynomial<F>::term(ta, F(1));
      sigma[b] -= Polynomial<F>::term(tb, F(1));
      out.push_back(detail::combine(sigma, g.cofactors, m, n));
    }
  for (std::size_t j = 0; j < m; ++j) {
    ModuleElement<F> row(m, Polynomial<F>(n));
    row[j] = Polynomial<F>::constant(n, F(1));
    if (t > 0 && !gens[j].is_zero()) {
      auto d = divide(gens[j], g.elements, order);
      if (!d.remainder.is_zero()) throw std::logic_error("generator does not reduce to zero");
      detail::axpy(row, Polynomial<F>::constant(n, F(-1)), detail::combine(d.quotients, g.cofactors, m, n));
    }
    out.push_back(std::move(row));
  }
  for (const auto& col : out)
    if (!dot(col, gens).is_zero()) throw std::logic_error("syzygy does not annihilate the generators");

  SyzygyMatrix<F> res;
  res.rank = m;
  if (prune) {
    res.columns = prune_module(std::move(out), n, order);
  } else {
    for (auto& c : out) c = detail::normalize(std::move(c), order);
    std::erase_if(out, [](const ModuleElement<F>& c) { return is_zero(c); });
    std::sort(out.begin(), out.end(), detail::module_less<F>);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    res.columns = std::move(out);
  }
  return res;
}

template <Field F>
SyzygyMatrix<F> syzygy_basis(const PolyList<F>& gens) {
  if (gens.empty()) throw std::invalid_argument("syzygy_basis: no generators");
  return syzygy_basis(gens, MonomialOrder::grevlex(gens.front().nvars()));
}

/// Syzygies of `gens` over the quotient ring by `ambient`: tuples a with
/// sum a_j gens_j in (ambient), entries reduced modulo the ambient ideal.
template <Field F>
SyzygyMatrix<F> relative_syzygies(const PolyList<F>& gens, const PolyList<F>& ambient, const MonomialOrder& order,
                                  bool prune = true) {
  const std::size_t m = gens.size(), n = order.nvars();
  PolyList<F> all = gens;
  all.insert(all.end(), ambient.begin(), ambient.end());
  auto full = syzygy_basis(all, order, false);
  GroebnerBasis<F> amb = buchberger(ambient, order, false);
  std::vector<ModuleElement<F>> cols;
  for (const auto& c : full.columns) {
    ModuleElement<F> v(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(m));
    for (auto& p : v) p = normal_form(p, amb);
    cols.push_back(std::move(v));
  }
  SyzygyMatrix<F> res;
  res.rank = m;
  if (prune) {
    res.columns = prune_module(std::move(cols), n, order, amb.elements);
  } else {
    for (auto& c : cols) c = detail::normalize(std::move(c), order);
    std::erase_if(cols, [](const ModuleElement<F>& c) { return is_zero(c); });
    std::sort(cols.begin(), cols.end(), detail::module_less<F>);
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    res.columns = std::move(cols);
  }
  return res;
}

}  // namespace defcoh

#endif  // DEFCOH_GROEBNER_HPP
