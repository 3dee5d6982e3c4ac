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

#ifndef DEFCOH_POLYNOMIAL_HPP
#define DEFCOH_POLYNOMIAL_HPP

#include "defcoh/field.hpp"
#include "defcoh/monomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace defcoh {

/// Sparse polynomial in a fixed number of indexed variables. Zero
/// coefficients are never stored, so the zero polynomial has no terms.
template <Field F>
class Polynomial {
 public:
  using Terms = std::map<Monomial, F>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const F& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t i) {
    Polynomial p(nvars);
    p.add_term(Monomial::variable(nvars, i), F(1));
    return p;
  }
  static Polynomial term(const Monomial& m, const F& c) {
    Polynomial p(m.size());
    p.add_term(m, c);
    return p;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

  F coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? F(0) : it->second;
  }
  F constant_term() const { return coefficient(Monomial(nvars_)); }

  void add_term(const Monomial& m, const F& c) {
    if (m.size() != nvars_) throw std::invalid_argument("monomial arity mismatch");
    if (defcoh::is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (fresh) return;
    it->second += c;
    if (defcoh::is_zero(it->second)) terms_.erase(it);
  }

  /// Total degree; -1 for the zero polynomial.
  long long total_degree() const {
    long long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long long>(m.degree()));
    return d;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const F& s) {
    if (defcoh::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const F& s) { return a *= s; }
  friend Polynomial operator*(const F& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const { return *this * F(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    Polynomial out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Product with the single term c * m.
  Polynomial times_term(const Monomial& m, const F& c) const {
    Polynomial out(nvars_);
    if (defcoh::is_zero(c)) return out;
    for (const auto& [mm, cc] : terms_) out.terms_.emplace_hint(out.terms_.end(), mm * m, cc * c);
    return out;
  }

  Polynomial pow(unsigned k) const {
    Polynomial result = constant(nvars_, F(1)), base = *this;
    while (k > 0) {
      if (k & 1u) result *= base;
      k >>= 1;
      if (k > 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  std::pair<Monomial, F> leading(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
      if (order.compare(it->first, best->first) > 0) best = it;
    return *best;
  }
  Monomial leading_monomial(const MonomialOrder& order) const { return leading(order).first; }

  /// Scaled so that the leading coefficient is 1 (zero stays zero).
  Polynomial monic(const MonomialOrder& order) const {
    if (terms_.empty()) return *this;
    return *this * (F(1) / leading(order).second);
  }

  Polynomial derivative(std::size_t i) const {
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m[i] == 0) continue;
      Monomial d = m;
      d[i] -= 1;
      out.add_term(d, c * F(static_cast<long long>(m[i])));
    }
    return out;
  }

  /// The same polynomial in a ring with `nvars` variables, variable i
  /// sent to variable positions[i].
  Polynomial embed(std::size_t nvars, const std::vector<std::size_t>& positions) const {
    Polynomial out(nvars);
    for (const auto& [m, c] : terms_) out.add_term(m.embed(nvars, positions), c);
    return out;
  }

 private:
  void check(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials live in different rings");
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Evaluates f with variable i replaced by images[i] in any commutative
/// ring T given by a unit and a product; T must support `+` and scalar `*`.
template <class T, Field F, class Mul>
T evaluate(const Polynomial<F>& f, const std::vector<T>& images, const T& one, Mul&& mul) {
  if (images.size() != f.nvars()) throw std::invalid_argument("evaluate: wrong number of images");
  T acc = F(0) * one;
  std::vector<std::vector<T>> powers(images.size(), std::vector<T>{one});
  auto power = [&](std::size_t i, std::uint32_t e) -> const T& {
    auto& cache = powers[i];
    while (cache.size() <= e) cache.push_back(mul(cache.back(), images[i]));
    return cache[e];
  };
  for (const auto& [m, c] : f.terms()) {
    T t = one;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) t = mul(t, power(i, m[i]));
    acc = acc + c * t;
  }
  return acc;
}

/// Substitutes polynomials for the variables of f.
template <Field F>
Polynomial<F> substitute(const Polynomial<F>& f, const std::vector<Polynomial<F>>& images,
                         std::size_t target_nvars) {
  return evaluate(f, images, Polynomial<F>::constant(target_nvars, F(1)),
                  [](const Polynomial<F>& a, const Polynomial<F>& b) { return a * b; });
}

/// Human-readable form, largest term first under `order`; parses back.
template <Field F>
std::string to_string(const Polynomial<F>& f, const std::vector<std::string>& names,
                      const MonomialOrder& order) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Monomial, F>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return order.compare(a.first, b.first) > 0; });
  std::string out;
  for (const auto& [m, c] : terms) {
    std::string coeff = FieldTraits<F>::to_string(c);
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (out.empty())
      out = negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (m.is_one()) {
      out += coeff;
    } else {
      if (coeff != "1") out += (coeff.find('/') != std::string::npos ? "(" + coeff + ")" : coeff) + "*";
      out += m.to_string(names);
    }
  }
  return out;
}

template <Field F>
std::string to_string(const Polynomial<F>& f, const std::vector<std::string>& names) {
  return to_string(f, names, MonomialOrder::grevlex(f.nvars()));
}

}  // namespace defcoh

#endif  // DEFCOH_POLYNOMIAL_HPP
