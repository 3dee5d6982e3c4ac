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

#include "defcoh/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace defcoh {

Monomial Monomial::variable(std::size_t nvars, std::size_t i, std::uint32_t power) {
  Monomial m(nvars);
  m.exps_.at(i) = power;
  return m;
}

std::uint64_t Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  if (o.exps_.size() != exps_.size()) throw std::invalid_argument("monomial arity mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += o.exps_[i];
  return *this;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial q = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b.exps_[i] > a.exps_[i]) throw std::invalid_argument("monomial does not divide");
    q.exps_[i] -= b.exps_[i];
  }
  return q;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < a.size(); ++i) m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < a.size(); ++i) m.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return m;
}

Monomial Monomial::embed(std::size_t nvars, const std::vector<std::size_t>& positions) const {
  Monomial m(nvars);
  for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_.at(positions.at(i)) = exps_[i];
  return m;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "v" + std::to_string(i);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto e : m.exponents()) h = (h ^ e) * 0x100000001b3ull;
  return h;
}

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
  std::vector<std::size_t> sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw std::invalid_argument("variable priority is not a permutation");
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return {Kind::GrevLex, std::move(p)};
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return {Kind::Lex, std::move(p)};
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == Kind::Lex) {
    for (std::size_t v : priority_)
      if (a[v] != b[v]) return a[v] <=> b[v];
    return std::strong_ordering::equal;
  }
  auto da = a.degree(), db = b.degree();
  if (da != db) return da <=> db;
  // Equal degree: the monomial with the smaller exponent in the least
  // significant differing variable is larger.
  for (auto it = priority_.rbegin(); it != priority_.rend(); ++it)
    if (a[*it] != b[*it]) return b[*it] <=> a[*it];
  return std::strong_ordering::equal;
}

MonomialOrder MonomialOrder::extended(std::size_t nvars) const {
  std::vector<std::size_t> p = priority_;
  for (std::size_t i = priority_.size(); i < nvars; ++i) p.push_back(i);
  return {kind_, std::move(p)};
}

namespace {

void fill_degree(std::size_t nvars, const std::vector<std::size_t>& vars, std::size_t at,
                 std::uint32_t left, Monomial& cur, std::vector<Monomial>& out) {
  if (at + 1 == vars.size()) {
    cur[vars[at]] = left;
    out.push_back(cur);
    cur[vars[at]] = 0;
    return;
  }
  for (std::uint32_t e = 0; e <= left; ++e) {
    cur[vars[at]] = e;
    fill_degree(nvars, vars, at + 1, left - e, cur, out);
  }
  cur[vars[at]] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, const std::vector<std::size_t>& vars,
                                          std::uint32_t d) {
  std::vector<Monomial> out;
  if (vars.empty()) {
    if (d == 0) out.emplace_back(nvars);
    return out;
  }
  Monomial cur(nvars);
  fill_degree(nvars, vars, 0, d, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d) {
  std::vector<std::size_t> vars(nvars);
  std::iota(vars.begin(), vars.end(), std::size_t{0});
  return monomials_of_degree(nvars, vars, d);
}

}  // namespace defcoh
