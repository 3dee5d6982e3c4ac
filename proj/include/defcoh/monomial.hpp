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

#ifndef DEFCOH_MONOMIAL_HPP
#define DEFCOH_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace defcoh {

/// Exponent vector over a fixed, indexed set of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;
  bool divides(const Monomial& other) const;

  Monomial& operator*=(const Monomial& o);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  /// Exact quotient; requires `b` to divide `a`.
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  /// Storage order only (lexicographic on exponent vectors); the term
  /// order used by division lives in MonomialOrder.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Same variables, placed at new indices of a larger ring.
  Monomial embed(std::size_t nvars, const std::vector<std::size_t>& positions) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<std::uint32_t> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// A multiplicative total order with 1 minimal. `priority[0]` is the most
/// significant variable.
class MonomialOrder {
 public:
  enum class Kind { GrevLex, Lex };

  MonomialOrder() = default;
  MonomialOrder(Kind kind, std::vector<std::size_t> priority);

  static MonomialOrder grevlex(std::size_t nvars);
  static MonomialOrder lex(std::size_t nvars);

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }
  std::size_t nvars() const noexcept { return priority_.size(); }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// The same kind of order on a ring with extra variables appended; the
  /// new variables are least significant.
  MonomialOrder extended(std::size_t nvars) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  Kind kind_ = Kind::GrevLex;
  std::vector<std::size_t> priority_;
};

/// Strict weak ordering adapter, descending: the largest monomial first.
struct DescendingBy {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
};

/// All monomials in `nvars` variables of total degree exactly `d`, in
/// storage order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d);

/// Monomials of total degree exactly `d` in the variables listed.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, const std::vector<std::size_t>& vars,
                                          std::uint32_t d);

}  // namespace defcoh

#endif  // DEFCOH_MONOMIAL_HPP
