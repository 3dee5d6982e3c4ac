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

#ifndef DEFCOH_FIELD_HPP
#define DEFCOH_FIELD_HPP

/// \file field.hpp
/// Exact scalar fields: prime fields F_p with a compile-time modulus and the
/// rationals over GMP integers. Every other header is templated on one of
/// these types, and each of them plugs into Eigen through NumTraits.

#include <gmpxx.h>

#include <Eigen/Core>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace defcoh {

namespace detail {

constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace detail

/// Residues modulo a prime P, 2 <= P <= 2^31.
template <std::uint32_t P>
class Fp {
  static_assert(P >= 2 && P <= (1u << 31), "modulus out of range");
  static_assert(detail::is_prime(P), "modulus must be prime");

 public:
  static constexpr std::uint32_t modulus = P;

  constexpr Fp() noexcept = default;
  constexpr Fp(long long n) noexcept  // NOLINT(google-explicit-constructor)
      : v_(static_cast<std::uint32_t>(((n % static_cast<long long>(P)) + P) % P)) {}

  constexpr std::uint32_t value() const noexcept { return v_; }

  constexpr Fp& operator+=(Fp o) noexcept {
    std::uint64_t s = std::uint64_t{v_} + o.v_;
    v_ = static_cast<std::uint32_t>(s >= P ? s - P : s);
    return *this;
  }
  constexpr Fp& operator-=(Fp o) noexcept {
    v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t{v_} + P - o.v_);
    return *this;
  }
  constexpr Fp& operator*=(Fp o) noexcept {
    v_ = static_cast<std::uint32_t>((std::uint64_t{v_} * o.v_) % P);
    return *this;
  }
  Fp& operator/=(Fp o) { return *this *= o.inverse(); }

  friend constexpr Fp operator+(Fp a, Fp b) noexcept { return a += b; }
  friend constexpr Fp operator-(Fp a, Fp b) noexcept { return a -= b; }
  friend constexpr Fp operator*(Fp a, Fp b) noexcept { return a *= b; }
  friend Fp operator/(Fp a, Fp b) { return a /= b; }
  constexpr Fp operator-() const noexcept { return Fp{} - *this; }

  friend constexpr bool operator==(Fp a, Fp b) noexcept { return a.v_ == b.v_; }
  friend constexpr auto operator<=>(Fp a, Fp b) noexcept { return a.v_ <=> b.v_; }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("division by zero in F_p");
    std::int64_t a = v_, b = P, x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    return Fp(x0);
  }

 private:
  std::uint32_t v_ = 0;
};

/// A rational number kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw std::domain_error("zero denominator");
    q_.canonicalize();
  }

  const mpq_class& get() const noexcept { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.q_ == 0) throw std::domain_error("division by zero in Q");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational inverse() const { return Rational(1) / *this; }

 private:
  mpq_class q_{0};
};

/// Per-field information used by parsers, printers and enumeration oracles.
template <class F>
struct FieldTraits;

template <std::uint32_t P>
struct FieldTraits<Fp<P>> {
  static constexpr bool is_finite = true;
  static constexpr std::uint64_t characteristic = P;
  static constexpr std::uint64_t order = P;
  static std::string name() { return "F" + std::to_string(P); }
  static Fp<P> from_index(std::uint64_t i) { return Fp<P>(static_cast<long long>(i)); }
  static std::uint64_t index(Fp<P> a) { return a.value(); }
  static std::string to_string(Fp<P> a) { return std::to_string(a.value()); }
  /// Reduces a decimal integer, possibly of arbitrary length, modulo P.
  static Fp<P> from_integer(const mpz_class& z) {
    mpz_class r = z % static_cast<unsigned long>(P);
    if (r < 0) r += static_cast<unsigned long>(P);
    return Fp<P>(static_cast<long long>(r.get_ui()));
  }
  static Fp<P> random(std::mt19937_64& rng) {
    return Fp<P>(static_cast<long long>(rng() % P));
  }
  static std::size_t hash(Fp<P> a) { return a.value(); }
};

template <>
struct FieldTraits<Rational> {
  static constexpr bool is_finite = false;
  static constexpr std::uint64_t characteristic = 0;
  static std::string name() { return "Q"; }
  static std::string to_string(const Rational& a) { return a.get().get_str(); }
  static Rational from_integer(const mpz_class& z) { return Rational(mpq_class(z)); }
  /// Small random rationals, enough to exercise normalization paths.
  static Rational random(std::mt19937_64& rng) {
    long long num = static_cast<long long>(rng() % 11) - 5;
    long long den = static_cast<long long>(rng() % 4) + 1;
    return Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  }
  static std::size_t hash(const Rational& a) {
    return std::hash<std::string>{}(a.get().get_str());
  }
};

template <class F>
concept Field = requires(F a, F b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a == b } -> std::convertible_to<bool>;
  { FieldTraits<F>::name() } -> std::convertible_to<std::string>;
  { FieldTraits<F>::to_string(a) } -> std::convertible_to<std::string>;
};

template <class F>
concept FiniteField = Field<F> && FieldTraits<F>::is_finite;

template <Field F>
inline bool is_zero(const F& a) {
  return a == F(0);
}

/// Parses a numeral "n" or "n/d" (decimal, optional sign) into the field.
template <Field F>
F parse_numeral(std::string_view text) {
  auto slash = text.find('/');
  auto to_z = [](std::string_view s) {
    mpz_class z;
    if (s.empty() || z.set_str(std::string(s), 10) != 0)
      throw std::invalid_argument("malformed numeral '" + std::string(s) + "'");
    return z;
  };
  if (slash == std::string_view::npos) return FieldTraits<F>::from_integer(to_z(text));
  F den = FieldTraits<F>::from_integer(to_z(text.substr(slash + 1)));
  if (is_zero(den)) throw std::invalid_argument("numeral with zero denominator");
  return FieldTraits<F>::from_integer(to_z(text.substr(0, slash))) / den;
}

template <std::uint32_t P>
std::ostream& operator<<(std::ostream& os, Fp<P> a) {
  return os << a.value();
}

inline std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.get().get_str(); }

using F2 = Fp<2>;
using F3 = Fp<3>;
using F5 = Fp<5>;

}  // namespace defcoh

namespace Eigen {

template <std::uint32_t P>
struct NumTraits<defcoh::Fp<P>> : GenericNumTraits<defcoh::Fp<P>> {
  using Real = defcoh::Fp<P>;
  using NonInteger = defcoh::Fp<P>;
  using Literal = defcoh::Fp<P>;
  using Nested = defcoh::Fp<P>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<defcoh::Rational> : GenericNumTraits<defcoh::Rational> {
  using Real = defcoh::Rational;
  using NonInteger = defcoh::Rational;
  using Literal = defcoh::Rational;
  using Nested = defcoh::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = HugeCost,
    AddCost = HugeCost,
    MulCost = HugeCost
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // DEFCOH_FIELD_HPP
