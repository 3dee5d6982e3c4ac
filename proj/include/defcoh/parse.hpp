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

#ifndef DEFCOH_PARSE_HPP
#define DEFCOH_PARSE_HPP

/// \file parse.hpp
/// Polynomial strings. Grammar:
///
///     expr   := ['+'|'-'] term (('+'|'-') term)*
///     term   := factor ('*' factor)*
///     factor := '-' factor | atom ['^' digits]
///     atom   := digits ['/' digits] | name | '(' expr ')'
///
/// Names are [A-Za-z_][A-Za-z0-9_']*. Integer literals are reduced into
/// the field; "a/b" literals are accepted when b is invertible.

#include "defcoh/polynomial.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace defcoh {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

namespace detail {

template <Field F>
class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& names) : s_(text), names_(names) {}

  Polynomial<F> run() {
    Polynomial<F> p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string_view digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  Polynomial<F> expr() {
    const std::size_t n = names_.size();
    Polynomial<F> acc(n);
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    Polynomial<F> t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial<F> term() {
    Polynomial<F> acc = factor();
    while (eat('*')) acc *= factor();
    return acc;
  }

  Polynomial<F> factor() {
    if (eat('-')) return -factor();
    Polynomial<F> a = atom();
    if (eat('^')) {
      std::size_t at = pos_;
      auto d = digits();
      if (d.size() > 6) {
        pos_ = at;
        fail("exponent too large");
      }
      a = a.pow(static_cast<unsigned>(std::stoul(std::string(d))));
    }
    return a;
  }

  Polynomial<F> atom() {
    const std::size_t n = names_.size();
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial<F> p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      auto num = digits();
      std::string text(num);
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        text += "/" + std::string(digits());
      }
      try {
        return Polynomial<F>::constant(n, parse_numeral<F>(text));
      } catch (const std::invalid_argument& e) {
        pos_ = start;
        fail(e.what());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
        ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < n; ++i)
        if (names_[i] == name) return Polynomial<F>::variable(n, i);
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `text` as a polynomial in the variables `names` (index = position).
template <Field F>
Polynomial<F> parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
  return detail::PolyParser<F>(text, names).run();
}

}  // namespace defcoh

#endif  // DEFCOH_PARSE_HPP
