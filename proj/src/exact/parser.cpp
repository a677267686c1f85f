// Copyright 2026 The ruledsym Authors.
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


#include "ruledsym/parser.hpp"

#include <cctype>
#include <optional>

#include "ruledsym/errors.hpp"

namespace ruledsym {

namespace {

constexpr std::string_view kLetters = "tsxyz";

// Recursive descent over a value algebra supplied by `Ops`.
template <class Ops>
class Parser {
 public:
  using V = typename Ops::Value;

  Parser(std::string_view text, const Ops& ops) : s_(text), ops_(ops) {}

  V parse() {
    V v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  V expr() {
    V v = term();
    for (;;) {
      if (accept('+'))
        v = ops_.add(v, term());
      else if (accept('-'))
        v = ops_.sub(v, term());
      else
        return v;
    }
  }

  V term() {
    V v = unary();
    for (;;) {
      if (accept('*')) {
        v = ops_.mul(v, unary());
      } else if (accept('/')) {
        size_t at = pos_;
        V d = unary();
        if (!ops_.can_divide(d)) {
          pos_ = at;
          fail(ops_.division_error());
        }
        v = ops_.div(v, d);
      } else {
        return v;
      }
    }
  }

  V unary() {
    if (accept('-')) return ops_.neg(unary());
    if (accept('+')) return unary();
    return power();
  }

  V power() {
    V base = primary();
    if (accept('^')) {
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a non-negative integer literal");
      if (pos_ - start > 4) fail("exponent too large");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      return ops_.pow(base, e);
    }
    return base;
  }

  V primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      V v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '.') {
        ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      try {
        return ops_.number(parse_rational(s_.substr(start, pos_ - start)));
      } catch (const std::invalid_argument&) {
        pos_ = start;
        fail("malformed number");
      }
    }
    if (kLetters.find(c) != std::string_view::npos) {
      ++pos_;
      if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
        --pos_;
        fail("unknown identifier (multiplication must be explicit)");
      }
      auto v = ops_.variable(std::string(1, c));
      if (!v) {
        --pos_;
        fail(std::string("variable '") + c + "' is not allowed here");
      }
      return *v;
    }
    fail("unexpected character");
  }

  std::string_view s_;
  const Ops& ops_;
  size_t pos_ = 0;
};

struct PolyOps {
  using Value = MultiPoly<Rational>;
  std::vector<std::string> names;
  int arity() const { return static_cast<int>(names.size()); }

  Value number(const Rational& r) const { return Value::constant(arity(), r); }
  std::optional<Value> variable(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return Value::variable(arity(), static_cast<int>(i));
    return std::nullopt;
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  bool can_divide(const Value& d) const { return d.is_constant() && !d.is_zero(); }
  const char* division_error() const { return "division is only allowed by a nonzero constant"; }
  Value div(const Value& a, const Value& d) const { return a * Rational(1 / d.constant_term()); }
  Value neg(const Value& a) const { return -a; }
  Value pow(const Value& a, unsigned e) const { return a.pow(e); }
};

struct RatOps {
  using Value = RationalFunction;
  std::string var;

  Value number(const Rational& r) const { return Value::constant(r); }
  std::optional<Value> variable(const std::string& name) const {
    if (name != var) return std::nullopt;
    return Value(UniPoly::variable());
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  bool can_divide(const Value& d) const { return !d.is_zero(); }
  const char* division_error() const { return "division by zero"; }
  Value div(const Value& a, const Value& d) const { return a / d; }
  Value neg(const Value& a) const { return -a; }
  Value pow(const Value& a, unsigned e) const { return a.pow(e); }
};

}  // namespace

MultiPoly<Rational> parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  PolyOps ops{variables};
  return Parser<PolyOps>(text, ops).parse();
}

RationalFunction parse_rational_function(std::string_view text, const std::string& var) {
  RatOps ops{var};
  return Parser<RatOps>(text, ops).parse();
}

UniPoly parse_univariate(std::string_view text, const std::string& var) {
  return parse_polynomial(text, {var}).to_univariate(0);
}

std::string to_string(const MultiPoly<Rational>& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += mono;
    }
  }
  return out;
}

std::string to_string(const RationalFunction& f, const std::string& var) {
  if (f.is_polynomial()) return to_string(f.num(), var);
  return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

}  // namespace ruledsym
