#pragma once

// Parser for polynomial displays written in a LaTeX-like notation:
//   [(Y-4e_2+e_1^2)^2-64e_4]^2\{Y[...]+...\},  e_{52^21^4},  2^73^3Y^2e_5
// Identifiers are single letters with an optional subscript and prime;
// juxtaposition multiplies; an unbraced exponent is one digit.

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "cyclogon/core/error.hpp"
#include "cyclogon/poly/multipoly.hpp"
#include "cyclogon/sym/partition.hpp"

namespace cyclogon::elim {

using poly::MultiPoly;
using poly::Var;

/// Extra identifiers (such as u, v or R) mapped to polynomials.
using SymbolTable = std::map<std::string, MultiPoly, std::less<>>;

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view text, const SymbolTable& symbols) : s_(text), symbols_(symbols) {}

  MultiPoly parse() {
    MultiPoly out = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected trailing input");
    return out;
  }

 private:
  std::string_view s_;
  const SymbolTable& symbols_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Parse, what + " at offset " + std::to_string(i_) + " in '" +
                                      std::string(s_.substr(i_ < 20 ? 0 : i_ - 20, 40)) + "'");
  }

  void skip() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        ++i_;
      } else if (s_.substr(i_, 5) == "\\cdot") {
        i_ += 5;  // explicit product, same as juxtaposition
      } else {
        break;
      }
    }
  }

  bool at(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }

  bool open_bracket(char& close) {
    skip();
    if (i_ >= s_.size()) return false;
    if (s_.substr(i_, 2) == "\\{") {
      i_ += 2;
      close = '}';
      return true;
    }
    const char c = s_[i_];
    if (c == '(' || c == '[' || c == '{') {
      ++i_;
      close = c == '(' ? ')' : c == '[' ? ']' : '}';
      return true;
    }
    return false;
  }

  void expect_close(char close) {
    skip();
    if (s_.substr(i_, 2) == "\\}" && close == '}') {
      i_ += 2;
      return;
    }
    if (i_ < s_.size() && s_[i_] == close) {
      ++i_;
      return;
    }
    fail(std::string("expected '") + close + "'");
  }

  MultiPoly expr() {
    MultiPoly sum;
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (at('+') || at('-')) {
        sign = s_[i_] == '-' ? -1 : 1;
        ++i_;
      } else if (!first) {
        break;
      }
      MultiPoly t = term();
      sum += sign < 0 ? -t : t;
      first = false;
    }
    return sum;
  }

  bool starts_factor() {
    skip();
    if (i_ >= s_.size()) return false;
    const char c = s_[i_];
    if (s_.substr(i_, 2) == "\\{") return true;
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(' ||
           c == '[' || c == '{' || c == '*';
  }

  MultiPoly term() {
    MultiPoly prod(1);
    bool any = false;
    while (starts_factor()) {
      if (at('*')) {
        ++i_;
        continue;
      }
      prod *= power();
      any = true;
    }
    if (!any) fail("expected a factor");
    return prod;
  }

  unsigned exponent() {
    skip();
    if (i_ < s_.size() && s_[i_] == '{') {
      ++i_;
      std::string digits;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) digits += s_[i_++];
      if (digits.empty() || i_ >= s_.size() || s_[i_] != '}') fail("bad braced exponent");
      ++i_;
      return static_cast<unsigned>(std::stoul(digits));
    }
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) return static_cast<unsigned>(s_[i_++] - '0');
    fail("bad exponent");
  }

  MultiPoly power() {
    MultiPoly base = primary();
    while (at('^')) {
      ++i_;
      base = pow(base, exponent());
    }
    return base;
  }

  MultiPoly primary() {
    skip();
    char close = 0;
    if (open_bracket(close)) {
      MultiPoly inner = expr();
      expect_close(close);
      return inner;
    }
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) digits += s_[i_++];
      return MultiPoly(mpz_class(digits));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail("unexpected character");
  }

  MultiPoly identifier() {
    const char letter = s_[i_++];
    std::string sub;
    bool prime = false;
    if (i_ < s_.size() && s_[i_] == '\'') {
      prime = true;
      ++i_;
    }
    if (i_ < s_.size() && s_[i_] == '_') {
      ++i_;
      if (i_ < s_.size() && s_[i_] == '{') {
        ++i_;
        while (i_ < s_.size() && s_[i_] != '}') sub += s_[i_++];
        if (i_ >= s_.size()) fail("unclosed subscript");
        ++i_;
      } else if (i_ < s_.size()) {
        sub = s_[i_++];
      }
    }
    if (i_ < s_.size() && s_[i_] == '\'') {
      prime = true;
      ++i_;
    }
    std::string name(1, letter);
    if (!sub.empty()) name += "_" + sub;
    if (prime) name += "'";
    if (auto it = symbols_.find(name); it != symbols_.end()) return it->second;

    if (letter == 'e' && !sub.empty()) {
      const sym::Partition lambda = sym::Partition::parse(sub);
      MultiPoly out(1);
      for (int part : lambda.parts()) out *= poly::var(poly::kElemVars[static_cast<std::size_t>(part - 1)]);
      return out;
    }
    if (letter == 'C' && sub.size() == 1 && sub[0] >= '1' && sub[0] <= '7' && !prime)
      return poly::var(static_cast<Var>(poly::index(Var::C1) + static_cast<std::size_t>(sub[0] - '1')));
    if (letter == 'c' && prime && (sub == "1" || sub == "2")) return poly::var(sub == "1" ? Var::c1 : Var::c2);
    if (sub.empty() && !prime) {
      if (const auto v = poly::var_from_name(name)) return poly::var(*v);
    }
    fail("unknown identifier '" + name + "'");
  }
};

}  // namespace detail

inline MultiPoly parse_expression(std::string_view text, const SymbolTable& symbols = {}) {
  return detail::ExprParser(text, symbols).parse();
}

}  // namespace cyclogon::elim
