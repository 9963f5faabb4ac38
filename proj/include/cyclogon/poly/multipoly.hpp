#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cyclogon/core/error.hpp"
#include "cyclogon/poly/monomial.hpp"

namespace cyclogon::poly {

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. Terms are kept sorted in descending grevlex order and no
/// stored coefficient is zero, so structural equality is polynomial equality.
class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    mpz_class coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  MultiPoly() = default;
  MultiPoly(long c) : MultiPoly(mpz_class(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(const mpz_class& c) {                 // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.push_back({Monomial{}, c});
  }

  static MultiPoly variable(Var v, unsigned e = 1) { return monomial(1, Monomial::of(v, e)); }

  static MultiPoly monomial(const mpz_class& c, const Monomial& m) {
    MultiPoly r;
    if (c != 0) r.terms_.push_back({m, c});
    return r;
  }

  /// Builds from unsorted, possibly repeated terms.
  static MultiPoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grevlex_greater(a.mono, b.mono); });
    MultiPoly r;
    for (auto& t : terms) {
      if (!r.terms_.empty() && r.terms_.back().mono == t.mono)
        r.terms_.back().coeff += t.coeff;
      else
        r.terms_.push_back(std::move(t));
      if (r.terms_.back().coeff == 0) r.terms_.pop_back();
    }
    return r;
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  mpz_class constant_value() const {
    if (terms_.empty() || !terms_.back().mono.is_one()) return 0;
    return terms_.back().coeff;
  }

  const Term& leading_term() const {
    if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading term of zero polynomial");
    return terms_.front();
  }

  unsigned degree(Var v) const noexcept {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[v]);
    return d;
  }

  unsigned total_degree() const noexcept {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  bool contains(Var v) const noexcept {
    return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.mono[v] != 0; });
  }

  std::vector<Var> variables() const {
    std::vector<Var> vs;
    for (std::size_t i = 0; i < kVarCount; ++i)
      if (contains(var_at(i))) vs.push_back(var_at(i));
    return vs;
  }

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) { return *this = merge(*this, o, false); }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = merge(*this, o, true); }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, false); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, true); }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1) return scale_by_term(b, a.terms_[0]);
    if (b.size() == 1) return scale_by_term(a, b.terms_[0]);
    std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
    acc.reserve(a.size() * b.size() / 2 + 16);
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        mpz_class& slot = acc[ta.mono * tb.mono];
        mpz_addmul(slot.get_mpz_t(), ta.coeff.get_mpz_t(), tb.coeff.get_mpz_t());
      }
    }
    MultiPoly r;
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) r.terms_.push_back({m, std::move(c)});
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& x, const Term& y) { return grevlex_greater(x.mono, y.mono); });
    return r;
  }

  friend MultiPoly pow(const MultiPoly& base, unsigned e) {
    MultiPoly result(1), b = base;
    while (e) {
      if (e & 1u) result *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return result;
  }

  /// Positive gcd of the coefficients; zero for the zero polynomial.
  mpz_class content() const {
    mpz_class g = 0;
    for (const auto& t : terms_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  MultiPoly primitive_part() const {
    const mpz_class g = content();
    if (g == 0 || g == 1) return *this;
    MultiPoly r = *this;
    for (auto& t : r.terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
    return r;
  }

  /// Exact division of every coefficient by an integer; throws if inexact.
  MultiPoly divide_exact(const mpz_class& d) const {
    if (d == 0) throw Error(ErrorCode::NotDivisible, "division by zero");
    MultiPoly r = *this;
    for (auto& t : r.terms_) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), d.get_mpz_t()))
        throw Error(ErrorCode::NotDivisible, "coefficient not divisible by integer");
      mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), d.get_mpz_t());
    }
    return r;
  }

  /// Quotient a / b when b divides a exactly, std::nullopt otherwise.
  friend std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::NotDivisible, "division by the zero polynomial");
    if (a.is_zero()) return MultiPoly{};
    if (b.size() == 1) {
      const Term& lb = b.terms_[0];
      MultiPoly q;
      q.terms_.reserve(a.size());
      for (const auto& t : a.terms_) {
        if (!lb.mono.divides(t.mono) || !mpz_divisible_p(t.coeff.get_mpz_t(), lb.coeff.get_mpz_t()))
          return std::nullopt;
        Term qt{t.mono / lb.mono, 0};
        mpz_divexact(qt.coeff.get_mpz_t(), t.coeff.get_mpz_t(), lb.coeff.get_mpz_t());
        q.terms_.push_back(std::move(qt));
      }
      return q;
    }
    const Term& lb = b.terms_.front();
    std::map<Monomial, mpz_class, GrevlexGreater> rem;
    for (const auto& t : a.terms_) rem.emplace_hint(rem.end(), t.mono, t.coeff);
    std::vector<Term> quotient;
    mpz_class prod;
    while (!rem.empty()) {
      auto it = rem.begin();
      if (!lb.mono.divides(it->first) || !mpz_divisible_p(it->second.get_mpz_t(), lb.coeff.get_mpz_t()))
        return std::nullopt;
      Term qt{it->first / lb.mono, 0};
      mpz_divexact(qt.coeff.get_mpz_t(), it->second.get_mpz_t(), lb.coeff.get_mpz_t());
      rem.erase(it);
      for (std::size_t k = 1; k < b.terms_.size(); ++k) {
        const Term& tb = b.terms_[k];
        const Monomial m = qt.mono * tb.mono;
        auto [slot, inserted] = rem.try_emplace(m, 0);
        mpz_submul(slot->second.get_mpz_t(), qt.coeff.get_mpz_t(), tb.coeff.get_mpz_t());
        if (slot->second == 0) rem.erase(slot);
      }
      quotient.push_back(std::move(qt));
    }
    MultiPoly q;
    q.terms_ = std::move(quotient);
    return q;
  }

  friend MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
    auto q = try_divide(a, b);
    if (!q) throw Error(ErrorCode::NotDivisible, "polynomial is not an exact multiple of the divisor");
    return std::move(*q);
  }

  friend bool divides(const MultiPoly& divisor, const MultiPoly& a) {
    return try_divide(a, divisor).has_value();
  }

  /// Coefficients with respect to `v`: result[k] multiplies v^k and is free of v.
  std::vector<MultiPoly> coefficients_in(Var v) const {
    std::vector<std::vector<Term>> buckets(degree(v) + 1);
    for (const auto& t : terms_) buckets[t.mono[v]].push_back({t.mono.without(v), t.coeff});
    std::vector<MultiPoly> out;
    out.reserve(buckets.size());
    for (auto& bucket : buckets) {
      MultiPoly c;
      c.terms_ = std::move(bucket);  // clearing one variable preserves grevlex order within a bucket
      c.normalize_order();
      out.push_back(std::move(c));
    }
    return out;
  }

  static MultiPoly from_coefficients(Var v, const std::vector<MultiPoly>& coeffs) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      const Monomial vk = Monomial::of(v, static_cast<unsigned>(k));
      for (const auto& t : coeffs[k].terms_) terms.push_back({t.mono * vk, t.coeff});
    }
    return from_terms(std::move(terms));
  }

  /// Replaces variable `v` by the polynomial `value`.
  MultiPoly substitute(Var v, const MultiPoly& value) const {
    const auto coeffs = coefficients_in(v);
    MultiPoly result;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
      result *= value;
      result += coeffs[k];
    }
    return result;
  }

  /// Simultaneous substitution of several variables.
  MultiPoly substitute(const std::vector<std::pair<Var, MultiPoly>>& values) const {
    std::array<std::vector<MultiPoly>, kMaxVars> powers;
    std::array<bool, kMaxVars> replaced{};
    for (const auto& [v, val] : values) {
      replaced[index(v)] = true;
      powers[index(v)] = {MultiPoly(1)};
      const unsigned d = degree(v);
      for (unsigned k = 1; k <= d; ++k) powers[index(v)].push_back(powers[index(v)].back() * val);
    }
    MultiPoly result;
    std::vector<Term> pending;
    for (const auto& t : terms_) {
      Monomial rest = t.mono;
      MultiPoly factor(t.coeff);
      bool trivial = true;
      for (const auto& [v, val] : values) {
        const unsigned e = t.mono[v];
        if (e == 0) continue;
        rest.set(v, 0);
        factor *= powers[index(v)][e];
        trivial = false;
      }
      if (trivial) {
        pending.push_back(t);
        continue;
      }
      for (const auto& ft : factor.terms_) pending.push_back({ft.mono * rest, ft.coeff});
    }
    return from_terms(std::move(pending));
  }

  /// Replaces `v` by an integer constant.
  MultiPoly specialize(Var v, const mpz_class& value) const { return substitute(v, MultiPoly(value)); }

  /// Exponent-wise map used for v -> v^k style changes of variable.
  template <class F>
  MultiPoly map_monomials(F&& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({f(t.mono), t.coeff});
    return from_terms(std::move(out));
  }

  /// Evaluates with values indexed by variable; T needs +, * and construction from mpz_class.
  template <class T, class Convert>
  T evaluate(const std::array<T, kMaxVars>& values, Convert&& convert) const {
    std::array<std::vector<T>, kMaxVars> powers;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      const unsigned d = degree(var_at(i));
      if (d == 0) continue;
      powers[i].reserve(d + 1);
      powers[i].push_back(T(1));
      for (unsigned k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * values[i]);
    }
    T sum(0);
    for (const auto& t : terms_) {
      T term = convert(t.coeff);
      for (std::size_t i = 0; i < kVarCount; ++i) {
        const unsigned e = t.mono.exponent(i);
        if (e) term = term * powers[i][e];
      }
      sum = sum + term;
    }
    return sum;
  }

  mpq_class evaluate_exact(const std::array<mpq_class, kMaxVars>& values) const {
    return evaluate<mpq_class>(values, [](const mpz_class& c) { return mpq_class(c); });
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
      mpz_class c = t.coeff;
      if (first) {
        if (c < 0) {
          s += "-";
          c = -c;
        }
      } else {
        s += c < 0 ? " - " : " + ";
        if (c < 0) c = -c;
      }
      first = false;
      if (t.mono.is_one()) {
        s += c.get_str();
      } else {
        if (c != 1) s += c.get_str() + "*";
        s += t.mono.to_string();
      }
    }
    return s;
  }

  /// Parses sums of products such as "3*X^2 - p*Q + 1" or "+3 X^2 -1 p Q".
  static MultiPoly parse(std::string_view text) {
    std::vector<Term> terms;
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_uint = [&]() -> std::string {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      return std::string(text.substr(start, i - start));
    };
    skip_ws();
    if (i == text.size()) throw Error(ErrorCode::Parse, "empty polynomial text");
    if (text.substr(i) == "0") return {};
    while (true) {
      skip_ws();
      if (i >= text.size()) break;
      int sign = 1;
      if (text[i] == '+' || text[i] == '-') {
        sign = text[i] == '-' ? -1 : 1;
        ++i;
        skip_ws();
      } else if (!terms.empty()) {
        throw Error(ErrorCode::Parse, "expected '+' or '-' at offset " + std::to_string(i));
      }
      Term term{Monomial{}, mpz_class(sign)};
      bool any_factor = false;
      while (true) {
        skip_ws();
        if (i >= text.size() || text[i] == '+' || text[i] == '-') break;
        if (text[i] == '*') {
          ++i;
          continue;
        }
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
          term.coeff *= mpz_class(read_uint());
        } else if (std::isalpha(static_cast<unsigned char>(text[i]))) {
          std::size_t start = i;
          while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
          const auto v = var_from_name(text.substr(start, i - start));
          if (!v) throw Error(ErrorCode::Parse, "unknown variable '" + std::string(text.substr(start, i - start)) + "'");
          unsigned e = 1;
          if (i < text.size() && text[i] == '^') {
            ++i;
            const std::string digits = read_uint();
            if (digits.empty()) throw Error(ErrorCode::Parse, "missing exponent");
            e = static_cast<unsigned>(std::stoul(digits));
          }
          term.mono = term.mono * Monomial::of(*v, e);
        } else {
          throw Error(ErrorCode::Parse, std::string("unexpected character '") + text[i] + "'");
        }
        any_factor = true;
      }
      if (!any_factor) throw Error(ErrorCode::Parse, "dangling sign");
      terms.push_back(std::move(term));
    }
    return from_terms(std::move(terms));
  }

 private:
  std::vector<Term> terms_;

  void normalize_order() {
    if (!std::is_sorted(terms_.begin(), terms_.end(),
                        [](const Term& a, const Term& b) { return grevlex_greater(a.mono, b.mono); }))
      std::sort(terms_.begin(), terms_.end(),
                [](const Term& a, const Term& b) { return grevlex_greater(a.mono, b.mono); });
  }

  static MultiPoly scale_by_term(const MultiPoly& a, const Term& t) {
    MultiPoly r;
    r.terms_.reserve(a.size());
    for (const auto& ta : a.terms_) r.terms_.push_back({ta.mono * t.mono, ta.coeff * t.coeff});
    // Multiplying by a monomial is compatible with the order.
    return r;
  }

  static MultiPoly merge(const MultiPoly& a, const MultiPoly& b, bool subtract) {
    MultiPoly r;
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && grevlex_greater(a.terms_[i].mono, b.terms_[j].mono))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size() || grevlex_greater(b.terms_[j].mono, a.terms_[i].mono)) {
        r.terms_.push_back({b.terms_[j].mono, subtract ? mpz_class(-b.terms_[j].coeff) : b.terms_[j].coeff});
        ++j;
      } else {
        mpz_class c = subtract ? mpz_class(a.terms_[i].coeff - b.terms_[j].coeff)
                               : mpz_class(a.terms_[i].coeff + b.terms_[j].coeff);
        if (c != 0) r.terms_.push_back({a.terms_[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }
};

inline MultiPoly var(Var v, unsigned e = 1) { return MultiPoly::variable(v, e); }

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& f) { return os << f.to_string(); }

}  // namespace cyclogon::poly
