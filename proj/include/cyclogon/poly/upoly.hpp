#pragma once

// Dense univariate polynomials over the rationals: exact gcd, square-free
// decomposition and Sturm-sequence real root isolation.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cyclogon/core/error.hpp"

namespace cyclogon::poly {

class QPoly {
 public:
  QPoly() = default;
  QPoly(mpq_class c) {
    if (c != 0) c_.push_back(std::move(c));
  }
  /// Coefficients from the constant term upward.
  explicit QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

  static QPoly monomial(std::size_t degree, mpq_class c = 1) {
    std::vector<mpq_class> v(degree + 1);
    v[degree] = std::move(c);
    return QPoly(std::move(v));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree, with -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const noexcept { return c_; }
  mpq_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }
  const mpq_class& lead() const {
    if (c_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
    return c_.back();
  }

  friend bool operator==(const QPoly&, const QPoly&) = default;

  QPoly operator-() const {
    QPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<mpq_class> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return QPoly(std::move(v));
  }
  friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return QPoly(std::move(v));
  }

  /// Quotient and remainder; throws on division by zero.
  friend std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
    if (a.degree() < b.degree()) return {QPoly(), a};
    std::vector<mpq_class> r = a.c_;
    std::vector<mpq_class> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const std::size_t db = static_cast<std::size_t>(b.degree());
    for (std::size_t k = q.size(); k-- > 0;) {
      const mpq_class f = r[k + db] / b.c_.back();
      q[k] = f;
      if (f == 0) continue;
      for (std::size_t j = 0; j <= db; ++j) r[k + j] -= f * b.c_[j];
    }
    r.resize(db);
    return {QPoly(std::move(q)), QPoly(std::move(r))};
  }
  friend QPoly operator/(const QPoly& a, const QPoly& b) { return divmod(a, b).first; }
  friend QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

  QPoly monic() const {
    if (is_zero()) return {};
    QPoly r = *this;
    const mpq_class l = c_.back();
    for (auto& x : r.c_) x /= l;
    return r;
  }

  QPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<mpq_class> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
    return QPoly(std::move(v));
  }

  mpq_class operator()(const mpq_class& x) const {
    mpq_class acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  int sign_at(const mpq_class& x) const { return sgn((*this)(x)); }

  std::string to_string(const std::string& var = "Y") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      out += (c_[i] < 0 ? " - " : (out.empty() ? "" : " + "));
      const mpq_class a = abs(c_[i]);
      if (a != 1 || i == 0) out += a.get_str();
      if (i > 0) out += (a != 1 ? "*" : "") + var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<mpq_class> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a % b;
    a = std::move(b);
    b = r.is_zero() ? r : r.monic();
  }
  return a.is_zero() ? a : a.monic();
}

/// Yun's algorithm: returns (factor, multiplicity) with pairwise coprime
/// monic square-free factors whose product (with multiplicities) is f / lead(f).
inline std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "square-free decomposition of zero");
  std::vector<std::pair<QPoly, int>> out;
  if (f.degree() == 0) return out;
  const QPoly fp = f.derivative();
  const QPoly a0 = gcd(f, fp);
  QPoly b = f / a0;
  QPoly c = fp / a0;
  QPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    const QPoly a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = b / a;
    c = d / a;
    d = c - b.derivative();
  }
  return out;
}

/// Sturm chain f, f', -rem(f, f'), ...
inline std::vector<QPoly> sturm_chain(const QPoly& f) {
  std::vector<QPoly> chain{f, f.derivative()};
  while (!chain.back().is_zero()) {
    QPoly r = -(chain[chain.size() - 2] % chain.back());
    if (r.is_zero()) break;
    // Positive rescaling keeps the sign pattern and tames coefficient growth.
    chain.push_back(r * QPoly(mpq_class(1) / abs(r.lead())));
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

inline int sign_variations(const std::vector<QPoly>& chain, const mpq_class& x) {
  int count = 0, last = 0;
  for (const auto& p : chain) {
    const int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

/// Number of distinct real roots in (lo, hi].
inline int count_roots(const std::vector<QPoly>& chain, const mpq_class& lo, const mpq_class& hi) {
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

/// Every real root lies in [-bound, bound].
inline mpq_class cauchy_bound(const QPoly& f) {
  mpq_class m = 0;
  for (long i = 0; i < f.degree(); ++i) m = std::max(m, mpq_class(abs(f.coeff(static_cast<std::size_t>(i)) / f.lead())));
  return m + 1;
}

struct RootInterval {
  mpq_class lo;  // exclusive unless lo == hi
  mpq_class hi;
};

/// Isolating intervals (lo, hi] for the distinct real roots of f, ascending,
/// each refined until hi - lo <= width or hi - lo <= relative * max(|lo|, |hi|).
inline std::vector<RootInterval> isolate_real_roots(const QPoly& f, const mpq_class& width, const mpq_class& relative = 0) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root isolation of zero");
  std::vector<RootInterval> out;
  if (f.degree() < 1) return out;
  QPoly g = f / gcd(f, f.derivative());
  const auto chain = sturm_chain(g);
  const mpq_class bound = cauchy_bound(g);
  std::vector<RootInterval> stack{{-bound, bound}};
  while (!stack.empty()) {
    RootInterval iv = stack.back();
    stack.pop_back();
    const int n = count_roots(chain, iv.lo, iv.hi);
    if (n == 0) continue;
    if (n == 1) {
      // Bisect on signs; g is square-free so the one root in (lo, hi] is
      // simple and g changes sign exactly there.
      const int shi = g.sign_at(iv.hi);
      if (shi == 0) iv.lo = iv.hi;
      while (iv.hi - iv.lo > width && iv.hi - iv.lo > relative * std::max(abs(iv.lo), abs(iv.hi))) {
        mpq_class mid = (iv.lo + iv.hi) / 2;
        const int sm = g.sign_at(mid);
        if (sm == 0) {
          iv = {mid, mid};
          break;
        }
        if (sm == shi)
          iv.hi = mid;
        else
          iv.lo = mid;
      }
      out.push_back(iv);
      continue;
    }
    const mpq_class mid = (iv.lo + iv.hi) / 2;
    stack.push_back({mid, iv.hi});
    stack.push_back({iv.lo, mid});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.hi < b.hi; });
  return out;
}

}  // namespace cyclogon::poly
