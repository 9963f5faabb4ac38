#pragma once

#include <gmpxx.h>

#include <array>
#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdlib>
#include <string>

#include "cyclogon/poly/multipoly.hpp"

namespace cyclogon::poly {

template <std::floating_point T>
T to_real(const mpz_class& c) {
  if (c.fits_slong_p()) return static_cast<T>(c.get_si());
  if constexpr (sizeof(T) > sizeof(double))
    return std::strtold(c.get_str().c_str(), nullptr);
  else
    return static_cast<T>(c.get_d());
}

template <std::floating_point T>
T to_real(const mpq_class& q) {
  if constexpr (sizeof(T) > sizeof(double))
    return to_real<T>(mpz_class(q.get_num())) / to_real<T>(mpz_class(q.get_den()));
  else
    return q.get_d();
}

/// Value of a polynomial together with the magnitude of its largest term.
template <std::floating_point T>
struct BalancedValue {
  T value{};
  T scale{};
  T relative() const { return scale > 0 ? std::abs(value) / scale : std::abs(value); }
};

/// Term-by-term evaluation with Neumaier-compensated summation. The scale is
/// the largest |term|, so relative() is insensitive to cancellation.
template <std::floating_point T>
BalancedValue<T> evaluate_balanced(const MultiPoly& f, const std::array<T, kMaxVars>& values) {
  T sum = 0, comp = 0, scale = 0;
  for (const auto& t : f.terms()) {
    T term = to_real<T>(t.coeff);
    for (std::size_t i = 0; i < kVarCount; ++i) {
      unsigned e = t.mono.exponent(i);
      if (e == 0) continue;
      T base = values[i], acc = 1;
      // Square-and-multiply keeps the rounding count logarithmic in e.
      while (e) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1;
      }
      term *= acc;
    }
    scale = std::max(scale, std::abs(term));
    const T s = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - s) + term : (term - s) + sum;
    sum = s;
  }
  return {sum + comp, scale};
}

/// Variable assignment helper: values[index(v)] = x.
template <std::floating_point T>
class Assignment {
 public:
  Assignment& set(Var v, T x) {
    v_[index(v)] = x;
    return *this;
  }
  const std::array<T, kMaxVars>& values() const noexcept { return v_; }

 private:
  std::array<T, kMaxVars> v_{};
};

}  // namespace cyclogon::poly
