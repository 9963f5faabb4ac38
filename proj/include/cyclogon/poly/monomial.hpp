#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cyclogon/core/error.hpp"

namespace cyclogon::poly {

// Global variable alphabet. The enumerator order is the variable order used by
// the graded reverse-lexicographic term order.
enum class Var : std::uint8_t {
  X, W, Z, R2, Y,
  a0, a1, a2, a3, a4,
  p, q, P, Q, S,
  e1, e2, e3, e4, e5,
  x0, x1, x2, x3, x4,
  c1, c2,
  C1, C2, C3, C4, C5, C6, C7,
};

inline constexpr std::size_t kVarCount = 34;
inline constexpr std::size_t kMaxVars = 40;

inline constexpr std::array<std::string_view, kVarCount> kVarNames = {
    "X",  "W",  "Z",  "R2", "Y",  "a0", "a1", "a2", "a3",
    "a4", "p",  "q",  "P",  "Q",  "S",  "e1", "e2", "e3",
    "e4", "e5", "x0", "x1", "x2", "x3", "x4", "c1", "c2",
    "C1", "C2", "C3", "C4", "C5", "C6", "C7"};

constexpr std::size_t index(Var v) noexcept { return static_cast<std::size_t>(v); }
constexpr std::string_view name(Var v) noexcept { return kVarNames[index(v)]; }

inline std::optional<Var> var_from_name(std::string_view s) noexcept {
  for (std::size_t i = 0; i < kVarCount; ++i)
    if (kVarNames[i] == s) return static_cast<Var>(i);
  return std::nullopt;
}

constexpr Var var_at(std::size_t i) noexcept { return static_cast<Var>(i); }

inline constexpr std::array<Var, 5> kSideVars = {Var::a0, Var::a1, Var::a2, Var::a3, Var::a4};
inline constexpr std::array<Var, 5> kSquareVars = {Var::x0, Var::x1, Var::x2, Var::x3, Var::x4};
inline constexpr std::array<Var, 5> kElemVars = {Var::e1, Var::e2, Var::e3, Var::e4, Var::e5};

/// Exponent vector packed one byte per variable, eight variables per word.
/// Every exponent stays below 128 so that word-wise arithmetic never carries.
class Monomial {
 public:
  static constexpr std::size_t kWords = kMaxVars / 8;
  static constexpr unsigned kMaxExponent = 127;

  constexpr Monomial() = default;

  static Monomial of(Var v, unsigned e = 1) {
    Monomial m;
    m.set(v, e);
    return m;
  }

  constexpr unsigned operator[](Var v) const noexcept { return exponent(index(v)); }

  constexpr unsigned exponent(std::size_t i) const noexcept {
    return static_cast<unsigned>((w_[i / 8] >> (8 * (i % 8))) & 0xFFu);
  }

  void set(Var v, unsigned e) {
    if (e > kMaxExponent)
      throw Error(ErrorCode::InvalidArgument, "exponent overflow in monomial");
    const std::size_t i = index(v);
    const unsigned shift = 8 * (i % 8);
    w_[i / 8] = (w_[i / 8] & ~(std::uint64_t{0xFF} << shift)) | (std::uint64_t{e} << shift);
  }

  constexpr unsigned degree() const noexcept {
    unsigned d = 0;
    for (auto w : w_) {
      std::uint64_t pairs = (w & 0x00FF00FF00FF00FFull) + ((w >> 8) & 0x00FF00FF00FF00FFull);
      d += static_cast<unsigned>((pairs * 0x0001000100010001ull) >> 48);
    }
    return d;
  }

  constexpr bool is_one() const noexcept {
    for (auto w : w_)
      if (w != 0) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::uint64_t overflow = 0;
    for (std::size_t i = 0; i < kWords; ++i) {
      r.w_[i] = a.w_[i] + b.w_[i];
      overflow |= r.w_[i] & kHigh;
    }
    if (overflow) throw Error(ErrorCode::InvalidArgument, "exponent overflow in monomial product");
    return r;
  }

  /// True when `this` divides `other`.
  constexpr bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < kWords; ++i)
      if ((((other.w_[i] | kHigh) - w_[i]) & kHigh) != kHigh) return false;
    return true;
  }

  /// Quotient a / b; requires b.divides(a).
  friend constexpr Monomial operator/(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    for (std::size_t i = 0; i < kWords; ++i) r.w_[i] = a.w_[i] - b.w_[i];
    return r;
  }

  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;

  /// Graded reverse-lexicographic comparison: true iff a > b.
  friend constexpr bool grevlex_greater(const Monomial& a, const Monomial& b) noexcept {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (std::size_t i = kWords; i-- > 0;)
      if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
    return false;
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ull;
    for (auto w : w_) {
      h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
      h *= 0xBF58476D1CE4E5B9ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
  }

  /// Monomial with the exponent of `v` cleared.
  Monomial without(Var v) const {
    Monomial m = *this;
    m.set(v, 0);
    return m;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      const unsigned e = exponent(i);
      if (e == 0) continue;
      if (!s.empty()) s += '*';
      s += kVarNames[i];
      if (e > 1) s += '^' + std::to_string(e);
    }
    return s.empty() ? "1" : s;
  }

 private:
  static constexpr std::uint64_t kHigh = 0x8080808080808080ull;
  std::array<std::uint64_t, kWords> w_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    return grevlex_greater(a, b);
  }
};

}  // namespace cyclogon::poly
