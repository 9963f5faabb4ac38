#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclogon/core/error.hpp"

namespace cyclogon::sym {

/// Integer partition with parts in 1..5, stored weakly decreasing.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
      if (p > 5) throw Error(ErrorCode::PartTooLarge, "partition part " + std::to_string(p) + " exceeds 5");
      if (p < 1) throw Error(ErrorCode::InvalidArgument, "partition parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }

  /// From multiplicities: m[k-1] copies of part k.
  static Partition from_multiplicities(const std::array<unsigned, 5>& m) {
    std::vector<int> parts;
    for (int k = 5; k >= 1; --k) parts.insert(parts.end(), m[static_cast<std::size_t>(k - 1)], k);
    return Partition(std::move(parts));
  }

  /// Exponent notation such as "52^21^4" (= 5,2,2,1,1,1,1); a multiplicity
  /// above 9 is written in braces, "1^{12}". The empty string is the empty partition.
  static Partition parse(std::string_view s) {
    std::vector<int> parts;
    std::size_t i = 0;
    while (i < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw Error(ErrorCode::Parse, "bad partition text '" + std::string(s) + "'");
      const int part = s[i++] - '0';
      int mult = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string digits;
        if (i < s.size() && s[i] == '{') {
          ++i;
          while (i < s.size() && s[i] != '}') digits += s[i++];
          if (i == s.size()) throw Error(ErrorCode::Parse, "unclosed brace in partition");
          ++i;
        } else if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
          digits = s[i++];
        }
        if (digits.empty()) throw Error(ErrorCode::Parse, "missing multiplicity in partition");
        mult = std::stoi(digits);
      }
      parts.insert(parts.end(), static_cast<std::size_t>(mult), part);
    }
    return Partition(std::move(parts));
  }

  std::string to_string() const {
    std::string out;
    for (int k = 5; k >= 1; --k) {
      const unsigned m = multiplicity(k);
      if (m == 0) continue;
      out += std::to_string(k);
      if (m > 9)
        out += "^{" + std::to_string(m) + "}";
      else if (m > 1)
        out += "^" + std::to_string(m);
    }
    return out;
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }
  int weight() const noexcept {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
  }
  unsigned multiplicity(int k) const noexcept {
    return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), k));
  }
  std::array<unsigned, 5> multiplicities() const noexcept {
    std::array<unsigned, 5> m{};
    for (int p : parts_) ++m[static_cast<std::size_t>(p - 1)];
    return m;
  }
  /// Conjugate partition (transpose of the Young diagram); parts may exceed 5
  /// only when the length does, which the constructor rejects.
  std::vector<int> conjugate() const {
    std::vector<int> c;
    for (int j = 1; !parts_.empty() && j <= parts_.front(); ++j)
      c.push_back(static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [j](int p) { return p >= j; })));
    return c;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// e_lambda = product of e_{lambda_i}; e[k-1] holds e_k.
template <class T>
T e_lambda(const Partition& lambda, const std::array<T, 5>& e) {
  T out(1);
  for (int p : lambda.parts()) out = out * e[static_cast<std::size_t>(p - 1)];
  return out;
}

}  // namespace cyclogon::sym
