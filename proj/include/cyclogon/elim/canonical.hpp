#pragma once

// Canonical text form of a polynomial in a fixed list of basis variables plus
// one main variable: one term per line, "+c e1^i1 e2^i2 e3^i3 e4^i4 e5^i5 Y^j",
// sorted by descending power of the main variable, then graded reverse
// lexicographic on the basis exponents. Lines starting with '#' are comments.

#include <gmpxx.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cyclogon/core/error.hpp"
#include "cyclogon/poly/multipoly.hpp"

namespace cyclogon::elim {

using poly::Monomial;
using poly::MultiPoly;
using poly::Var;

struct Layout {
  std::vector<Var> basis;
  Var main = Var::Y;

  std::vector<Var> columns() const {
    auto c = basis;
    c.push_back(main);
    return c;
  }
};

inline Layout e_layout(Var main) { return {{Var::e1, Var::e2, Var::e3, Var::e4, Var::e5}, main}; }
inline Layout invariant_layout(Var main) { return {{Var::p, Var::q, Var::P, Var::Q, Var::S}, main}; }

namespace detail {

inline bool canonical_before(const Layout& layout, const Monomial& a, const Monomial& b) {
  if (a[layout.main] != b[layout.main]) return a[layout.main] > b[layout.main];
  unsigned da = 0, db = 0;
  for (Var v : layout.basis) {
    da += a[v];
    db += b[v];
  }
  if (da != db) return da > db;
  // Reverse lexicographic tie break: smaller exponent in the last differing variable wins.
  for (auto it = layout.basis.rbegin(); it != layout.basis.rend(); ++it)
    if (a[*it] != b[*it]) return a[*it] < b[*it];
  return false;
}

inline void check_alphabet(const MultiPoly& f, const Layout& layout) {
  const auto cols = layout.columns();
  for (Var v : f.variables())
    if (std::find(cols.begin(), cols.end(), v) == cols.end())
      throw Error(ErrorCode::InvalidArgument, "variable " + std::string(poly::name(v)) + " outside the layout");
}

}  // namespace detail

/// Terms in canonical order.
inline std::vector<MultiPoly::Term> canonical_terms(const MultiPoly& f, const Layout& layout) {
  detail::check_alphabet(f, layout);
  auto terms = f.terms();
  std::sort(terms.begin(), terms.end(),
            [&](const MultiPoly::Term& a, const MultiPoly::Term& b) { return detail::canonical_before(layout, a.mono, b.mono); });
  return terms;
}

inline std::string to_canonical_text(const MultiPoly& f, const Layout& layout, std::string_view header = {}) {
  std::ostringstream out;
  if (!header.empty()) {
    std::istringstream in{std::string(header)};
    for (std::string line; std::getline(in, line);) out << "# " << line << '\n';
  }
  const auto cols = layout.columns();
  for (const auto& t : canonical_terms(f, layout)) {
    out << (t.coeff < 0 ? '-' : '+') << mpz_class(abs(t.coeff)).get_str();
    for (Var v : cols) out << ' ' << poly::name(v) << '^' << t.mono[v];
    out << '\n';
  }
  return out.str();
}

inline MultiPoly from_canonical_text(std::string_view text, const Layout& layout) {
  const auto cols = layout.columns();
  std::vector<MultiPoly::Term> terms;
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string coeff;
    ls >> coeff;
    if (coeff.size() < 2 || (coeff[0] != '+' && coeff[0] != '-'))
      throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": coefficient needs an explicit sign");
    mpz_class c;
    if (c.set_str(coeff.substr(1), 10) != 0) throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": bad coefficient");
    if (coeff[0] == '-') c = -c;
    Monomial m;
    for (Var v : cols) {
      std::string tok;
      if (!(ls >> tok)) throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": missing exponent column");
      const std::string want = std::string(poly::name(v)) + "^";
      if (tok.rfind(want, 0) != 0) throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected " + want);
      m = m * Monomial::of(v, static_cast<unsigned>(std::stoul(tok.substr(want.size()))));
    }
    terms.push_back({m, c});
  }
  return MultiPoly::from_terms(std::move(terms));
}

}  // namespace cyclogon::elim
