#pragma once

// Printed polynomial displays, transcribed as text and parsed, so that the
// derivations can be compared against them term by term.
//
// Transcription conventions: an operator repeated across a typeset line break
// ("...-\\ -4e...") is read once; a continuation line printed without a
// leading operator is read with "+". Each variant records its reading.

#include <string>
#include <vector>

#include "cyclogon/elim/canonical.hpp"
#include "cyclogon/elim/expr.hpp"
#include "cyclogon/poly/multipoly.hpp"

namespace cyclogon::elim {

struct PrintedForm {
  std::string name;
  std::string reading;
  std::string source;
  MultiPoly poly;
};

namespace printed {

inline MultiPoly even_to_square(const MultiPoly& f, Var from, Var to) {
  return f.map_monomials([&](poly::Monomial m) {
    const unsigned e = m[from];
    if (e % 2 != 0) throw Error(ErrorCode::Parse, "odd power where only squares were expected");
    m.set(from, 0);
    return m * poly::Monomial::of(to, e / 2);
  });
}

inline const std::string& septic_source() {
  static const std::string s = "(X^2-q)^2(PX^3+SX^2+PQX+P^2)-p^2[X^3-QX-2P]^2";
  return s;
}

inline PrintedForm diagonal_septic() {
  return {"diagonal", "left side minus right side", septic_source(), parse_expression(septic_source())};
}

inline const std::string& robbins_head() {
  static const std::string s =
      "[(Y-4e_2+e_1^2)^2-64e_4]^2\\{Y[(Y-4e_2+e_1^2)^2-64e_4]+[e_1(Y-4e_2+e_1^2)+8e_3]^2\\}"
      "-128e_5\\{16[e_1(Y-4e_2+e_1^2)+8e_3]^3+";
  return s;
}

inline std::vector<PrintedForm> robbins_variants() {
  const std::string tail_sum = "18Y[e_1(Y-4e_2+e_1^2)+8e_3]+[(Y-4e_2+e_1^2)^2-64e_4]+2^73^3Y^2e_5\\}";
  const std::string tail_prod = "18Y[e_1(Y-4e_2+e_1^2)+8e_3][(Y-4e_2+e_1^2)^2-64e_4]+2^73^3Y^2e_5\\}";
  std::vector<PrintedForm> out;
  out.push_back({"robbins/as-printed", "the two bracketed groups after 18Y joined by '+', as typeset",
                 robbins_head() + tail_sum, {}});
  out.push_back({"robbins/product-reading", "the two bracketed groups after 18Y read as a product",
                 robbins_head() + tail_prod, {}});
  for (auto& f : out) f.poly = parse_expression(f.source);
  return out;
}

inline PrintedForm brahmagupta_factor() {
  const std::string s = "(Y-4e_2+e_1^2)^2-64e_4";
  return {"brahmagupta", "e-basis Brahmagupta relation", s, parse_expression(s)};
}

inline PrintedForm quadrilateral_fourAR() {
  const std::string s = "(Z-e_3)^2-e_1^2e_4";
  return {"quadrilateral-4AR", "e-basis quadrilateral relation", s, parse_expression(s)};
}

inline std::vector<PrintedForm> fourAR_variants() {
  const std::string s =
      "Z^3[(Z-e_3)^2-e_{41^2}]^2+e_5[-e_{51^3}+5e_{521}-8e_{53}+(-e_{52^21^4}"
      "-4e_{5321^3}+8e_{52^31^2}-32e_{5421^2}-4e_{53^21^2}+16e_{532^21}-16e_{52^4}"
      "-64e_{5431}+128e_{542^2}-256e_{54^2}-e_{31^2}-8e_{41}+4e_{32}-24e_5)Z"
      "+(2e_{421^4}+28e_{521^3}+4e_{31^3}-8e_{42^21^2}-2e_{3^221^2}+56e_{531^2}-112e_{52^21}"
      "+32e_{4^21^2}-4e_{3^31}+8e_{3^22^2}+448e_{541}-32e_{43^2}+e_{1^2}+4e_2)Z^2"
      "+(-28e_{41^3}+4e_{321^2}-196e_{51^2}+36e_{3^21}-16e_{32^2}+64e_{43})Z^3"
      "+(-2e_{21^2}-60e_{31}+8e_{2^2}-32e_4)Z^4+28e_1Z^5]";
  return {{"fourAR/as-printed", "line-break operators read once; the Z^3 line read with '+'", s, parse_expression(s)}};
}

inline std::vector<PrintedForm> circumradius_variants() {
  const std::string w =
      "2048(-e_{1^3}+4e_{21}-8e_3)R^{14}+32(23e_{1^4}-88e_{21^2}+192e_{31}-16e_{2^2}+64e_4)R^{12}"
      "+64(-e_{1^5}+2e_{21^3}-9e_{31^2}+8e_{2^21}-8e_{41}-12e_{32}-12e_5)R^{10}"
      "+(e_{1^6}+6e_{21^4}+32e_{31^3}-32e_{2^21^2}-32e_{41^2}-32e_{2^3}+256e_{51}+128e_{42}+224e_{3^2})R^8"
      "+2(-e_{31^4}+4e_{41^3}+2e_{321^2}-8e_{51^2}-16e_{3^21}+8e_{32^2}-16e_{52}-32e_{43})R^6"
      "+(2e_{51^3}-2e_{421^2}+e_{3^21^2}+16e_{531}-8e_{52^2}+8e_{431}-2e_{3^22}-16e_{54}+8e_{53})R^4"
      "+(-2e_{31}+e_{2^2}-4e_4)R^2e_5+e_{5^2}";
  const std::string head =
      "R^6[(e_{1^4}-8e_{21^2}+16e_{2^2}-64e_4)R^4+(2e_{31^2}+16e_{41}-8e_{32})R^2"
      "-e_{41^2}+e_{3^2}]^2+e_5W";
  SymbolTable symbols{{"R", poly::var(Var::X)}};
  symbols.emplace("W", parse_expression(w, symbols));
  const MultiPoly in_r = parse_expression(head, symbols);
  return {{"circumradius/as-printed",
           "the R^8 and R^4 lines of W read with '+'; line-break operators read once",
           head + "  where W = " + w, even_to_square(in_r, Var::X, Var::R2)}};
}

}  // namespace printed

struct TermDiff {
  std::string status;  ///< "identical", "identical up to sign" or "differs in N terms"
  std::size_t mismatched = 0;
  std::vector<std::string> lines;  ///< "<monomial>: derived c, printed c"
};

/// Term-level comparison; the derivation is never adjusted to match.
inline TermDiff diff_terms(const MultiPoly& derived, const MultiPoly& printed, const Layout& layout) {
  TermDiff out;
  if (derived == printed) {
    out.status = "identical";
    return out;
  }
  if (derived == -printed) {
    out.status = "identical up to sign";
    return out;
  }
  const MultiPoly delta = derived - printed;
  for (const auto& t : canonical_terms(delta, layout)) {
    mpz_class dc = 0, pc = 0;
    for (const auto& u : derived.terms())
      if (u.mono == t.mono) dc = u.coeff;
    for (const auto& u : printed.terms())
      if (u.mono == t.mono) pc = u.coeff;
    out.lines.push_back(t.mono.to_string() + ": derived " + dc.get_str() + ", printed " + pc.get_str());
  }
  out.mismatched = out.lines.size();
  out.status = "differs in " + std::to_string(out.mismatched) + " terms";
  return out;
}

}  // namespace cyclogon::elim
