#pragma once

// Golden coefficient tables: canonical text files written by the derivations
// and read back by the numeric evaluators.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cyclogon/core/error.hpp"
#include "cyclogon/elim/canonical.hpp"
#include "cyclogon/elim/derive.hpp"

namespace cyclogon::io {

namespace fs = std::filesystem;
using elim::Layout;
using poly::MultiPoly;
using poly::Var;

#ifndef CYCLOGON_DEFAULT_GOLDEN_DIR
#define CYCLOGON_DEFAULT_GOLDEN_DIR "golden/v1"
#endif

/// CYCLOGON_GOLDEN_DIR when set, otherwise the directory fixed at build time.
inline fs::path golden_dir() {
  if (const char* env = std::getenv("CYCLOGON_GOLDEN_DIR"); env && *env) return fs::path(env);
  return fs::path(CYCLOGON_DEFAULT_GOLDEN_DIR);
}

inline Layout layout_for(std::string_view target) {
  if (target == "diagonal") return elim::invariant_layout(Var::X);
  if (target == "fourAR") return elim::e_layout(Var::Z);
  if (target == "circumradius") return elim::e_layout(Var::R2);
  if (target == "robbins") return elim::e_layout(Var::Y);
  throw Error(ErrorCode::InvalidArgument, "unknown target '" + std::string(target) + "'");
}

inline std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const fs::path& path, std::string_view text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << text;
}

inline MultiPoly load_polynomial(std::string_view target, const fs::path& dir) {
  const fs::path file = dir / (std::string(target) + ".txt");
  if (!fs::exists(file))
    throw Error(ErrorCode::Io, "missing golden file " + file.string() + " (run `cyclogon derive " + std::string(target) + "`)");
  return elim::from_canonical_text(read_file(file), layout_for(target));
}

inline MultiPoly load_polynomial(std::string_view target) { return load_polynomial(target, golden_dir()); }

inline nlohmann::json report_json(const elim::DerivationReport& r) {
  using nlohmann::json;
  json j;
  j["target"] = r.target;
  j["main_variable"] = std::string(poly::name(r.layout.main));
  j["degree"] = r.degree;
  j["monic"] = r.monic;
  j["content"] = r.content.get_str();
  json prim = json::array();
  for (std::size_t k = r.primitive.size(); k-- > 0;) prim.push_back(r.primitive[k]);
  j["primitive_per_coefficient"] = prim;  // highest power first
  j["match_status"] = r.match_status;
  j["extraneous_factors_removed"] = r.extraneous;
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = checks;
  json variants = json::array();
  for (const auto& v : r.variants)
    variants.push_back({{"name", v.name}, {"reading", v.reading}, {"status", v.diff.status}, {"diff", v.diff.lines}});
  j["variants"] = variants;
  json cols = json::array();
  for (Var v : r.layout.columns()) cols.push_back(std::string(poly::name(v)));
  j["columns"] = cols;
  json terms = json::array();
  for (const auto& t : elim::canonical_terms(r.poly, r.layout)) {
    json ex = json::array();
    for (Var v : r.layout.columns()) ex.push_back(t.mono[v]);
    terms.push_back({{"c", t.coeff.get_str()}, {"exponents", ex}});
  }
  j["terms"] = terms;
  j["passed"] = r.passed();
  return j;
}

inline std::string canonical_file_text(const elim::DerivationReport& r) {
  return elim::to_canonical_text(r.poly, r.layout,
                                 "target: " + r.target + "\ndegree " + std::to_string(r.degree) + " in " +
                                     std::string(poly::name(r.layout.main)));
}

/// Writes <target>.txt and <target>.json into dir.
inline void write_derivation(const elim::DerivationReport& r, const fs::path& dir) {
  write_file(dir / (r.target + ".txt"), canonical_file_text(r));
  write_file(dir / (r.target + ".json"), report_json(r).dump(2) + "\n");
}

}  // namespace cyclogon::io
