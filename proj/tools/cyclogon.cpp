// cyclogon: cyclic polygon areas, fuzzing of the identities, and the
// symbolic derivations behind the golden coefficient tables.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cyclogon/check/identities.hpp"
#include "cyclogon/core/error.hpp"
#include "cyclogon/cyclic/formulas.hpp"
#include "cyclogon/cyclic/pentagon.hpp"
#include "cyclogon/cyclic/quad.hpp"
#include "cyclogon/cyclic/residuals.hpp"
#include "cyclogon/elim/derive.hpp"
#include "cyclogon/io/golden.hpp"
#include "cyclogon/io/input.hpp"

namespace {

using nlohmann::json;
using namespace cyclogon;

enum Exit { kOk = 0, kFailure = 1, kNoPolygon = 2, kMismatch = 3, kCheckFailed = 4, kDeriveFailed = 5 };

struct Config {
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  std::optional<double> tol;
  std::string precision = "double";
  std::string output = "json";
  std::string out_dir = "derived";
  unsigned threads = 0;
};

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// Flattens nested objects and arrays into dotted keys.
void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else if (j.is_number_float()) {
    out.emplace_back(prefix, g17(j.get<double>()));
  } else if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

void emit(const json& j, const Config& cfg) {
  if (cfg.output == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  const auto rows = j.is_array() ? j : json::array({j});
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<std::pair<std::string, std::string>> kv;
    flatten(rows[r], "", kv);
    if (cfg.output == "text") {
      for (const auto& [k, v] : kv) std::cout << k << ": " << v << "\n";
      if (r + 1 < rows.size()) std::cout << "\n";
      continue;
    }
    auto quote = [](const std::string& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string q = "\"";
      for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
      return q + "\"";
    };
    if (r == 0) {
      for (std::size_t i = 0; i < kv.size(); ++i) std::cout << (i ? "," : "") << quote(kv[i].first);
      std::cout << "\n";
    }
    for (std::size_t i = 0; i < kv.size(); ++i) std::cout << (i ? "," : "") << quote(kv[i].second);
    std::cout << "\n";
  }
}

json residual_json(const cyclic::PolyResidual<double>& r) {
  return {{"name", r.name}, {"value", r.value}, {"scale", r.scale}, {"relative", r.relative}};
}

json roots_json(const std::vector<cyclic::PolyRoot>& roots) {
  json arr = json::array();
  for (const auto& r : roots) arr.push_back({{"root", r.root}, {"multiplicity", r.multiplicity}, {"flagged", r.convex}});
  return arr;
}

std::optional<double> flagged(const std::vector<cyclic::PolyRoot>& roots) {
  for (const auto& r : roots)
    if (r.convex) return r.root;
  return std::nullopt;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

/// The sides as given, plus the four nonzero ones in cyclic order when the
/// input describes a quadrilateral (four values, or five with one zero).
struct SideInput {
  std::array<double, 5> a{};  ///< pentagon labeling; a4 = 0 for a quadrilateral given as four sides
  std::optional<std::array<double, 4>> quad;
};

SideInput read_sides(const std::vector<std::string>& args) {
  const auto v = io::parse_sides(args);
  SideInput in;
  if (v.size() == 4) {
    // Quadrilateral b0..b3 in cyclic order maps to a2, a3, a0, a1 with a4 = 0.
    in.quad = std::array<double, 4>{v[0], v[1], v[2], v[3]};
    in.a = {v[2], v[3], v[0], v[1], 0.0};
    return in;
  }
  if (v.size() != 5) throw Error(ErrorCode::InvalidArgument, "expected 5 side lengths (or 4 for a quadrilateral)");
  for (double x : v)
    if (!(x >= 0)) throw Error(ErrorCode::InvalidArgument, "side lengths must be nonnegative");
  const auto zeros = std::count(v.begin(), v.end(), 0.0);
  if (zeros > 1) throw Error(ErrorCode::NoConvexCyclicPolygon, "at most one side may be zero");
  if (zeros == 1) {
    // Edge (v, v+1) carries a_{v+3}; drop the zero edge and keep the cyclic order.
    std::array<double, 4> b{};
    std::size_t k = 0;
    const std::size_t zero = static_cast<std::size_t>(std::find(v.begin(), v.end(), 0.0) - v.begin());
    for (std::size_t e = 1; e <= 4; ++e) b[k++] = v[(zero + e) % 5];
    in.quad = b;
    in.a = {b[2], b[3], b[0], b[1], 0.0};
    return in;
  }
  std::copy(v.begin(), v.end(), in.a.begin());
  return in;
}

cyclic::CyclicPentagonSolution<double> solve(const std::array<double, 5>& a, const Config& cfg) {
  if (cfg.precision == "extended") {
    std::array<long double, 5> w{};
    for (std::size_t i = 0; i < 5; ++i) w[i] = a[i];
    const auto s = cyclic::construct_cyclic_pentagon(cyclic::SideLengths5<long double>(w));
    cyclic::CyclicPentagonSolution<double> out;
    out.R = static_cast<double>(s.R);
    out.A = static_cast<double>(s.A);
    out.center_inside = s.center_inside;
    for (std::size_t i = 0; i < 5; ++i) {
      out.d[i] = static_cast<double>(s.d[i]);
      out.theta[i] = static_cast<double>(s.theta[i]);
      out.vertices[i] = {static_cast<double>(s.vertices[i].x), static_cast<double>(s.vertices[i].y)};
    }
    return out;
  }
  return cyclic::construct_cyclic_pentagon(cyclic::SideLengths5<double>(a));
}

cyclic::QuadMetrics<double> quad_of(const std::array<double, 4>& b) {
  try {
    return cyclic::quad_metrics(b[0], b[1], b[2], b[3]);
  } catch (const Error& e) {
    throw Error(ErrorCode::NoConvexCyclicPolygon, e.what());
  }
}

json solution_json(const cyclic::CyclicPentagonSolution<double>& s) {
  return {{"R", s.R}, {"A", s.A}, {"d", s.d}, {"theta", s.theta}, {"center_inside", s.center_inside}};
}

/// Shared tail of area/radius/diagonals: residual within tol and the flagged
/// root consistent with the oracle.
int verdict(json& out, double residual, std::optional<double> root, double oracle, double tol) {
  const bool res_ok = residual <= tol;
  const bool root_ok = root && rel(*root, oracle) <= tol;
  out["residual_ok"] = res_ok;
  out["root_matches_oracle"] = root_ok;
  if (!root_ok) return kMismatch;
  return res_ok ? kOk : kMismatch;
}

int cmd_area(const std::vector<std::string>& args, const Config& cfg) {
  const double tol = cfg.tol.value_or(1e-6);
  const auto in = read_sides(args);
  json out;
  out["command"] = "area";
  out["sides"] = in.a;
  const auto e = cyclic::elem_sym(in.a);
  double A = 0;
  if (in.quad) {
    const auto m = quad_of(*in.quad);
    A = m.A;
    out["path"] = "quadrilateral";
    out["quadrilateral_sides"] = *in.quad;
    out["A"] = A;
    auto as = cyclic::detail::e_assignment(e);
    as.set(poly::Var::Y, 16 * A * A);
    out["brahmagupta_factor"] = residual_json(
        cyclic::make_residual("brahmagupta_factor", poly::evaluate_balanced(elim::printed::brahmagupta_factor().poly, as.values())));
  } else {
    const auto s = solve(in.a, cfg);
    A = s.A;
    out["path"] = "pentagon";
    out["oracle"] = solution_json(s);
    out["A"] = A;
    try {
      out["A_rational_vertex_areas"] = cyclic::area_rational_T68(cyclic::SideLengths5<double>(in.a), geom::vertex_triangle_areas(s.path()));
    } catch (const Error& err) {
      out["A_rational_vertex_areas"] = std::string(to_string(err.code()));
    }
  }
  const double y = 16 * A * A;
  const auto roots = cyclic::robbins_roots(e, y);
  const auto res = cyclic::robbins_residual(y, e);
  out["Y_oracle"] = y;
  out["roots_Y"] = roots_json(roots);
  if (auto r = flagged(roots)) {
    out["Y_root"] = *r;
    out["A_from_root"] = std::sqrt(std::max(0.0, *r)) / 4;
  }
  out["residual"] = residual_json(res);
  const int code = verdict(out, res.relative, flagged(roots), y, tol);
  emit(out, cfg);
  return code;
}

int cmd_radius(const std::vector<std::string>& args, const Config& cfg) {
  const double tol = cfg.tol.value_or(1e-6);
  const auto in = read_sides(args);
  json out;
  out["command"] = "radius";
  out["sides"] = in.a;
  double R = 0;
  if (in.quad) {
    R = quad_of(*in.quad).R;
    out["path"] = "quadrilateral";
    out["quadrilateral_sides"] = *in.quad;
  } else {
    const auto s = solve(in.a, cfg);
    R = s.R;
    out["path"] = "pentagon";
    out["oracle"] = solution_json(s);
  }
  const auto e = cyclic::elem_sym(in.a);
  const double r2 = R * R;
  const auto roots = cyclic::real_roots(cyclic::golden("circumradius"), poly::Var::R2, cyclic::exact_values(e), r2);
  const auto res = cyclic::circumradius_poly_residual(r2, e);
  out["R"] = R;
  out["R2_oracle"] = r2;
  out["roots_R2"] = roots_json(roots);
  if (auto r = flagged(roots)) out["R_from_root"] = std::sqrt(std::max(0.0, *r));
  out["residual"] = residual_json(res);
  const int code = verdict(out, res.relative, flagged(roots), r2, tol);
  emit(out, cfg);
  return code;
}

int cmd_diagonals(const std::vector<std::string>& args, const Config& cfg) {
  const double tol = cfg.tol.value_or(1e-6);
  const auto in = read_sides(args);
  json out;
  out["command"] = "diagonals";
  out["sides"] = in.a;
  int code = kOk;
  auto one = [&](const std::array<double, 5>& a, double d, const std::string& label) {
    const auto roots = cyclic::real_roots(cyclic::relations::diagonal_septic(), poly::Var::X, cyclic::exact_param_values(a), d);
    const auto res = cyclic::diagonal_septic_residual(d, a);
    json j{{"label", label}, {"oracle", d}, {"roots", roots_json(roots)}, {"residual", residual_json(res)}};
    if (auto r = flagged(roots)) j["root"] = *r;
    code = std::max(code, verdict(j, res.relative, flagged(roots), d, tol));
    return j;
  };
  json list = json::array();
  if (in.quad) {
    const auto m = quad_of(*in.quad);
    out["path"] = "quadrilateral";
    out["quadrilateral_sides"] = *in.quad;
    out["e"] = m.e;
    out["f"] = m.f;
    out["g"] = m.g;
    // e separates (b0, b1) from (b2, b3), which is d0 once the zero side is a4.
    list.push_back(one(in.a, m.e, "d0"));
  } else {
    const auto s = solve(in.a, cfg);
    out["path"] = "pentagon";
    out["oracle"] = solution_json(s);
    for (std::size_t i = 0; i < 5; ++i) {
      // Relabel so that diagonal i becomes d0.
      std::array<double, 5> r{};
      for (std::size_t k = 0; k < 5; ++k) r[k] = in.a[(k + i) % 5];
      list.push_back(one(r, s.d[i], "d" + std::to_string(i)));
    }
  }
  out["diagonals"] = list;
  emit(out, cfg);
  return code;
}

json report_summary(const check::Report& r) {
  json j{{"identity", r.identity},
         {"trials", r.trials},
         {"tol", r.tol},
         {"max_relative_residual", r.max_relative_residual},
         {"failures", r.failures}};
  if (r.failing_seed) {
    j["failing_seed"] = *r.failing_seed;
    j["failure"] = r.failure_note;
  }
  return j;
}

int cmd_check(const std::string& name, const Config& cfg) {
  check::RunOptions opt;
  opt.seed = cfg.seed;
  opt.trials = cfg.trials;
  opt.tol = cfg.tol;
  opt.precision = cfg.precision == "extended" ? check::Precision::Extended : check::Precision::Double;
  opt.threads = cfg.threads;
  std::vector<check::Report> reports;
  if (name == "all") {
    for (const auto& id : check::identities()) {
      auto o = opt;
      o.tol = std::nullopt;
      reports.push_back(check::run(id, o));
    }
  } else {
    reports.push_back(check::run(name, opt));
  }
  json out = json::array();
  bool failed = false;
  for (const auto& r : reports) {
    out.push_back(report_summary(r));
    if (r.failures) {
      failed = true;
      std::cerr << "check " << r.identity << ": " << r.failures << " failures; reproduce with: cyclogon check "
                << r.identity << " --seed " << *r.failing_seed << " --trials 1\n";
    }
  }
  emit(reports.size() == 1 ? out[0] : out, cfg);
  return failed ? kCheckFailed : kOk;
}

int cmd_derive(const std::string& target, const Config& cfg) {
  const std::vector<std::string> targets =
      target == "all" ? std::vector<std::string>{"diagonal", "fourAR", "circumradius", "robbins"} : std::vector<std::string>{target};
  elim::DeriveOptions opt;
  opt.seed = cfg.seed;
  if (cfg.tol) opt.tol = *cfg.tol;
  json out = json::array();
  bool failed = false;
  for (const auto& t : targets) {
    json j;
    try {
      const auto r = elim::derive(t, opt);
      io::write_derivation(r, cfg.out_dir);
      j = io::report_json(r);
      j.erase("terms");
      j["files"] = {(std::filesystem::path(cfg.out_dir) / (t + ".txt")).string(),
                    (std::filesystem::path(cfg.out_dir) / (t + ".json")).string()};
      if (!r.passed()) failed = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::MismatchWithPaperForm && e.code() != ErrorCode::DegreeMismatch &&
          e.code() != ErrorCode::ExtraneousFactorUnremovable)
        throw;
      j = {{"target", t}, {"passed", false}, {"error", std::string(to_string(e.code()))}, {"detail", e.what()}};
      failed = true;
    }
    out.push_back(j);
  }
  emit(targets.size() == 1 ? out[0] : out, cfg);
  return failed ? kDeriveFailed : kOk;
}

int cmd_specialize(const std::string& target, const std::string& zero, const Config& cfg) {
  const auto var = poly::var_from_name(zero);
  if (!var) throw Error(ErrorCode::InvalidArgument, "unknown variable '" + zero + "'");
  const auto f = cyclic::golden(target).specialize(*var, 0);
  const auto layout = io::layout_for(target);
  json out{{"target", target}, {"zero", zero}, {"terms", elim::canonical_terms(f, layout).size()}};
  json div = json::object();
  for (const auto& form : {elim::printed::brahmagupta_factor(), elim::printed::quadrilateral_fourAR()}) {
    const auto vars = form.poly.variables();
    if (std::find(vars.begin(), vars.end(), layout.main) == vars.end()) continue;
    div[form.name] = divides(form.poly, f);
  }
  out["divisible_by"] = div;
  out["canonical"] = elim::to_canonical_text(f, layout, target + " with " + zero + " = 0");
  emit(out, cfg);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cyclic polygon areas, identity fuzzing and symbolic derivations"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--seed", cfg.seed, "base seed; trial i uses seed + i")->capture_default_str();
  app.add_option("--trials", cfg.trials, "number of fuzzing trials")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--tol", cfg.tol, "tolerance (default: per command or identity)")->check(CLI::PositiveNumber);
  app.add_option("--precision", cfg.precision, "floating point width")->check(CLI::IsMember({"double", "extended"}))->capture_default_str();
  app.add_option("--output", cfg.output, "output format")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
  app.add_option("--out-dir", cfg.out_dir, "directory for derived files")->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker threads for check (0: all cores)")->capture_default_str();
  app.fallthrough();

  std::vector<std::string> sides;
  auto* area = app.add_subcommand("area", "area of the convex cyclic polygon with the given sides");
  area->add_option("sides", sides, "5 sides (4 or one zero for a quadrilateral); CSV or JSON array accepted")->required();
  auto* radius = app.add_subcommand("radius", "circumradius");
  radius->add_option("sides", sides, "side lengths")->required();
  auto* diagonals = app.add_subcommand("diagonals", "diagonals and the septic in each");
  diagonals->add_option("sides", sides, "side lengths")->required();

  std::string identity;
  auto* check = app.add_subcommand("check", "fuzz an identity over seeded random configurations");
  std::string names;
  for (const auto& id : check::identities()) names += " " + id.name;
  check->add_option("identity", identity, "one of:" + names + ", or all")->required();

  std::string target;
  auto* derive = app.add_subcommand("derive", "run a symbolic derivation and write its files");
  derive->add_option("target", target, "diagonal, fourAR, circumradius, robbins or all")
      ->required()
      ->check(CLI::IsMember({"diagonal", "fourAR", "circumradius", "robbins", "all"}));

  std::string zero = "e5";
  auto* spec = app.add_subcommand("specialize", "set one variable of a golden polynomial to zero");
  spec->add_option("target", target, "fourAR, circumradius, robbins or diagonal")
      ->required()
      ->check(CLI::IsMember({"diagonal", "fourAR", "circumradius", "robbins"}));
  spec->add_option("--zero", zero, "variable set to zero")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; usage errors join the generic error code.
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*area) return cmd_area(sides, cfg);
    if (*radius) return cmd_radius(sides, cfg);
    if (*diagonals) return cmd_diagonals(sides, cfg);
    if (*check) return cmd_check(identity, cfg);
    if (*derive) return cmd_derive(target, cfg);
    if (*spec) return cmd_specialize(target, zero, cfg);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    if (e.code() == ErrorCode::NoConvexCyclicPolygon) return kNoPolygon;
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
