#pragma once

// Seeded fuzzing of the identities: one trial per seed, sharded over worker
// threads, reduced in seed order so the report does not depend on scheduling.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "cyclogon/affine/affine_regular.hpp"
#include "cyclogon/core/error.hpp"
#include "cyclogon/cyclic/formulas.hpp"
#include "cyclogon/cyclic/pentagon.hpp"
#include "cyclogon/cyclic/quad.hpp"
#include "cyclogon/cyclic/residuals.hpp"
#include "cyclogon/cyclic/sampling.hpp"
#include "cyclogon/elim/derive.hpp"
#include "cyclogon/elim/printed_forms.hpp"
#include "cyclogon/geom/kernel.hpp"
#include "cyclogon/geom/random.hpp"

namespace cyclogon::check {

enum class Precision { Double, Extended };

struct Trial {
  double relative = 0;  ///< residual in the identity's own relative unit
  bool ok = true;       ///< outcome when the identity is not a plain threshold test
  std::string note;
};

struct Identity {
  std::string name;
  std::string summary;
  double default_tol;
  std::function<Trial(std::uint64_t seed, Precision)> trial;
};

struct Report {
  std::string identity;
  std::size_t trials = 0;
  double tol = 0;
  double max_relative_residual = 0;
  std::size_t failures = 0;
  std::optional<std::uint64_t> failing_seed;  ///< smallest failing seed
  std::string failure_note;
};

namespace detail {

template <std::floating_point Real>
std::vector<geom::Point<Real>> widen(const std::vector<geom::Point<double>>& pts) {
  std::vector<geom::Point<Real>> out;
  for (const auto& p : pts) out.emplace_back(Real(p.x), Real(p.y));
  return out;
}

template <class F>
Trial by_precision(Precision prec, F&& f) {
  return prec == Precision::Extended ? f.template operator()<long double>() : f.template operator()<double>();
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

inline geom::PolygonPath<double> as_path(const std::vector<geom::Point<double>>& pts) { return geom::PolygonPath<double>(pts); }

inline Trial random_points_trial(std::uint64_t seed, Precision prec, std::size_t n, int power,
                                 const std::function<long double(std::span<const geom::Point<long double>>)>& ext,
                                 const std::function<double(std::span<const geom::Point<double>>)>& dbl) {
  geom::ConfigGenerator gen(seed);
  const auto pts = gen.points_in_square(n);
  const double scale = std::pow(geom::configuration_scale<double>(pts), power);
  if (prec == Precision::Extended) {
    const auto w = widen<long double>(pts);
    return {static_cast<double>(std::abs(ext(w))) / scale};
  }
  return {std::abs(dbl(pts)) / scale};
}

/// Random nonsingular linear part with condition number kept moderate.
inline affine::AffineMap<double> random_map(geom::ConfigGenerator& gen) {
  while (true) {
    const std::array<std::array<double, 2>, 2> m{{{gen.uniform(-2, 2), gen.uniform(-2, 2)}, {gen.uniform(-2, 2), gen.uniform(-2, 2)}}};
    const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    double norm2 = 0;
    for (const auto& r : m)
      for (double x : r) norm2 += x * x;
    if (std::abs(det) > 0.2 * norm2 / 2) return affine::AffineMap<double>(m, {gen.uniform(-3, 3), gen.uniform(-3, 3)});
  }
}

inline double lemma62_trial(std::uint64_t seed) {
  geom::ConfigGenerator gen(seed);
  const double radius = gen.uniform(0.5, 2.0);
  const auto pts = gen.concyclic_points(4, radius, 0.1);
  const double a = geom::distance(pts[0], pts[1]), b = geom::distance(pts[1], pts[2]);
  const double c = geom::distance(pts[2], pts[3]), d = geom::distance(pts[3], pts[0]);
  const auto m = cyclic::quad_metrics(a, b, c, d);
  const double four_ar = 4 * m.A * m.R;
  const double shoelace = geom::polygon_area(geom::PolygonPath<double>(pts));
  return std::max({rel(m.e, geom::distance(pts[0], pts[2])), rel(m.f, geom::distance(pts[1], pts[3])),
                   rel(m.A, shoelace), rel(m.R, radius), rel(four_ar, (a * b + c * d) * m.e),
                   rel(m.e * m.f, a * c + b * d), rel(m.f * m.g, a * b + c * d), rel(m.e * m.g, a * d + b * c),
                   rel(four_ar, m.e * m.f * m.g),
                   rel(four_ar * four_ar, (a * b + c * d) * (a * c + b * d) * (a * d + b * c))});
}

inline cyclic::OracleSample oracle_sample(std::uint64_t seed) { return cyclic::oracle_samples(seed, 1).front(); }

inline double poly_at_oracle(const std::string& target, elim::Quantity q, std::uint64_t seed) {
  const auto s = oracle_sample(seed);
  return elim::oracle_residual(cyclic::golden(target), io::layout_for(target), q, s.sides, s.sol);
}

}  // namespace detail

inline const std::vector<Identity>& identities() {
  using detail::by_precision;
  using detail::random_points_trial;
  using P = Precision;
  static const std::vector<Identity> list = {
      {"gauss", "A^2 - c1 A + c2 over five random points, / scale^2", 1e-10,
       [](std::uint64_t seed, P prec) {
         geom::ConfigGenerator gen(seed);
         const auto pts = gen.points_in_square(5);
         const double scale = geom::configuration_scale<double>(pts);
         return by_precision(prec, [&]<class R>() {
           return Trial{static_cast<double>(std::abs(geom::gauss_residual(geom::PolygonPath<R>(detail::widen<R>(pts))))) /
                        (scale * scale)};
         });
       }},
      {"monge", "(012)(034)+(014)(023)-(013)(024), / scale^2", 1e-10,
       [](std::uint64_t seed, P prec) {
         return random_points_trial(
             seed, prec, 5, 2, [](auto p) { return geom::monge_residual(p); }, [](auto p) { return geom::monge_residual(p); });
       }},
      {"prouhet", "six-point product identity, / scale^3", 1e-10,
       [](std::uint64_t seed, P prec) {
         return random_points_trial(
             seed, prec, 6, 3, [](auto p) { return geom::prouhet_residual(p); }, [](auto p) { return geom::prouhet_residual(p); });
       }},
      {"theorem31", "the four pentagon/star identities, max / scale^2", 1e-10,
       [](std::uint64_t seed, P prec) {
         const auto f = [](auto p) {
           const auto r = geom::generalized_gauss_residuals(p);
           return std::max({std::abs(r[0]), std::abs(r[1]), std::abs(r[2]), std::abs(r[3])});
         };
         return random_points_trial(seed, prec, 5, 2, f, f);
       }},
      {"gauss_roots", "roots of the area quadratic against A and A - A' on convex pentagons", 1e-9,
       [](std::uint64_t seed, P) {
         geom::ConfigGenerator gen(seed);
         const auto path = gen.convex_polygon(5);
         const double a = geom::polygon_area(path), a_star = geom::star_pentagon_area(path);
         const auto r = geom::gauss_roots(geom::vertex_triangle_areas(path));
         return Trial{std::max(detail::rel(r.root_hi, a), std::abs(r.root_lo - (a - a_star)) / a)};
       }},
      {"border", "border quadrilateral relation, / scale^2", 1e-10,
       [](std::uint64_t seed, P prec) {
         geom::ConfigGenerator gen(seed);
         const auto pts = gen.points_in_square(5);
         const double scale = geom::configuration_scale<double>(pts);
         return by_precision(prec, [&]<class R>() {
           return Trial{static_cast<double>(std::abs(geom::border_quadrilateral_residual(geom::PolygonPath<R>(detail::widen<R>(pts))))) /
                        (scale * scale)};
         });
       }},
      {"ptolemy", "side/circumradius products on convex pentagons (dimensionless)", 1e-9,
       [](std::uint64_t seed, P) {
         geom::ConfigGenerator gen(seed);
         const auto path = gen.convex_polygon(5);
         return Trial{std::abs(geom::ptolemy_circumradius_residual(path.vertices()))};
       }},
      {"hexagon41", "quadratic hexagon relation on convex hexagons, / scale^3", 1e-9,
       [](std::uint64_t seed, P prec) {
         geom::ConfigGenerator gen(seed);
         const auto path = gen.convex_polygon(6);
         const double scale = geom::configuration_scale(path.vertices());
         const std::vector<geom::Point<double>> pts(path.vertices().begin(), path.vertices().end());
         return by_precision(prec, [&]<class R>() {
           const auto r = geom::hexagon_theorem41_residual(geom::PolygonPath<R>(detail::widen<R>(pts)));
           return Trial{static_cast<double>(std::abs(r.value)) / (scale * scale * scale)};
         });
       }},
      {"hexagon45", "two-dissection hexagon identity over random points, / scale^2", 1e-12,
       [](std::uint64_t seed, P prec) {
         geom::ConfigGenerator gen(seed);
         const auto pts = gen.points_in_square(6);
         const double scale = geom::configuration_scale<double>(pts);
         return by_precision(prec, [&]<class R>() {
           return Trial{static_cast<double>(std::abs(geom::hexagon_identity45_residual(geom::PolygonPath<R>(detail::widen<R>(pts))))) /
                        (scale * scale)};
         });
       }},
      {"lemma62", "cyclic quadrilateral diagonals, area, radius and Ptolemy products vs a circle construction", 1e-10,
       [](std::uint64_t seed, P) { return Trial{detail::lemma62_trial(seed)}; }},
      {"oracle", "reconstructed pentagon sides and central-angle sum", 1e-12,
       [](std::uint64_t seed, P) {
         const auto s = detail::oracle_sample(seed);
         const auto path = s.sol.path();
         double worst = 0, angle = 0;
         for (long v = 0; v < 5; ++v)
           worst = std::max(worst, detail::rel(geom::distance(path.at_cyclic(v), path.at_cyclic(v + 1)),
                                               s.sides[static_cast<std::size_t>((v + 3) % 5)]));
         for (double t : s.sol.theta) angle += t;
         return Trial{std::max(worst, std::abs(angle - 2 * std::numbers::pi) / (2 * std::numbers::pi))};
       }},
      {"diagonal", "diagonal septic at the oracle diagonal", 1e-6,
       [](std::uint64_t seed, P) {
         const auto s = detail::oracle_sample(seed);
         return Trial{cyclic::diagonal_septic_residual(s.sol.d[0], s.sides).relative};
       }},
      {"cubic_quadratic_quartic", "cubic and quadratic in X with 4AR, both quartics with R^2", 1e-6,
       [](std::uint64_t seed, P) {
         const auto s = detail::oracle_sample(seed);
         const auto r = cyclic::cubic_quadratic_quartic_residuals(s.sol.d[0], s.sol.R, s.sol.A, s.sides);
         return Trial{std::max({r.cubic.relative, r.quadratic.relative, r.quartic_triangle.relative,
                                r.quartic_quadrilateral.relative})};
       }},
      {"area_in_x", "area relation in X at the oracle diagonal and area", 1e-6,
       [](std::uint64_t seed, P) {
         const auto s = detail::oracle_sample(seed);
         return Trial{cyclic::area_poly_in_X_residual(s.sol.d[0], s.sol.A, s.sides).relative};
       }},
      {"robbins", "area polynomial at (4A)^2", 1e-6,
       [](std::uint64_t seed, P) { return Trial{detail::poly_at_oracle("robbins", elim::Quantity::AreaSquared, seed)}; }},
      {"robbins_root", "flagged real root of the area polynomial against the oracle (4A)^2", 1e-6,
       [](std::uint64_t seed, P) {
         const auto s = detail::oracle_sample(seed);
         const double y = 16 * s.sol.A * s.sol.A;
         const auto roots = cyclic::robbins_roots(cyclic::elem_sym(s.sides), y);
         for (const auto& r : roots)
           if (r.convex) return Trial{detail::rel(r.root, y)};
         return Trial{1, false, "no real root"};
       }},
      {"fourAR", "degree 7 polynomial in (4AR)^2", 1e-6,
       [](std::uint64_t seed, P) { return Trial{detail::poly_at_oracle("fourAR", elim::Quantity::FourARSquared, seed)}; }},
      {"circumradius", "degree 7 polynomial in R^2", 1e-6,
       [](std::uint64_t seed, P) { return Trial{detail::poly_at_oracle("circumradius", elim::Quantity::RadiusSquared, seed)}; }},
      {"theorem68", "A = N/D from vertex-triangle areas against the oracle area", 1e-6,
       [](std::uint64_t seed, P) {
         const auto s = detail::oracle_sample(seed);
         const double a = cyclic::area_rational_T68(cyclic::SideLengths5<double>(s.sides), geom::vertex_triangle_areas(s.sol.path()));
         return Trial{detail::rel(a, s.sol.A)};
       }},
      {"degeneration", "a4 = 0: septic, (4AR)^2 and (4A)^2 polynomials at quadrilateral values", 1e-6,
       [](std::uint64_t seed, P) {
         const auto q = elim::quad_samples(seed, 1).front();
         const double z = std::pow(4 * q.m.A * q.m.R, 2), y = 16 * q.m.A * q.m.A;
         const auto& fr = cyclic::golden("fourAR");
         const auto& rb = cyclic::golden("robbins");
         return Trial{std::max({cyclic::diagonal_septic_residual(q.X, q.sides).relative,
                                elim::quad_residual(fr, io::layout_for("fourAR"), z, q.sides),
                                elim::quad_residual(rb, io::layout_for("robbins"), y, q.sides),
                                elim::quad_residual(elim::printed::quadrilateral_fourAR().poly, elim::e_layout(poly::Var::Z), z, q.sides),
                                elim::quad_residual(elim::printed::brahmagupta_factor().poly, elim::e_layout(poly::Var::Y), y, q.sides)})};
       }},
      {"affine", "affine images of the regular pentagon and hexagon classify as affine regular", 1e-9,
       [](std::uint64_t seed, P) {
         geom::ConfigGenerator gen(seed);
         const auto map = detail::random_map(gen);
         const auto pent = affine::is_affine_regular_pentagon(affine::affine_image_regular(5, map));
         const auto hex = affine::is_affine_regular_hexagon(affine::affine_image_regular(6, map));
         const bool ok = pent.kind == affine::RegularityKind::AffineRegular && hex.kind == affine::RegularityKind::AffineRegular;
         return Trial{std::abs(pent.diagonal_side_ratio - affine::kGoldenRatio<double>), ok,
                      ok ? "" : std::string("pentagon ") + std::string(to_string(pent.kind)) + ", hexagon " +
                                    std::string(to_string(hex.kind))};
       }},
      {"affine_perturbed", "one vertex displaced by at least 1e-3 of the diameter classifies as not regular", 1e-9,
       [](std::uint64_t seed, P) {
         geom::ConfigGenerator gen(seed);
         const auto map = detail::random_map(gen);
         bool ok = true;
         double smallest_defect = 1e300;
         for (int n : {5, 6}) {
           const auto path = affine::affine_image_regular(n, map);
           std::vector<geom::Point<double>> pts(path.vertices().begin(), path.vertices().end());
           const double diam = std::sqrt(geom::configuration_scale<double>(pts));
           const double r = gen.uniform(1e-3, 1e-2) * diam, phi = gen.uniform(0, 2 * std::numbers::pi);
           auto& v = pts[static_cast<std::size_t>(gen.uniform(0, n)) % pts.size()];
           v = v + geom::Point<double>(r * std::cos(phi), r * std::sin(phi));
           const geom::PolygonPath<double> bent(pts);
           try {
             const auto verdict = n == 5 ? affine::is_affine_regular_pentagon(bent) : affine::is_affine_regular_hexagon(bent);
             ok = ok && verdict.kind == affine::RegularityKind::NotRegular;
             double defect = 0;
             for (const auto& [name, value] : verdict.residuals) defect = std::max(defect, value);
             smallest_defect = std::min(smallest_defect, defect);
           } catch (const Error& e) {
             // A perturbation that breaks convexity is a rejection too.
             if (e.code() != ErrorCode::NonConvex) throw;
           }
         }
         return Trial{smallest_defect, ok, ok ? "" : "perturbed polygon accepted as regular"};
       }},
  };
  return list;
}

inline const Identity& find_identity(const std::string& name) {
  for (const auto& id : identities())
    if (id.name == name) return id;
  std::string known;
  for (const auto& id : identities()) known += (known.empty() ? "" : ", ") + id.name;
  throw Error(ErrorCode::InvalidArgument, "unknown identity '" + name + "' (known: " + known + ")");
}

/// Identities whose result is a classification carry their own ok flag; the
/// rest fail when the relative residual exceeds tol.
inline bool passes(const Identity& id, const Trial& t, double tol) {
  if (id.name == "affine_perturbed") return t.ok;
  return t.ok && std::isfinite(t.relative) && t.relative <= tol;
}

struct RunOptions {
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  std::optional<double> tol;
  Precision precision = Precision::Double;
  unsigned threads = 0;  ///< 0: hardware concurrency
};

inline Report run(const Identity& id, const RunOptions& opt) {
  if (opt.trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
  const double tol = opt.tol.value_or(id.default_tol);
  if (!(tol > 0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  std::vector<Trial> results(opt.trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < opt.trials;) {
      try {
        results[i] = id.trial(opt.seed + i, opt.precision);
      } catch (const Error& e) {
        results[i] = {std::numeric_limits<double>::infinity(), false, std::string(to_string(e.code())) + ": " + e.what()};
      }
    }
  };
  unsigned n = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, opt.trials));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Report rep{id.name, opt.trials, tol};
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& t = results[i];
    if (std::isfinite(t.relative)) rep.max_relative_residual = std::max(rep.max_relative_residual, t.relative);
    if (!passes(id, t, tol)) {
      if (!rep.failing_seed) {
        rep.failing_seed = opt.seed + i;
        rep.failure_note = t.note.empty() ? "relative residual " + elim::fmt(t.relative) : t.note;
      }
      ++rep.failures;
    }
  }
  return rep;
}

inline Report run(const std::string& name, const RunOptions& opt) { return run(find_identity(name), opt); }

}  // namespace cyclogon::check
