// Area, circumradius and diagonals of a cyclic pentagon from its sides,
// checked against the degree 7 area polynomial.
#include <cstdio>
#include <cstdlib>

#include "cyclogon/cyclic/formulas.hpp"
#include "cyclogon/cyclic/pentagon.hpp"

int main(int argc, char** argv) {
  using namespace cyclogon;
  std::array<double, 5> sides{1.1, 0.9, 1.0, 1.2, 0.8};
  if (argc == 6)
    for (int i = 0; i < 5; ++i) sides[static_cast<std::size_t>(i)] = std::atof(argv[i + 1]);

  try {
    const auto s = cyclic::construct_cyclic_pentagon(cyclic::SideLengths5<double>(sides));
    std::printf("A = %.15g\nR = %.15g\ncenter inside: %s\n", s.A, s.R, s.center_inside ? "yes" : "no");
    for (std::size_t i = 0; i < 5; ++i) std::printf("d%zu = %.15g\n", i, s.d[i]);

    // Every real root of the area polynomial, with the one matching the convex pentagon flagged.
    const double y = 16 * s.A * s.A;
    for (const auto& r : cyclic::robbins_roots(cyclic::elem_sym(sides), y))
      std::printf("(4A)^2 root %.15g%s\n", r.root, r.convex ? "  <- convex" : "");
  } catch (const Error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }
}
