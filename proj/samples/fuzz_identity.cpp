// Fuzz one identity from the registry, e.g. `fuzz_identity monge 5000`.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "cyclogon/check/identities.hpp"

int main(int argc, char** argv) {
  using namespace cyclogon;
  if (argc < 2) {
    for (const auto& id : check::identities()) std::printf("%-24s %s\n", id.name.c_str(), id.summary.c_str());
    return 0;
  }
  check::RunOptions opt;
  if (argc > 2) opt.trials = std::strtoul(argv[2], nullptr, 10);
  const auto r = check::run(argv[1], opt);
  std::printf("%s: %zu trials, worst %.3g (tol %.1g), %zu failures\n", r.identity.c_str(), r.trials,
              r.max_relative_residual, r.tol, r.failures);
  return r.failures ? 1 : 0;
}
