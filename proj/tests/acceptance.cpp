// Runs the verification suites behind each acceptance criterion and prints
// one "criterion N: PASS|FAIL" line per criterion. Exit status is nonzero if
// any criterion fails.
#include <cstdio>
#include <string>
#include <vector>

#include "mzv/verify.hpp"

using namespace mzv::verify;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> suites;
  /// Wall-time budget in seconds; zero means none.
  double budget;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exact stuffle algebra on partial sums", {"stuffle-exact"}, 60},
      {2, "regularization round trips", {"reduce"}, 30},
      {3, "numeric constants and duality", {"constants"}, 0},
      {4, "regularization theorem for P^(x)", {"regfund"}, 120},
      {5, "generating-function identities", {"genfun"}, 0},
      {6, "gamma-ratio coefficients vs F(1^l;x)", {"aomoto"}, 0},
      {7, "F(k;x) by Taylor, regularized formula and oracle", {"kawbyreg"}, 0},
      {8, "Kawashima relation and F product rule", {"kawashima", "kawstuf"}, 0},
      {9, "Li^(x) and F(k;x;t) identity", {"xecu"}, 0},
      {10, "Taylor coefficients of Hurwitz values", {"taylor"}, 0},
      {11, "t-derivative formulas", {"deriv"}, 0},
      {12, "antipode identity", {"andipode"}, 0},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    bool ok = true;
    double seconds = 0.0;
    std::size_t checks = 0, failures = 0;
    std::string detail;
    for (const std::string& name : c.suites) {
      const CheckReport r = run_suite(default_spec(name));
      seconds += r.wall_seconds;
      checks += r.checks.size();
      failures += r.failures();
      if (!r.passed()) {
        ok = false;
        detail += failure_details(r, 5);
      }
    }
    const bool in_budget = c.budget <= 0 || seconds <= c.budget;
    ok = ok && in_budget && checks > 0;
    std::printf("criterion %d: %s  %s  (%zu checks, %zu failed, %.2f s%s)\n", c.number, ok ? "PASS" : "FAIL", c.title.c_str(),
                checks, failures, seconds, in_budget ? "" : ", over time budget");
    if (!detail.empty()) std::printf("%s", detail.c_str());
    std::fflush(stdout);
    failed += ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
