#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace kfact {
namespace verify {

/// Deterministic pass/fail record for one suite on one (n, k) cell.
/// Failures carry the first counterexample found.
struct Report {
  std::string suite;
  int n = 0;
  int k = 0;
  long long checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

std::string to_text(const Report& r);
nlohmann::json to_json(const Report& r);

/// The statistic equalities area_k = k*maj_k etc., the hook identity
/// a_i^k - a_i^0 = k*h(i), divisibility by k, and agreement of the upper
/// route, for every factorization in the cell.
Report check_main_theorem(int n, int k);

/// Multiset identities: (inv, coinv) vs (area, coarea) at k = 1,
/// displacement vs inv_k, and (maj_k, comaj_k) vs (inv_k, coinv_k).
Report check_distributions(int n, int k);

/// Exact-rational hook-length identities: the rising-factorial identity in z
/// (k = 1 only) and the product formula for sums of 1/(a^k - a^0).
Report check_hook_identities(int n, int k);

/// Round trips of every bijection in the chain, counts against
/// (kn+1)^(n-1), and brute-force oracle set equality when kn <= 6.
Report check_roundtrips(int n, int k);

/// Enumerated sizes of R_n^k, F_n^k and P_n^k against (kn+1)^(n-1).
Report check_counts(int n, int k);

/// All suites on one cell.
std::vector<Report> check_all(int n, int k);

/// The default verification grid: k=1 with n<=6, k=2 with n<=4, k=3 with n<=3.
std::vector<std::pair<int, int>> default_grid();

}  // namespace verify
}  // namespace kfact
