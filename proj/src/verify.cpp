#include "kfact/verify.hpp"

#include <algorithm>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

#include "kfact/archmap.hpp"
#include "kfact/enumerate.hpp"
#include "kfact/factorization.hpp"
#include "kfact/forest.hpp"
#include "kfact/parking.hpp"

namespace kfact {
namespace verify {

using rational = boost::multiprecision::cpp_rational;

std::string to_text(const Report& r) {
  std::string out = r.suite + " n=" + std::to_string(r.n) + " k=" + std::to_string(r.k) +
                    " checked=" + std::to_string(r.checked) + " " +
                    (r.ok() ? "pass" : "FAIL");
  for (const auto& f : r.failures) out += "\n  counterexample: " + f;
  return out;
}

nlohmann::json to_json(const Report& r) {
  return nlohmann::json{
      {"suite", r.suite}, {"n", r.n}, {"k", r.k}, {"checked", r.checked},
      {"failures", r.failures}};
}

namespace {

void record(Report& r, const std::string& what) {
  if (r.failures.empty()) r.failures.push_back(what);  // keep the first counterexample
}

std::string describe(const KFactorization& f) { return kfact::to_text(f); }

}  // namespace

Report check_main_theorem(int n, int k) {
  Report r{"main", n, k};
  for (const KFactorization& f : enumerate::k_factorizations(n, k)) {
    ++r.checked;
    const KForest forest = jcdal(f);
    const ForestStats s = stats(forest);
    const AreaStats a = area_stats(f);
    if (a.area != k * s.maj_k || a.coarea != k * s.comaj_k || a.semiarea != k * s.maj ||
        a.cosemiarea != k * s.comaj) {
      record(r, describe(f) + " statistic equalities fail");
      continue;
    }
    if (a.area % k || a.coarea % k || a.semiarea % k || a.cosemiarea % k) {
      record(r, describe(f) + " statistic not divisible by k");
      continue;
    }
    bool hooks_ok = true;
    for (int i = 1; i <= n; ++i) {
      const auto& e = f.factors[i - 1].entries;
      if (e[k] - e[0] != k * s.h[i]) hooks_ok = false;
    }
    if (!hooks_ok) {
      record(r, describe(f) + " hook identity fails");
      continue;
    }
    if (jcdal_via_upper(f) != forest)
      record(r, describe(f) + " upper route disagrees with lower route");
  }
  return r;
}

Report check_distributions(int n, int k) {
  Report r{"dist", n, k};

  const auto forests = enumerate::k_forests(n, k);
  const auto facts = enumerate::k_factorizations(n, k);
  const auto parks = enumerate::k_parking_functions(n, k);
  r.checked = static_cast<long long>(forests.size());

  if (k == 1) {
    std::map<std::pair<long long, long long>, long long> lhs, rhs;
    for (const KForest& f : forests) {
      const ForestStats s = stats(f);
      ++lhs[{s.inv, s.coinv}];
    }
    for (const KFactorization& f : facts) {
      const AreaStats a = area_stats(f);
      ++rhs[{a.area, a.coarea}];
    }
    if (lhs != rhs) record(r, "(inv,coinv) and (area,coarea) joint distributions differ");
  }

  std::map<long long, long long> disp_dist, invk_dist;
  for (const ParkingFunction& p : parks) ++disp_dist[disp(p)];
  for (const KForest& f : forests) ++invk_dist[stats(f).inv_k];
  if (disp_dist != invk_dist) record(r, "displacement and inv_k distributions differ");

  std::map<std::pair<long long, long long>, long long> majs, invs;
  for (const KForest& f : forests) {
    const ForestStats s = stats(f);
    ++majs[{s.maj_k, s.comaj_k}];
    ++invs[{s.inv_k, s.coinv_k}];
  }
  if (majs != invs) record(r, "(maj_k,comaj_k) and (inv_k,coinv_k) distributions differ");

  return r;
}

Report check_hook_identities(int n, int k) {
  Report r{"hooks", n, k};

  if (k == 1) {
    // sum over R_n of z^{c(F)} / prod h(v) equals z(z+1)...(z+n-1); the
    // degree bound makes equality at z = 1..n+1 conclusive.
    const auto all = enumerate::forests(n);
    for (long long z = 1; z <= n + 1; ++z) {
      rational sum = 0;
      for (const RootedForest& f : all) {
        const auto h = hook_sizes(f);
        rational term = 1;
        int components = 0;
        for (int v = 1; v <= n; ++v) {
          term /= h[v];
          if (f.parent[v] == 0) ++components;
        }
        for (int c = 0; c < components; ++c) term *= z;
        sum += term;
      }
      rational rising = 1;
      for (long long i = 0; i < n; ++i) rising *= rational(z + i);
      if (sum != rising) {
        record(r, "rising-factorial identity fails at z=" + std::to_string(z));
        break;
      }
    }
    r.checked += static_cast<long long>(all.size());
  }

  // sum over F_n^k of prod 1/(a_i^k - a_i^0) = (k+1)(2k+1)...((n-1)k+1) / k^n.
  rational sum = 0;
  long long count = 0;
  for (const KFactorization& f : enumerate::k_factorizations(n, k)) {
    rational term = 1;
    for (const Cycle& c : f.factors) term /= c.entries[k] - c.entries[0];
    sum += term;
    ++count;
  }
  rational expected = 1;
  for (long long j = 1; j < n; ++j) expected *= rational(j * k + 1);
  for (int i = 0; i < n; ++i) expected /= k;
  if (sum != expected) record(r, "difference-index hook formula fails");
  r.checked += count;

  return r;
}

Report check_roundtrips(int n, int k) {
  Report r{"roundtrip", n, k};

  const auto forests = enumerate::k_forests(n, k);
  const long long expected = enumerate::expected_count(n, k);
  if (static_cast<long long>(forests.size()) != expected)
    record(r, "forest count " + std::to_string(forests.size()) + " != " +
                  std::to_string(expected));

  std::vector<KFactorization> facts;
  for (const KForest& f : forests) {
    const KFactorization fact = jcdal_inverse(f);
    ++r.checked;
    if (jcdal(fact) != f) {
      record(r, describe(fact) + " jcdal round trip fails");
      continue;
    }
    if (contract_lower(lower(fact), k) != fact) {
      record(r, describe(fact) + " lower/contract_lower round trip fails");
      continue;
    }
    const ParkingFunction p = project_least(fact);
    validate(p);
    if (project_least_inverse(p) != fact) {
      record(r, describe(fact) + " projection round trip fails");
      continue;
    }
    if (k == 1 && cda_inverse(cda(fact)) != fact)
      record(r, describe(fact) + " cda round trip fails");
    facts.push_back(fact);
  }

  // Duplicate-free enumeration, and parking-function count.
  {
    std::vector<std::string> keys;
    keys.reserve(facts.size());
    for (const auto& f : facts) keys.push_back(describe(f));
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
      record(r, "duplicate factorization in enumeration");
    const auto parks = enumerate::k_parking_functions(n, k);
    if (static_cast<long long>(parks.size()) != expected)
      record(r, "parking-function count mismatch");
    // Inverse projection covers all of P_n^k.
    for (const ParkingFunction& p : parks) {
      if (project_least(project_least_inverse(p)) != p) {
        record(r, kfact::to_text(p) + " L(L_inverse(p)) != p");
        break;
      }
    }
  }

  if (k * n <= 6) {
    auto oracle = enumerate::brute_force_factorizations(n, k);
    std::vector<std::string> lhs, rhs;
    for (const auto& f : oracle) lhs.push_back(describe(f));
    for (const auto& f : facts) rhs.push_back(describe(f));
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs) record(r, "bijective enumeration differs from brute force");
    r.checked += static_cast<long long>(oracle.size());
  }

  return r;
}

Report check_counts(int n, int k) {
  Report r{"counts", n, k};
  const long long expected = enumerate::expected_count(n, k);
  const auto count_of = [&](long long actual, const char* what) {
    ++r.checked;
    if (actual != expected)
      record(r, std::string(what) + " count " + std::to_string(actual) + " != " +
                    std::to_string(expected));
  };
  count_of(static_cast<long long>(enumerate::k_forests(n, k).size()), "k-forest");
  count_of(static_cast<long long>(enumerate::k_factorizations(n, k).size()),
           "k-factorization");
  count_of(static_cast<long long>(enumerate::k_parking_functions(n, k).size()),
           "k-parking-function");
  return r;
}

std::vector<Report> check_all(int n, int k) {
  return {check_main_theorem(n, k), check_distributions(n, k), check_hook_identities(n, k),
          check_roundtrips(n, k), check_counts(n, k)};
}

std::vector<std::pair<int, int>> default_grid() {
  std::vector<std::pair<int, int>> grid;
  for (int n = 1; n <= 6; ++n) grid.emplace_back(n, 1);
  for (int n = 1; n <= 4; ++n) grid.emplace_back(n, 2);
  for (int n = 1; n <= 3; ++n) grid.emplace_back(n, 3);
  return grid;
}

}  // namespace verify
}  // namespace kfact
