#include "kfact/enumerate.hpp"

#include <algorithm>

#include "kfact/archmap.hpp"

namespace kfact {
namespace enumerate {

long long expected_count(int n, int k) {
  long long count = 1;
  for (int i = 0; i < n - 1; ++i) count *= static_cast<long long>(k) * n + 1;
  return count;
}

std::vector<RootedForest> forests(int n) {
  std::vector<RootedForest> out;
  std::vector<int> parents(n, 0);
  while (true) {
    RootedForest f = RootedForest::from_parents(parents);
    bool ok = true;
    for (int v = 1; v <= n && ok; ++v) {
      int u = v, steps = 0;
      while (u != 0 && steps <= n) {
        u = f.parent[u];
        ++steps;
      }
      ok = steps <= n;
    }
    if (ok) out.push_back(std::move(f));
    // next parent array, lexicographic over {0..n}^n
    int i = n - 1;
    while (i >= 0 && parents[i] == n) parents[i--] = 0;
    if (i < 0) break;
    ++parents[i];
  }
  return out;
}

std::vector<KForest> k_forests(int n, int k) {
  std::vector<KForest> out;
  for (const RootedForest& f : forests(n)) {
    std::vector<int> edges;
    for (int v = 1; v <= n; ++v)
      if (f.parent[v] != 0) edges.push_back(v);
    std::vector<int> colours(edges.size(), 0);
    while (true) {
      KForest kf;
      kf.forest = f;
      kf.k = k;
      kf.colour.assign(n + 1, kNoColour);
      for (size_t i = 0; i < edges.size(); ++i) kf.colour[edges[i]] = colours[i];
      out.push_back(std::move(kf));
      int i = static_cast<int>(colours.size()) - 1;
      while (i >= 0 && colours[i] == k - 1) colours[i--] = 0;
      if (i < 0) break;
      ++colours[i];
    }
  }
  return out;
}

std::vector<KFactorization> k_factorizations(int n, int k) {
  std::vector<KFactorization> out;
  for (const KForest& f : k_forests(n, k)) out.push_back(jcdal_inverse(f));
  return out;
}

namespace {

// All min-first (k+1)-cycles on {0..m}.
std::vector<Cycle> all_cycles(int length, int m) {
  std::vector<Cycle> out;
  std::vector<int> subset(length);
  // iterate over subsets of size `length` of {0..m}
  for (int i = 0; i < length; ++i) subset[i] = i;
  while (true) {
    std::vector<int> rest(subset.begin() + 1, subset.end());
    std::sort(rest.begin(), rest.end());
    do {
      std::vector<int> entries{subset[0]};
      entries.insert(entries.end(), rest.begin(), rest.end());
      out.push_back(Cycle{std::move(entries)});
    } while (std::next_permutation(rest.begin(), rest.end()));
    int i = length - 1;
    while (i >= 0 && subset[i] == m - (length - 1 - i)) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < length; ++j) subset[j] = subset[j - 1] + 1;
  }
  return out;
}

}  // namespace

std::vector<KFactorization> brute_force_factorizations(int n, int k, bool allow_large) {
  const int m = k * n;
  if (m > 6 && !allow_large)
    fail(errc::size_guard, "brute force beyond kn = 6 must be requested explicitly");

  const auto cycles = all_cycles(k + 1, m);
  std::vector<Permutation> cycle_perms;
  cycle_perms.reserve(cycles.size());
  for (const Cycle& c : cycles) cycle_perms.push_back(cycle_to_permutation(c, m));
  const Permutation target = full_cycle(m);

  std::vector<KFactorization> out;
  std::vector<int> chosen(n, 0);
  const auto search = [&](const auto& self, int depth, const Permutation& prefix) -> void {
    if (depth == n) {
      if (prefix == target) {
        std::vector<Cycle> factors;
        for (int i = 0; i < n; ++i) factors.push_back(cycles[chosen[i]]);
        out.push_back(KFactorization::from_cycles(k, std::move(factors)));
      }
      return;
    }
    for (size_t c = 0; c < cycles.size(); ++c) {
      chosen[depth] = static_cast<int>(c);
      self(self, depth + 1, compose(prefix, cycle_perms[c]));
    }
  };
  search(search, 0, Permutation::identity(m));
  return out;
}

std::vector<ParkingFunction> k_parking_functions(int n, int k) {
  std::vector<ParkingFunction> out;
  const int max_entry = k * (n - 1);
  std::vector<int> entries(n, 0);
  while (true) {
    if (is_k_parking(entries, k)) out.push_back(ParkingFunction{k, entries});
    int i = n - 1;
    while (i >= 0 && entries[i] == max_entry) entries[i--] = 0;
    if (i < 0) break;
    ++entries[i];
  }
  return out;
}

}  // namespace enumerate
}  // namespace kfact
