#include "kfact/forest.hpp"

#include <algorithm>
#include <queue>

namespace kfact {

RootedForest RootedForest::from_parents(const std::vector<int>& parents) {
  RootedForest f;
  f.n = static_cast<int>(parents.size());
  f.parent.assign(f.n + 1, 0);
  std::copy(parents.begin(), parents.end(), f.parent.begin() + 1);
  return f;
}

std::vector<std::vector<int>> RootedForest::children() const {
  std::vector<std::vector<int>> ch(n + 1);
  for (int v = 1; v <= n; ++v) ch[parent[v]].push_back(v);  // ascending by construction
  return ch;
}

void validate(const RootedForest& f) {
  if (static_cast<int>(f.parent.size()) != f.n + 1)
    fail(errc::size_mismatch, "parent array has wrong length");
  for (int v = 1; v <= f.n; ++v) {
    const int p = f.parent[v];
    if (p < 0 || p > f.n)
      fail(errc::entry_out_of_range, "parent of " + std::to_string(v));
    if (p == v) fail(errc::self_loop, "vertex " + std::to_string(v));
  }
  // Every vertex must reach 0 within n steps.
  for (int v = 1; v <= f.n; ++v) {
    int u = v;
    for (int steps = 0; u != 0; ++steps) {
      if (steps >= f.n)
        fail(errc::cycle_detected, "no path to a root from vertex " + std::to_string(v));
      u = f.parent[u];
    }
  }
}

void validate(const KForest& f) {
  validate(f.forest);
  if (f.k < 1) fail(errc::colour_out_of_range, "k must be at least 1");
  if (static_cast<int>(f.colour.size()) != f.forest.n + 1)
    fail(errc::size_mismatch, "colour array has wrong length");
  for (int v = 1; v <= f.forest.n; ++v) {
    const int c = f.colour[v];
    if (f.forest.parent[v] == 0) {
      if (c != kNoColour)
        fail(errc::colour_out_of_range, "root " + std::to_string(v) + " carries a colour");
    } else if (c < 0 || c >= f.k) {
      fail(errc::colour_out_of_range,
           "vertex " + std::to_string(v) + " has colour " + std::to_string(c));
    }
  }
}

KForest as_k_forest(const RootedForest& f, int k) {
  KForest kf;
  kf.forest = f;
  kf.k = k;
  kf.colour.assign(f.n + 1, kNoColour);
  for (int v = 1; v <= f.n; ++v)
    if (f.parent[v] != 0) kf.colour[v] = 0;
  return kf;
}

namespace {

// Vertices ordered so that every vertex appears after its parent.
std::vector<int> top_down_order(const RootedForest& f) {
  auto ch = f.children();
  std::vector<int> order;
  order.reserve(f.n);
  std::vector<int> stack = ch[0];
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int c : ch[v]) stack.push_back(c);
  }
  return order;
}

}  // namespace

std::vector<int> hook_sizes(const RootedForest& f) {
  const auto order = top_down_order(f);
  std::vector<int> h(f.n + 1, 1);
  h[0] = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int p = f.parent[*it];
    if (p != 0) h[p] += h[*it];
  }
  return h;
}

ForestStats stats(const KForest& kf) {
  const RootedForest& f = kf.forest;
  const int n = f.n;

  ForestStats s;
  s.h = hook_sizes(f);
  s.h_left.assign(n + 1, 0);
  s.h_right.assign(n + 1, 0);
  s.inv_at.assign(n + 1, 0);
  s.coinv_at.assign(n + 1, 0);

  for (int v = 1; v <= n; ++v) {
    const int u = f.parent[v];
    if (u == 0) {
      ++s.components;
      continue;
    }
    if (v < u)
      s.h_left[u] += s.h[v];
    else
      s.h_right[u] += s.h[v];
    s.dep += s.h[v];
    s.chr += static_cast<long long>(kf.colour[v]) * s.h[v];
    s.cochr += static_cast<long long>(kf.k - 1 - kf.colour[v]) * s.h[v];
  }

  // Every (ancestor, descendant) pair is charged once, at cost proportional
  // to the total depth of the forest.
  for (int v = 1; v <= n; ++v) {
    for (int a = f.parent[v]; a != 0; a = f.parent[a]) {
      if (v < a)
        ++s.inv_at[a];
      else
        ++s.coinv_at[a];
    }
  }

  for (int u = 1; u <= n; ++u) {
    s.maj += s.h_left[u];
    s.comaj += s.h_right[u];
    s.inv += s.inv_at[u];
    s.coinv += s.coinv_at[u];
  }
  s.maj_k = s.maj + s.chr;
  s.comaj_k = s.comaj + s.cochr;
  s.inv_k = s.inv + s.chr;
  s.coinv_k = s.coinv + s.cochr;
  return s;
}

ForestStats stats(const RootedForest& f) { return stats(as_k_forest(f)); }

void to_json(nlohmann::json& j, const KForest& f) {
  j = nlohmann::json{{"n", f.forest.n}, {"k", f.k}};
  j["parent"] = std::vector<int>(f.forest.parent.begin() + 1, f.forest.parent.end());
  if (f.k != 1) {
    nlohmann::json colours = nlohmann::json::array();
    for (int v = 1; v <= f.forest.n; ++v) {
      if (f.colour[v] == kNoColour)
        colours.push_back(nullptr);
      else
        colours.push_back(f.colour[v]);
    }
    j["colour"] = std::move(colours);
  }
}

void from_json(const nlohmann::json& j, KForest& f) {
  const int n = j.at("n").get<int>();
  const int k = j.value("k", 1);
  auto parents = j.at("parent").get<std::vector<int>>();
  if (static_cast<int>(parents.size()) != n)
    fail(errc::parse_error, "parent array length does not match n");
  f.forest = RootedForest::from_parents(parents);
  f.k = k;
  f.colour.assign(n + 1, kNoColour);
  if (j.contains("colour")) {
    const auto& colours = j.at("colour");
    if (static_cast<int>(colours.size()) != n)
      fail(errc::parse_error, "colour array length does not match n");
    for (int v = 1; v <= n; ++v)
      if (!colours[v - 1].is_null()) f.colour[v] = colours[v - 1].get<int>();
  } else if (k == 1) {
    for (int v = 1; v <= n; ++v)
      if (f.forest.parent[v] != 0) f.colour[v] = 0;
  }
}

}  // namespace kfact
