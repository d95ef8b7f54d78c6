#pragma once

#include <vector>

#include <json.hpp>

#include "kfact/error.hpp"

namespace kfact {

/// Rooted labelled forest on vertices 1..n. parent[v] == 0 marks a root.
/// The parent array is 1-indexed; slot 0 is unused.
struct RootedForest {
  int n = 0;
  std::vector<int> parent;  // size n + 1

  /// Build from the sequence p_1..p_n of parent entries.
  static RootedForest from_parents(const std::vector<int>& parents);

  /// children[u] lists the children of u in ascending label order;
  /// children[0] lists the roots.
  std::vector<std::vector<int>> children() const;

  bool operator==(const RootedForest&) const = default;
};

inline constexpr int kNoColour = -1;

/// Rooted forest with an edge colour in {0..k-1} on every non-root vertex.
/// colour[v] == kNoColour at roots (and slot 0).
struct KForest {
  RootedForest forest;
  int k = 1;
  std::vector<int> colour;  // size n + 1

  bool operator==(const KForest&) const = default;
};

/// Wrap a plain forest as a k-forest with every edge coloured 0.
KForest as_k_forest(const RootedForest& f, int k = 1);

void validate(const RootedForest& f);
void validate(const KForest& f);

/// h(v) = number of vertices in the subtree at v, including v.
/// Returned vector is 1-indexed (slot 0 unused).
std::vector<int> hook_sizes(const RootedForest& f);

/// Immutable snapshot of all per-vertex and aggregate forest statistics.
struct ForestStats {
  // Per-vertex, 1-indexed; slot 0 unused.
  std::vector<int> h;        // hook lengths
  std::vector<int> h_left;   // hook sums over smaller-labelled children
  std::vector<int> h_right;  // hook sums over larger-labelled children
  std::vector<int> inv_at;   // #{v in H(u) : v < u}
  std::vector<int> coinv_at;

  long long dep = 0;
  long long maj = 0, comaj = 0;
  long long inv = 0, coinv = 0;
  long long chr = 0, cochr = 0;  // chromatic depth / codepth
  long long maj_k = 0, comaj_k = 0;
  long long inv_k = 0, coinv_k = 0;
  int components = 0;
};

ForestStats stats(const KForest& f);
ForestStats stats(const RootedForest& f);

void to_json(nlohmann::json& j, const KForest& f);
void from_json(const nlohmann::json& j, KForest& f);

}  // namespace kfact
