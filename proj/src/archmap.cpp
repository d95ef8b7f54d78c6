#include "kfact/archmap.hpp"

#include <algorithm>
#include <numeric>

namespace kfact {

namespace {

void require_transpositions(const KFactorization& f) {
  if (f.k != 1) fail(errc::size_mismatch, "expected a factorization into transpositions");
}

// Cover poset of the spans [a_i, b_i): parent of i is the arch whose span
// minimally strictly contains span(i). Single sweep over arches sorted by
// (left asc, right desc) with a stack of open arches. Assumes f is valid,
// which guarantees the spans are nested-or-disjoint.
RootedForest cover_forest(const KFactorization& f) {
  const int m = f.n;
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const auto& ex = f.factors[x].entries;
    const auto& ey = f.factors[y].entries;
    return ex[0] != ey[0] ? ex[0] < ey[0] : ex[1] > ey[1];
  });

  RootedForest forest;
  forest.n = m;
  forest.parent.assign(m + 1, 0);
  std::vector<int> open;  // indices of arches whose span is still open
  for (int idx : order) {
    const int a = f.factors[idx].entries[0];
    const int b = f.factors[idx].entries[1];
    while (!open.empty() && f.factors[open.back()].entries[1] <= a) open.pop_back();
    if (!open.empty()) {
      if (f.factors[open.back()].entries[1] < b)
        fail(errc::inconsistency, "crossing spans in a validated factorization");
      forest.parent[idx + 1] = open.back() + 1;
    }
    open.push_back(idx);
  }
  return forest;
}

}  // namespace

RootedForest cda(const KFactorization& f) {
  require_transpositions(f);
  validate(f);
  return cover_forest(f);
}

DualLayout dual_layout(const KFactorization& f) {
  require_transpositions(f);
  validate(f);
  const RootedForest forest = cover_forest(f);
  const auto ch = forest.children();
  const int m = f.n;

  DualLayout layout;
  layout.m = m;
  layout.l.assign(m + 1, 0);
  layout.r.assign(m + 1, 0);
  layout.d.assign(m + 1, 0);

  for (int i = 1; i <= m; ++i) {
    layout.l[i] = f.factors[i - 1].entries[0];
    layout.r[i] = f.factors[i - 1].entries[1];
  }

  // The children spans tile span(i) except for a single unit gap, which is
  // where the dual child vertex of edge i sits.
  std::vector<int> kids;
  for (int i = 1; i <= m; ++i) {
    kids = ch[i];
    std::sort(kids.begin(), kids.end(),
              [&](int x, int y) { return layout.l[x] < layout.l[y]; });
    int pos = layout.l[i];
    for (int c : kids) {
      if (layout.l[c] != pos) break;
      pos = layout.r[c];
    }
    layout.d[i] = pos;
  }

  std::vector<char> seen(m, 0);
  for (int i = 1; i <= m; ++i) {
    if (layout.d[i] < layout.l[i] || layout.d[i] >= layout.r[i] || seen[layout.d[i]])
      fail(errc::inconsistency, "dual positions are not a permutation");
    seen[layout.d[i]] = 1;
  }
  return layout;
}

KFactorization cda_inverse(const RootedForest& forest) {
  validate(forest);
  const int m = forest.n;
  const auto ch = forest.children();
  const auto h = hook_sizes(forest);

  // Each subtree occupies a contiguous block of baseline positions. At the
  // vertex below edge i the block is split as: subtrees of smaller-labelled
  // children in decreasing label order, the vertex itself, then subtrees of
  // larger-labelled children in decreasing label order. The pseudo-root
  // behaves as an edge with label +infinity and block [0, m].
  std::vector<int> a(m + 1, 0), b(m + 1, 0);
  std::vector<std::pair<int, int>> stack;  // (edge, block start)
  int cursor = 0;
  for (auto it = ch[0].rbegin(); it != ch[0].rend(); ++it) {
    stack.emplace_back(*it, cursor);
    cursor += h[*it];
  }
  while (!stack.empty()) {
    const auto [i, start] = stack.back();
    stack.pop_back();
    a[i] = start;
    b[i] = start + h[i];
    int pos = start;
    std::vector<std::pair<int, int>> later;
    for (auto kid = ch[i].rbegin(); kid != ch[i].rend(); ++kid) {
      if (*kid < i) {
        stack.emplace_back(*kid, pos);
        pos += h[*kid];
      } else {
        later.emplace_back(*kid, 0);
      }
    }
    ++pos;  // the vertex below edge i
    for (auto& item : later) {  // already in decreasing label order
      item.second = pos;
      pos += h[item.first];
    }
    stack.insert(stack.end(), later.begin(), later.end());
  }

  std::vector<Cycle> factors;
  factors.reserve(m);
  for (int i = 1; i <= m; ++i) factors.push_back(Cycle{{a[i], b[i]}});
  return KFactorization::from_cycles(1, std::move(factors));
}

KForest jcdal(const KFactorization& f) {
  validate(f);
  const int k = f.k, n = f.n;
  const RootedForest merged_source = cover_forest(lower(f));
  const auto& parent = merged_source.parent;

  // Image characterization: j_i must be a child of j_{i+1} for i < k, with
  // vertex j_i carrying the integer label (j-1)k + i.
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i < k; ++i)
      if (parent[(j - 1) * k + i] != (j - 1) * k + i + 1)
        fail(errc::inconsistency, "lower image lost its path structure");

  KForest out;
  out.k = k;
  out.forest.n = n;
  out.forest.parent.assign(n + 1, 0);
  out.colour.assign(n + 1, kNoColour);
  for (int j = 1; j <= n; ++j) {
    const int q = parent[j * k];  // parent of the top of j's path
    if (q == 0) continue;
    const int r = (q - 1) / k + 1;
    const int i = q - (r - 1) * k;
    if (r == j) fail(errc::inconsistency, "path top re-enters its own path");
    out.forest.parent[j] = r;
    out.colour[j] = k - i;
  }
  return out;
}

KFactorization jcdal_inverse(const KForest& forest) {
  validate(forest);
  const int k = forest.k, n = forest.forest.n;
  const int m = k * n;

  // Unjoin: vertex j becomes the path j_1 child of j_2 ... child of j_k,
  // and an edge (r -> j) of colour c attaches j_k below r_{k-c}.
  RootedForest split;
  split.n = m;
  split.parent.assign(m + 1, 0);
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i < k; ++i) split.parent[(j - 1) * k + i] = (j - 1) * k + i + 1;
    const int r = forest.forest.parent[j];
    if (r != 0) split.parent[j * k] = (r - 1) * k + (k - forest.colour[j]);
  }
  return contract_lower(cda_inverse(split), k);
}

KForest jcdal_via_upper(const KFactorization& f) {
  validate(f);
  const int k = f.k, n = f.n;
  const RootedForest merged_source = cover_forest(upper(f));
  const auto& parent = merged_source.parent;

  // Upper-route characterization: j_{i+1} is a child of j_i, so the top of
  // each path is j_1.
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i < k; ++i)
      if (parent[(j - 1) * k + i + 1] != (j - 1) * k + i)
        fail(errc::inconsistency, "upper image lost its path structure");

  KForest out;
  out.k = k;
  out.forest.n = n;
  out.forest.parent.assign(n + 1, 0);
  out.colour.assign(n + 1, kNoColour);
  for (int j = 1; j <= n; ++j) {
    const int q = parent[(j - 1) * k + 1];
    if (q == 0) continue;
    const int r = (q - 1) / k + 1;
    const int i = q - (r - 1) * k;
    if (r == j) fail(errc::inconsistency, "path top re-enters its own path");
    out.forest.parent[j] = r;
    out.colour[j] = k - i;
  }
  return out;
}

}  // namespace kfact
