#include "kfact/perm.hpp"

#include <algorithm>
#include <numeric>

namespace kfact {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int m = ground_size();
  if (m < 0) fail(errc::size_mismatch, "empty image table");
  std::vector<char> seen(m + 1, 0);
  for (int x = 0; x <= m; ++x) {
    const int y = images_[x];
    if (y < 0 || y > m) fail(errc::entry_out_of_range, "image " + std::to_string(y));
    if (seen[y]) fail(errc::not_a_bijection, "value " + std::to_string(y) + " repeated");
    seen[y] = 1;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> images(m + 1);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.ground_size() != q.ground_size())
    fail(errc::size_mismatch, "composing permutations on different ground sets");
  std::vector<int> images(p.ground_size() + 1);
  for (int x = 0; x <= p.ground_size(); ++x) images[x] = q(p(x));
  return Permutation(std::move(images));
}

Permutation full_cycle(int m) {
  std::vector<int> images(m + 1);
  for (int x = 0; x < m; ++x) images[x] = x + 1;
  images[m] = 0;
  return Permutation(std::move(images));
}

Cycle Cycle::min_first(std::vector<int> entries) {
  if (entries.empty()) fail(errc::size_mismatch, "empty cycle");
  if (*std::min_element(entries.begin(), entries.end()) != entries.front())
    fail(errc::not_min_first, "cycle must be written with its least entry first");
  return Cycle{std::move(entries)};
}

Cycle Cycle::normalized(std::vector<int> entries) {
  if (entries.empty()) fail(errc::size_mismatch, "empty cycle");
  const auto min_it = std::min_element(entries.begin(), entries.end());
  std::rotate(entries.begin(), min_it, entries.end());
  return Cycle{std::move(entries)};
}

Permutation cycle_to_permutation(const Cycle& c, int m) {
  std::vector<int> sorted = c.entries;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(errc::not_a_bijection, "cycle entries must be distinct");
  std::vector<int> images(m + 1);
  std::iota(images.begin(), images.end(), 0);
  const int len = c.length();
  for (int i = 0; i < len; ++i) {
    const int x = c.entries[i];
    if (x < 0 || x > m) fail(errc::entry_out_of_range, "cycle entry " + std::to_string(x));
    images[x] = c.entries[(i + 1) % len];
  }
  return Permutation(std::move(images));
}

}  // namespace kfact
