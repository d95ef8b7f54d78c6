#pragma once

#include <vector>

#include "kfact/error.hpp"

namespace kfact {

/// Permutation of the ground set {0..m}. Products are taken left to right:
/// (p * q)(x) = q(p(x)), i.e. p acts first.
class Permutation {
 public:
  Permutation() = default;

  /// images[x] is the image of x; must be a bijection on {0..m}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int m);

  /// The largest ground-set element m.
  int ground_size() const { return static_cast<int>(images_.size()) - 1; }

  int operator()(int x) const { return images_[x]; }

  const std::vector<int>& images() const { return images_; }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Left-to-right product: result maps x to q(p(x)).
Permutation compose(const Permutation& p, const Permutation& q);

/// The canonical full cycle (0 1 2 ... m).
Permutation full_cycle(int m);

/// Cycle on a subset of {0..m}, stored with its least entry first.
struct Cycle {
  std::vector<int> entries;

  /// Construct from entries already written min-first; NotMinFirst otherwise.
  static Cycle min_first(std::vector<int> entries);

  /// Construct from entries in any rotation; rotates the minimum to the front.
  static Cycle normalized(std::vector<int> entries);

  int length() const { return static_cast<int>(entries.size()); }

  bool operator==(const Cycle&) const = default;
};

/// Permutation on {0..m} that cycles the entries in written order and fixes
/// everything else.
Permutation cycle_to_permutation(const Cycle& c, int m);

}  // namespace kfact
