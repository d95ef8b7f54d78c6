#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kfact/error.hpp"
#include "kfact/perm.hpp"

namespace kfact {

/// Sequence of n (k+1)-cycles on {0..kn} whose left-to-right product is the
/// full cycle. Factor j is stored min-first as (a_j^0, a_j^1, ..., a_j^k).
struct KFactorization {
  int k = 1;
  int n = 0;
  std::vector<Cycle> factors;

  /// Build from min-first cycles; throws NotMinFirst if any factor is not.
  static KFactorization from_cycles(int k, std::vector<Cycle> factors);

  int ground_size() const { return k * n; }  // kn

  bool operator==(const KFactorization&) const = default;
};

/// Checks factor shape, entry ranges, and that the product is the full cycle.
void validate(const KFactorization& f);

struct AreaStats {
  long long area = 0;
  long long coarea = 0;
  long long semiarea = 0;
  long long cosemiarea = 0;

  bool operator==(const AreaStats&) const = default;
};

AreaStats area_stats(const KFactorization& f);

/// Replace each factor (a^0 ... a^k) by (a^0 a^1)(a^0 a^2)...(a^0 a^k).
KFactorization lower(const KFactorization& f);

/// Replace each factor (a^0 ... a^k) by (a^0 a^k)(a^1 a^k)...(a^{k-1} a^k).
KFactorization upper(const KFactorization& f);

/// Inverse of lower on its image: groups consecutive blocks of k
/// transpositions sharing a least element back into (k+1)-cycles.
/// Throws NotInLowerImage when a block has mismatched least elements,
/// so this doubles as the membership test for the lower image.
KFactorization contract_lower(const KFactorization& g, int k);

/// The canonical element ((0, (i-1)k+1, ..., ik))_{i=1..n}.
KFactorization canonical(int n, int k);

/// Canonical text form, e.g. "(0 1 4)(6 7 8)".
std::string to_text(const KFactorization& f);

/// Whitespace-tolerant parse; cycles given in any rotation are normalized.
KFactorization parse_factorization(std::string_view text);

void to_json(nlohmann::json& j, const KFactorization& f);
void from_json(const nlohmann::json& j, KFactorization& f);

}  // namespace kfact
