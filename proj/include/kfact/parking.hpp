#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kfact/factorization.hpp"

namespace kfact {

/// Sequence of nonnegative integers whose nondecreasing rearrangement
/// (b_1..b_n) satisfies b_i <= k(i-1).
struct ParkingFunction {
  int k = 1;
  std::vector<int> entries;

  bool operator==(const ParkingFunction&) const = default;
};

bool is_k_parking(const std::vector<int>& entries, int k);

void validate(const ParkingFunction& p);

/// disp_k(p) = k*C(n,2) - sum of entries.
long long disp(const ParkingFunction& p);

/// Projection onto the least factor entries (a_1^0, ..., a_n^0).
ParkingFunction project_least(const KFactorization& f);

/// Inverse of project_least for k = 1: reconstructs the unique minimal
/// factorization whose arches open at the given positions.
KFactorization sb_inverse(const ParkingFunction& p);

/// Repeat each entry k times; maps P_n^k into P_kn.
ParkingFunction expand(const ParkingFunction& p);

/// Full inverse of project_least: contract_lower(sb_inverse(expand(p)), k).
KFactorization project_least_inverse(const ParkingFunction& p);

/// Comma-separated entries, e.g. "0,6,13".
std::string to_text(const ParkingFunction& p);
ParkingFunction parse_parking(std::string_view text, int k);

void to_json(nlohmann::json& j, const ParkingFunction& p);
void from_json(const nlohmann::json& j, ParkingFunction& p);

}  // namespace kfact
