#include "kfact/parking.hpp"

#include <algorithm>
#include <cctype>

namespace kfact {

bool is_k_parking(const std::vector<int>& entries, int k) {
  std::vector<int> sorted = entries;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0) return false;
    if (static_cast<long long>(sorted[i]) > static_cast<long long>(k) * i) return false;
  }
  return true;
}

void validate(const ParkingFunction& p) {
  if (p.k < 1) fail(errc::size_mismatch, "k must be at least 1");
  if (!is_k_parking(p.entries, p.k))
    fail(errc::not_a_parking_function, "sorted entries exceed k(i-1)");
}

long long disp(const ParkingFunction& p) {
  const long long n = static_cast<long long>(p.entries.size());
  long long sum = 0;
  for (int a : p.entries) sum += a;
  return p.k * (n * (n - 1) / 2) - sum;
}

ParkingFunction project_least(const KFactorization& f) {
  ParkingFunction p;
  p.k = f.k;
  p.entries.reserve(f.n);
  for (const Cycle& c : f.factors) p.entries.push_back(c.entries.front());
  return p;
}

KFactorization sb_inverse(const ParkingFunction& p) {
  if (p.k != 1) fail(errc::size_mismatch, "sb_inverse expects a 1-parking function");
  validate(p);
  const int m = static_cast<int>(p.entries.size());

  // Labels that open an arch at each position.
  std::vector<std::vector<int>> starters(m + 1);
  for (int i = 1; i <= m; ++i) starters[p.entries[i - 1]].push_back(i);

  // Sweep the baseline left to right with a stack of open arches. At each
  // position, close arches whose label exceeds every new starter, taking pop
  // labels strictly decreasing within the position; then open the new arches
  // in decreasing label order. This is forced by the requirement that edge
  // labels increase counterclockwise around every baseline vertex.
  std::vector<int> close(m + 1, -1);
  std::vector<int> stack;
  for (int v = 0; v <= m; ++v) {
    const auto& starts = starters[v];
    const int max_start = starts.empty() ? -1 : starts.back();
    int prev_popped = -1;
    while (!stack.empty() && stack.back() > max_start &&
           (prev_popped < 0 || stack.back() < prev_popped)) {
      prev_popped = stack.back();
      stack.pop_back();
      close[prev_popped] = v;
    }
    if (v > 0 && starts.empty() && prev_popped < 0)
      fail(errc::empty_pop_required, "no arch touches position " + std::to_string(v));
    for (auto it = starts.rbegin(); it != starts.rend(); ++it) stack.push_back(*it);
  }
  if (!stack.empty())
    fail(errc::stack_not_emptied, std::to_string(stack.size()) + " arches never close");

  std::vector<Cycle> factors;
  factors.reserve(m);
  for (int i = 1; i <= m; ++i)
    factors.push_back(Cycle{{p.entries[i - 1], close[i]}});
  return KFactorization::from_cycles(1, std::move(factors));
}

ParkingFunction expand(const ParkingFunction& p) {
  ParkingFunction out;
  out.k = 1;
  out.entries.reserve(p.entries.size() * p.k);
  for (int a : p.entries)
    for (int i = 0; i < p.k; ++i) out.entries.push_back(a);
  return out;
}

KFactorization project_least_inverse(const ParkingFunction& p) {
  validate(p);
  try {
    return contract_lower(sb_inverse(expand(p)), p.k);
  } catch (const Error& e) {
    if (e.code() == errc::not_in_lower_image)
      fail(errc::inconsistency, "valid k-parking function left the lower image");
    throw;
  }
}

std::string to_text(const ParkingFunction& p) {
  std::string out;
  for (size_t i = 0; i < p.entries.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.entries[i]);
  }
  return out;
}

ParkingFunction parse_parking(std::string_view text, int k) {
  ParkingFunction p;
  p.k = k;
  size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos])))
      fail(errc::parse_error, "expected digit at offset " + std::to_string(pos));
    int value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      value = value * 10 + (text[pos++] - '0');
    p.entries.push_back(value);
    skip_ws();
    if (pos < text.size()) {
      if (text[pos] != ',') fail(errc::parse_error, "expected ',' at offset " + std::to_string(pos));
      ++pos;
      skip_ws();
    }
  }
  if (p.entries.empty()) fail(errc::parse_error, "no entries");
  return p;
}

void to_json(nlohmann::json& j, const ParkingFunction& p) {
  j = nlohmann::json{{"k", p.k}, {"entries", p.entries}};
}

void from_json(const nlohmann::json& j, ParkingFunction& p) {
  p.k = j.at("k").get<int>();
  p.entries = j.at("entries").get<std::vector<int>>();
}

}  // namespace kfact
