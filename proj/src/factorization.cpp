#include "kfact/factorization.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace kfact {

namespace {

long long choose2(long long a) { return a * (a - 1) / 2; }

}  // namespace

KFactorization KFactorization::from_cycles(int k, std::vector<Cycle> factors) {
  KFactorization f;
  f.k = k;
  f.n = static_cast<int>(factors.size());
  for (const Cycle& c : factors)
    if (c.entries.front() != *std::min_element(c.entries.begin(), c.entries.end()))
      fail(errc::not_min_first, "factor " + std::to_string(&c - factors.data() + 1));
  f.factors = std::move(factors);
  return f;
}

void validate(const KFactorization& f) {
  if (f.k < 1 || f.n < 0) fail(errc::size_mismatch, "k and n must be positive");
  if (static_cast<int>(f.factors.size()) != f.n)
    fail(errc::wrong_factor_count,
         "expected " + std::to_string(f.n) + " factors, got " +
             std::to_string(f.factors.size()));
  const int m = f.ground_size();
  Permutation product = Permutation::identity(m);
  for (const Cycle& c : f.factors) {
    if (c.length() != f.k + 1)
      fail(errc::wrong_factor_count, "factor of length " + std::to_string(c.length()));
    for (int x : c.entries)
      if (x < 0 || x > m) fail(errc::entry_out_of_range, "entry " + std::to_string(x));
    if (c.entries.front() != *std::min_element(c.entries.begin(), c.entries.end()))
      fail(errc::not_min_first, "factor not written min-first");
    product = compose(product, cycle_to_permutation(c, m));
  }
  if (product != full_cycle(m))
    fail(errc::product_not_full_cycle, "factors do not multiply to the full cycle");
}

AreaStats area_stats(const KFactorization& f) {
  const long long k = f.k, n = f.n;
  const long long base = choose2(k * n);
  long long least = 0, greatest = 0, low_sum = 0, high_sum = 0;
  for (const Cycle& c : f.factors) {
    least += c.entries.front();
    greatest += c.entries.back();
    for (int i = 0; i < f.k; ++i) low_sum += c.entries[i];
    for (int i = 1; i <= f.k; ++i) high_sum += c.entries[i];
  }
  AreaStats s;
  s.area = base - n * choose2(k) - k * least;
  s.coarea = k * (greatest - n) - base - n * choose2(k);
  s.semiarea = base - low_sum;
  s.cosemiarea = high_sum - k * n - base;
  return s;
}

KFactorization lower(const KFactorization& f) {
  std::vector<Cycle> out;
  out.reserve(static_cast<size_t>(f.n) * f.k);
  for (const Cycle& c : f.factors)
    for (int i = 1; i <= f.k; ++i)
      out.push_back(Cycle{{c.entries[0], c.entries[i]}});
  KFactorization g;
  g.k = 1;
  g.n = f.n * f.k;
  g.factors = std::move(out);
  return g;
}

KFactorization upper(const KFactorization& f) {
  std::vector<Cycle> out;
  out.reserve(static_cast<size_t>(f.n) * f.k);
  for (const Cycle& c : f.factors)
    for (int i = 0; i < f.k; ++i)
      out.push_back(Cycle{{c.entries[i], c.entries[f.k]}});
  KFactorization g;
  g.k = 1;
  g.n = f.n * f.k;
  g.factors = std::move(out);
  return g;
}

KFactorization contract_lower(const KFactorization& g, int k) {
  if (g.k != 1) fail(errc::size_mismatch, "contract_lower expects a 1-factorization");
  if (k < 1 || g.n % k != 0)
    fail(errc::not_in_lower_image, "factor count not divisible by k");
  const int n = g.n / k;
  std::vector<Cycle> out;
  out.reserve(n);
  for (int j = 0; j < n; ++j) {
    const int a0 = g.factors[j * k].entries[0];
    std::vector<int> entries{a0};
    for (int i = 0; i < k; ++i) {
      const Cycle& t = g.factors[j * k + i];
      if (t.entries[0] != a0)
        fail(errc::not_in_lower_image,
             "block " + std::to_string(j + 1) + " has mismatched least elements");
      entries.push_back(t.entries[1]);
    }
    out.push_back(Cycle::min_first(std::move(entries)));
  }
  return KFactorization::from_cycles(k, std::move(out));
}

KFactorization canonical(int n, int k) {
  if (n < 1 || k < 1) fail(errc::size_mismatch, "n and k must be positive");
  std::vector<Cycle> factors;
  factors.reserve(n);
  for (int i = 1; i <= n; ++i) {
    std::vector<int> entries{0};
    for (int j = (i - 1) * k + 1; j <= i * k; ++j) entries.push_back(j);
    factors.push_back(Cycle{std::move(entries)});
  }
  return KFactorization::from_cycles(k, std::move(factors));
}

std::string to_text(const KFactorization& f) {
  std::string out;
  for (const Cycle& c : f.factors) {
    out += '(';
    for (size_t i = 0; i < c.entries.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(c.entries[i]);
    }
    out += ')';
  }
  return out;
}

KFactorization parse_factorization(std::string_view text) {
  std::vector<Cycle> factors;
  size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') fail(errc::parse_error, "expected '(' at offset " + std::to_string(pos));
    ++pos;
    std::vector<int> entries;
    while (true) {
      skip_ws();
      if (pos >= text.size()) fail(errc::parse_error, "unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        fail(errc::parse_error, "expected digit at offset " + std::to_string(pos));
      int value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        value = value * 10 + (text[pos++] - '0');
      entries.push_back(value);
    }
    if (entries.size() < 2) fail(errc::parse_error, "cycle with fewer than two entries");
    factors.push_back(Cycle::normalized(std::move(entries)));
    skip_ws();
  }
  if (factors.empty()) fail(errc::parse_error, "no factors");
  const int k = factors.front().length() - 1;
  for (const Cycle& c : factors)
    if (c.length() != k + 1) fail(errc::parse_error, "factors of unequal length");
  return KFactorization::from_cycles(k, std::move(factors));
}

void to_json(nlohmann::json& j, const KFactorization& f) {
  j = nlohmann::json{{"k", f.k}, {"n", f.n}};
  nlohmann::json factors = nlohmann::json::array();
  for (const Cycle& c : f.factors) factors.push_back(c.entries);
  j["factors"] = std::move(factors);
}

void from_json(const nlohmann::json& j, KFactorization& f) {
  const int k = j.at("k").get<int>();
  std::vector<Cycle> factors;
  for (const auto& entry : j.at("factors"))
    factors.push_back(Cycle::normalized(entry.get<std::vector<int>>()));
  f = KFactorization::from_cycles(k, std::move(factors));
  if (j.contains("n") && j.at("n").get<int>() != f.n)
    fail(errc::parse_error, "declared n does not match factor count");
}

}  // namespace kfact
