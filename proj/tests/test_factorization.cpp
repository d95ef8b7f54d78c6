#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "kfact/enumerate.hpp"
#include "kfact/factorization.hpp"

using namespace kfact;

namespace {

const char* kTauiText = "(6 7)(0 2)(3 6)(3 10)(8 9)(0 3)(5 6)(4 5)(8 10)(1 2)";
const char* kGenkText =
    "(0 1 4)(6 7 8)(13 16 17)(5 6 9)(18 19 20)(0 13 18)(10 11 12)(5 10 13)"
    "(2 3 4)(14 15 16)";

}  // namespace

TEST_CASE("validation") {
  CHECK_NOTHROW(validate(parse_factorization("(0 1)(0 2)")));
  CHECK_THROWS_AS(validate(parse_factorization("(0 1)(1 2)")), Error);
  CHECK_NOTHROW(validate(parse_factorization("(0 1 2)(0 3 4)")));

  CHECK_THROWS_AS(
      KFactorization::from_cycles(1, {Cycle{{1, 0}}, Cycle{{0, 2}}}), Error);
  KFactorization f = parse_factorization("(0 1)(0 2)");
  f.n = 3;
  CHECK_THROWS_AS(validate(f), Error);
}

TEST_CASE("area statistics of the worked examples") {
  const AreaStats taui = area_stats(parse_factorization(kTauiText));
  CHECK(taui.area == 7);
  CHECK(taui.coarea == 5);
  CHECK(taui.semiarea == taui.area);
  CHECK(taui.cosemiarea == taui.coarea);

  const AreaStats genk = area_stats(parse_factorization(kGenkText));
  CHECK(genk.area == 34);
  CHECK(genk.coarea == 22);
  CHECK(genk.semiarea == 16);
  CHECK(genk.cosemiarea == 12);

  for (int k = 1; k <= 3; ++k) {
    const AreaStats single = area_stats(canonical(1, k));
    CHECK(single == AreaStats{0, 0, 0, 0});
  }
}

TEST_CASE("lower and upper decompositions") {
  const KFactorization f = parse_factorization("(1 2 5)(0 1 6)(3 4 5)");
  CHECK(to_text(lower(f)) == "(1 2)(1 5)(0 1)(0 6)(3 4)(3 5)");

  const KFactorization g = parse_factorization("(0 1 2)(0 3 4)");
  CHECK(to_text(upper(g)) == "(0 2)(1 2)(0 4)(3 4)");
  CHECK_NOTHROW(validate(lower(g)));
  CHECK_NOTHROW(validate(upper(g)));

  const KFactorization h = parse_factorization("(0 1)(0 2)");
  CHECK(lower(h) == h);
  CHECK(upper(h) == h);

  const KFactorization genk = parse_factorization(kGenkText);
  const AreaStats a = area_stats(genk);
  CHECK(area_stats(lower(genk)).area == a.area + genk.n * 1);
  CHECK(area_stats(lower(genk)).coarea == a.cosemiarea);
  CHECK(area_stats(upper(genk)).coarea == a.coarea + genk.n * 1);
  CHECK(area_stats(upper(genk)).area == a.semiarea);
}

TEST_CASE("contract_lower") {
  const KFactorization f = parse_factorization("(1 2 5)(0 1 6)(3 4 5)");
  CHECK(contract_lower(lower(f), 2) == f);
  CHECK(to_text(contract_lower(parse_factorization("(0 1)(0 2)(0 3)(0 4)"), 2)) ==
        "(0 1 2)(0 3 4)");
  CHECK_THROWS_AS(contract_lower(parse_factorization("(0 1)(1 2)(0 3)(0 4)"), 2), Error);
}

TEST_CASE("canonical family") {
  CHECK(to_text(canonical(2, 2)) == "(0 1 2)(0 3 4)");
  CHECK(to_text(canonical(1, 3)) == "(0 1 2 3)");
  CHECK(to_text(canonical(3, 1)) == "(0 1)(0 2)(0 3)");
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 3; ++k) CHECK_NOTHROW(validate(canonical(n, k)));
}

TEST_CASE("parsing normalizes rotations and tolerates whitespace") {
  CHECK(to_text(parse_factorization(" ( 2 0 1 )\n(0 3 4) ")) == "(0 1 2)(0 3 4)");
  CHECK_THROWS_AS(parse_factorization("(0 1"), Error);
  CHECK_THROWS_AS(parse_factorization("(0 x)"), Error);
  try {
    parse_factorization("(0 1)(0 2 3)");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::parse_error);
  }
}

TEST_CASE("json round trip") {
  const KFactorization f = parse_factorization(kGenkText);
  const nlohmann::json j = f;
  CHECK(j["k"] == 2);
  CHECK(j["n"] == 10);
  CHECK(j.get<KFactorization>() == f);
}

TEST_CASE("k divides all four statistics on the grid") {
  for (auto [n, k] : {std::pair{3, 2}, {2, 3}}) {
    for (const KFactorization& f : enumerate::k_factorizations(n, k)) {
      const AreaStats a = area_stats(f);
      CHECK(a.area % k == 0);
      CHECK(a.coarea % k == 0);
      CHECK(a.semiarea % k == 0);
      CHECK(a.cosemiarea % k == 0);
    }
  }
}

TEST_CASE("lower and upper are injective on a small grid") {
  for (auto [n, k] : {std::pair{3, 2}, {2, 3}}) {
    std::vector<std::string> lows, ups;
    for (const KFactorization& f : enumerate::k_factorizations(n, k)) {
      lows.push_back(to_text(lower(f)));
      ups.push_back(to_text(upper(f)));
    }
    std::sort(lows.begin(), lows.end());
    std::sort(ups.begin(), ups.end());
    CHECK(std::adjacent_find(lows.begin(), lows.end()) == lows.end());
    CHECK(std::adjacent_find(ups.begin(), ups.end()) == ups.end());
  }
}
