#include <doctest.h>

#include <vector>

#include "kfact/enumerate.hpp"
#include "kfact/parking.hpp"

using namespace kfact;

namespace {

const char* kTauiText = "(6 7)(0 2)(3 6)(3 10)(8 9)(0 3)(5 6)(4 5)(8 10)(1 2)";
const char* kGenkText =
    "(0 1 4)(6 7 8)(13 16 17)(5 6 9)(18 19 20)(0 13 18)(10 11 12)(5 10 13)"
    "(2 3 4)(14 15 16)";

}  // namespace

TEST_CASE("is_k_parking") {
  CHECK(is_k_parking({0, 5, 1}, 3));
  CHECK(!is_k_parking({1, 1}, 1));
  CHECK(is_k_parking({0, 0, 0, 0}, 1));
  CHECK(is_k_parking({0, 0, 0, 0}, 3));
  CHECK(!is_k_parking({0, -1}, 1));
}

TEST_CASE("displacement") {
  CHECK(disp(ParkingFunction{1, {0, 0}}) == 1);
  CHECK(disp(ParkingFunction{2, {0, 6, 13, 5, 18, 0, 10, 5, 2, 14}}) == 17);
  CHECK(disp(ParkingFunction{3, {0, 3, 6, 9}}) == 0);
}

TEST_CASE("projection onto least entries") {
  CHECK(project_least(parse_factorization(kGenkText)) ==
        ParkingFunction{2, {0, 6, 13, 5, 18, 0, 10, 5, 2, 14}});
  CHECK(project_least(parse_factorization("(0 1)(0 2)")).entries ==
        std::vector<int>{0, 0});
  CHECK(project_least(parse_factorization("(0 2)(1 2)")).entries ==
        std::vector<int>{0, 1});
  CHECK(project_least(parse_factorization("(1 2)(0 1)")).entries ==
        std::vector<int>{1, 0});
  CHECK(project_least(canonical(4, 3)).entries == std::vector<int>(4, 0));
}

TEST_CASE("area equals k times displacement of the projection") {
  for (auto [n, k] : {std::pair{4, 1}, {3, 2}, {2, 3}}) {
    for (const KFactorization& f : enumerate::k_factorizations(n, k))
      CHECK(area_stats(f).area == k * disp(project_least(f)));
  }
}

TEST_CASE("stack reconstruction from least entries") {
  const ParkingFunction taui{1, {6, 0, 3, 3, 8, 0, 5, 4, 8, 1}};
  CHECK(to_text(sb_inverse(taui)) == kTauiText);
  CHECK(to_text(sb_inverse(ParkingFunction{1, {0, 0}})) == "(0 1)(0 2)");
  CHECK(to_text(sb_inverse(ParkingFunction{1, {0, 1}})) == "(0 2)(1 2)");
  CHECK(to_text(sb_inverse(ParkingFunction{1, {1, 0}})) == "(1 2)(0 1)");
  CHECK(to_text(sb_inverse(ParkingFunction{1, {0}})) == "(0 1)");
}

TEST_CASE("expand") {
  CHECK(expand(ParkingFunction{3, {0, 5, 1}}).entries ==
        std::vector<int>{0, 0, 0, 5, 5, 5, 1, 1, 1});
  CHECK(expand(ParkingFunction{1, {0, 1}}).entries == std::vector<int>{0, 1});
  CHECK(expand(ParkingFunction{2, {0, 0}}).entries == std::vector<int>(4, 0));
  CHECK(expand(ParkingFunction{3, {0, 5, 1}}).k == 1);
  CHECK_NOTHROW(validate(expand(ParkingFunction{3, {0, 5, 1}})));
}

TEST_CASE("full inverse projection") {
  const ParkingFunction p{2, {0, 6, 13, 5, 18, 0, 10, 5, 2, 14}};
  CHECK(project_least_inverse(p) == parse_factorization(kGenkText));
  CHECK(project_least(project_least_inverse(ParkingFunction{2, {0, 0, 0}})).entries ==
        std::vector<int>(3, 0));
  CHECK(project_least_inverse(ParkingFunction{3, {0}}) == canonical(1, 3));
}

TEST_CASE("projection round trips on the grid") {
  for (auto [n, k] : {std::pair{4, 1}, {3, 2}, {2, 3}}) {
    for (const ParkingFunction& p : enumerate::k_parking_functions(n, k))
      CHECK(project_least(project_least_inverse(p)) == p);
    for (const KFactorization& f : enumerate::k_factorizations(n, k))
      CHECK(project_least_inverse(project_least(f)) == f);
  }
}

TEST_CASE("validation and text forms") {
  CHECK_THROWS_AS(validate(ParkingFunction{1, {1, 1}}), Error);
  CHECK(to_text(ParkingFunction{2, {0, 6, 13}}) == "0,6,13");
  CHECK(parse_parking("0, 6 ,13", 2).entries == std::vector<int>{0, 6, 13});
  CHECK_THROWS_AS(parse_parking("0,x", 1), Error);

  const ParkingFunction p{2, {0, 2, 1}};
  const nlohmann::json j = p;
  CHECK(j["k"] == 2);
  CHECK(j.get<ParkingFunction>() == p);
}
