#include <doctest.h>

#include "kfact/verify.hpp"

using namespace kfact;

TEST_CASE("main theorem suite") {
  const verify::Report r = verify::check_main_theorem(2, 2);
  CHECK(r.ok());
  CHECK(r.checked == 5);
  CHECK(verify::check_main_theorem(1, 1).ok());
  CHECK(verify::check_main_theorem(3, 2).ok());
}

TEST_CASE("distribution suite") {
  CHECK(verify::check_distributions(1, 1).ok());
  CHECK(verify::check_distributions(2, 1).ok());
  CHECK(verify::check_distributions(3, 1).ok());
  CHECK(verify::check_distributions(2, 2).ok());
  CHECK(verify::check_distributions(2, 3).ok());
}

TEST_CASE("hook identity suite") {
  CHECK(verify::check_hook_identities(1, 1).ok());
  CHECK(verify::check_hook_identities(2, 1).ok());
  CHECK(verify::check_hook_identities(4, 1).ok());
  CHECK(verify::check_hook_identities(2, 2).ok());
  CHECK(verify::check_hook_identities(1, 3).ok());
}

TEST_CASE("round trip suite") {
  const verify::Report r = verify::check_roundtrips(3, 1);
  CHECK(r.ok());
  CHECK(r.checked >= 16);
  CHECK(verify::check_roundtrips(2, 2).ok());
  CHECK(verify::check_roundtrips(1, 3).ok());
}

TEST_CASE("count suite") {
  CHECK(verify::check_counts(4, 1).ok());
  CHECK(verify::check_counts(3, 2).ok());
}

TEST_CASE("report rendering") {
  verify::Report r{"main", 2, 1, 3, {}};
  CHECK(verify::to_text(r) == "main n=2 k=1 checked=3 pass");
  r.failures.push_back("example");
  CHECK(verify::to_text(r) == "main n=2 k=1 checked=3 FAIL\n  counterexample: example");
  const nlohmann::json j = verify::to_json(r);
  CHECK(j["suite"] == "main");
  CHECK(j["failures"].size() == 1);
}

TEST_CASE("default grid") {
  const auto grid = verify::default_grid();
  CHECK(grid.size() == 13);
  CHECK(grid.front() == std::pair{1, 1});
  CHECK(grid.back() == std::pair{3, 3});
}
