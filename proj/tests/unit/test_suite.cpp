#include "doctest.h"

#include <json.hpp>

#include "zforge/errors.hpp"
#include "zforge/suite.hpp"

using namespace zforge;

TEST_CASE("quick suite passes at P = 50 and is ordered by name") {
  const auto results = suite::run(suite::Level::Quick, numeric::PrecisionContext(50, 10), 2);
  REQUIRE(results.size() == 9);
  for (std::size_t i = 0; i < results.size(); ++i) {
    CAPTURE(results[i].id);
    CHECK(results[i].pass);
    if (i > 0) CHECK(results[i - 1].id < results[i].id);
  }
  const auto parsed = nlohmann::json::parse(suite::to_json(results));
  CHECK(parsed.size() == 9);
  CHECK(parsed[0]["details"][0]["pass"] == true);
}

TEST_CASE("quick suite passes at a low precision") {
  const auto results = suite::run(suite::Level::Quick, numeric::PrecisionContext(12, 2), 1);
  for (const auto& r : results) CHECK(r.pass);
}

TEST_CASE("single criteria") {
  const auto c1 = suite::run_criterion(1);
  CHECK(c1.pass);
  CHECK(c1.id == "criterion-1");
  const auto c6 = suite::run_criterion(6);
  CHECK(c6.pass);
  // the runtime budget is always reported last
  CHECK(c6.details.back().label.find("runtime") == 0);
  CHECK_THROWS_AS(suite::run_criterion(12), DomainError);
}

TEST_CASE("level names") {
  CHECK(suite::level_from_name("full") == suite::Level::Full);
  CHECK(suite::level_name(suite::Level::Quick) == "quick");
  CHECK_THROWS_AS(suite::level_from_name("medium"), ParseError);
}
