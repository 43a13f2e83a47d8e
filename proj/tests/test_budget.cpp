// FLOORLOG_BUDGET is read once per process, so the override lives in its own
// binary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "floorlog/config.hpp"
#include "floorlog/errors.hpp"
#include "floorlog/series.hpp"

using namespace floorlog;

TEST_CASE("budget override caps brute-force work") {
    setenv("FLOORLOG_BUDGET", "100", 1);
    CHECK(summation_budget() == 100);
    AlphaSpec half = AlphaSpec::parse("1/2");
    CHECK(b_bruteforce(2, half, 6) == 179); // 2^6 = 64 <= 100
    CHECK_THROWS_AS(b_bruteforce(2, half, 7), budget_error);
    CHECK_THROWS_AS(nc_series_terms(2, half, 7), budget_error);
    CHECK(b_closed_form(2, half, 7) == 422); // closed form is budget-free
}
