#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "floorlog/errors.hpp"
#include "floorlog/sequence.hpp"

using namespace floorlog;

namespace {

const AlphaSpec kHalf = AlphaSpec::parse("1/2");
const AlphaSpec kZero = AlphaSpec::parse("0");

std::vector<long> as_longs(const std::vector<Int>& v) {
    std::vector<long> out;
    out.reserve(v.size());
    for (const Int& x : v) out.push_back(to_long(x));
    return out;
}

} // namespace

TEST_CASE("tau digits, least significant first") {
    CHECK(tau(2, 0).digits.empty());
    CHECK(tau(2, 5).digits == std::vector<int>{1, 0, 1});
    CHECK(tau(2, 6).digits == std::vector<int>{0, 1, 1});
    CHECK(tau(10, 1234).digits == std::vector<int>{4, 3, 2, 1});
    CHECK(tau(2, 5).str() == "101");
    CHECK(tau(16, 255).str() == "15.15");
}

TEST_CASE("tau round trip and length agreement") {
    for (long n = 0; n < 1000000; ++n) {
        BaseKWord w = tau(2, n);
        CHECK(w.value() == n);
        if (n > 0) CHECK(w.digits.back() != 0);
    }
    // spot-check larger bases
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> pick(0, 1000000);
    for (unsigned k : {3u, 7u, 10u, 16u}) {
        for (int i = 0; i < 20000; ++i) {
            long n = pick(rng);
            BaseKWord w = tau(k, n);
            CHECK(w.value() == n);
            CHECK(tau_length(k, n) == static_cast<long>(w.digits.size()));
        }
    }
    CHECK(tau_length(2, 0) == 0);
    CHECK(tau_length(2, 8) == 4);
    CHECK(tau_length(3, 9) == 3);
}

TEST_CASE("sequence windows match the hand computation") {
    CHECK(as_longs(sequence_terms(2, kHalf, 0, 8).values) ==
          std::vector<long>{0, 1, 2, 2, 2, 3, 3, 3});
    CHECK(as_longs(sequence_terms(2, kZero, 0, 8).values) ==
          std::vector<long>{0, 1, 1, 2, 2, 2, 2, 3});
    CHECK(as_longs(sequence_terms(5, AlphaSpec::parse("7"), 0, 1).values) ==
          std::vector<long>{7});
    CHECK(sequence_terms(2, kHalf, 0, 0).values.empty());
    CHECK_THROWS_AS(sequence_terms(2, kHalf, 0, -1), parameter_error);
}

TEST_CASE("windows are consistent across offsets") {
    SequenceWindow all = sequence_terms(3, AlphaSpec::parse("1/2+log(5/3)"), 0, 400);
    SequenceWindow tail = sequence_terms(3, AlphaSpec::parse("1/2+log(5/3)"), 123, 40);
    for (long i = 0; i < 40; ++i)
        CHECK(tail.values[static_cast<size_t>(i)] == all.values[static_cast<size_t>(123 + i)]);
}

TEST_CASE("interval alphas stream certified floors") {
    AlphaSpec dec = AlphaSpec::parse("dec:0.5~1/1000000000");
    CHECK(as_longs(sequence_terms(2, dec, 0, 8).values) ==
          std::vector<long>{0, 1, 2, 2, 2, 3, 3, 3});
}

TEST_CASE("grouped_by_exponent reproduces the gathered display") {
    auto groups = grouped_by_exponent(2, kHalf, 4);
    REQUIRE(groups.size() == 5);
    CHECK(groups[0].second.size() == 1);
    CHECK(to_long(groups[0].second[0]) == 0);
    CHECK(as_longs(groups[3].second) == std::vector<long>{2, 3, 3, 3});
    CHECK(as_longs(groups[4].second) == std::vector<long>{3, 3, 3, 4, 4, 4, 4, 4});

    auto g0 = grouped_by_exponent(2, kZero, 1);
    CHECK(as_longs(g0[1].second) == std::vector<long>{1});
}

TEST_CASE("groups hold at most two values and stay sorted") {
    for (const char* text : {"0", "1/2", "-1/2", "log(3)", "1/2+log(5/3)"}) {
        AlphaSpec a = AlphaSpec::parse(text);
        for (unsigned k : {2u, 3u}) {
            Int fl = floor_alpha_plus_log(k, a, 0);
            auto groups = grouped_by_exponent(k, a, 6);
            for (const auto& [m, vals] : groups) {
                if (m == 0) continue;
                CHECK(vals.size() == static_cast<size_t>(to_long(
                                         ipow(Int(k), static_cast<unsigned long>(m)) -
                                         ipow(Int(k), static_cast<unsigned long>(m - 1)))));
                for (size_t i = 0; i < vals.size(); ++i) {
                    CHECK((vals[i] == fl + m - 1 || vals[i] == fl + m));
                    if (i > 0) CHECK(vals[i - 1] <= vals[i]);
                }
            }
        }
    }
}

TEST_CASE("csv window emission") {
    std::ostringstream os;
    write_window_csv(os, sequence_terms(2, kHalf, 0, 4));
    CHECK(os.str() == "n,a,tau_len,tau\n"
                      "0,0,0,\n"
                      "1,1,1,1\n"
                      "2,2,2,01\n"
                      "3,2,2,11\n");
}
