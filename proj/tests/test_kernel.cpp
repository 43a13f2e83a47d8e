#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "floorlog/errors.hpp"
#include "floorlog/kernel.hpp"
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

TEST_CASE("kernel rows are strided subsequences") {
    CHECK(as_longs(kernel_row(2, kZero, {0, 0}, 4)) == std::vector<long>{0, 1, 1, 2});
    // a(2n) for alpha=1/2: a(0), a(2), a(4), a(6) from 0 1 22 2333...
    CHECK(as_longs(kernel_row(2, kHalf, {1, 0}, 4)) == std::vector<long>{0, 2, 2, 3});
    CHECK(as_longs(kernel_row(2, kHalf, {1, 1}, 4)) == std::vector<long>{1, 2, 3, 3});

    SequenceWindow w = sequence_terms(3, kHalf, 0, 64);
    CHECK(kernel_row(3, kHalf, {0, 0}, 64) == w.values);

    CHECK_THROWS_AS(kernel_row(2, kZero, {1, 2}, 4), parameter_error);
}

TEST_CASE("generic profiles on plumbing sequences") {
    RankProfile ones = rank_profile_generic([](long long) { return Int(5); }, 2, 4, 64);
    CHECK(ones.ranks == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(ones.stabilized);

    RankProfile zero = rank_profile_generic([](long long) { return Int(0); }, 2, 4, 64);
    CHECK(zero.ranks == std::vector<int>{0, 0, 0, 0, 0});

    RankProfile ident = rank_profile_generic(
        [](long long n) { return Int(static_cast<long>(n)); }, 2, 5, 128);
    CHECK(ident.ranks == std::vector<int>{1, 2, 2, 2, 2, 2});
    CHECK(ident.stabilized);
}

TEST_CASE("generic profile matches the dedicated one") {
    std::vector<long long> seq = sequence_values_i64(2, kHalf, 16 * 256);
    RankProfile direct = rank_profile(2, kHalf, 4, 256);
    RankProfile generic = rank_profile_generic(
        [&seq](long long i) { return Int(static_cast<long>(seq[static_cast<size_t>(i)])); }, 2,
        4, 256);
    CHECK(direct.ranks == generic.ranks);
    CHECK(direct.stabilized == generic.stabilized);
}

TEST_CASE("rank profile of the 2-regular example plateaus at 4") {
    RankProfile p = rank_profile(2, kZero, 6, 1024);
    CHECK(p.ranks == std::vector<int>{1, 3, 4, 4, 4, 4, 4});
    CHECK(p.stabilized);

    RankProfile p2 = rank_profile(2, kZero, 6, 4096);
    CHECK(p2.ranks == p.ranks);
    CHECK(p2.stabilized);
}

TEST_CASE("rank profile of the irrational case keeps growing") {
    RankProfile p = rank_profile(2, kHalf, 5, 256);
    CHECK(p.ranks == std::vector<int>{1, 3, 5, 8, 9, 10});
    CHECK_FALSE(p.stabilized);
}

TEST_CASE("ranks are monotone in exponent and truncation") {
    for (long trunc : {128L, 256L, 512L}) {
        RankProfile p = rank_profile(2, kHalf, 5, trunc);
        long long rows = 1, total = 0;
        for (size_t e = 0; e < p.ranks.size(); ++e) {
            if (e > 0) CHECK(p.ranks[e] >= p.ranks[e - 1]);
            total += rows;
            rows *= 2;
            CHECK(p.ranks[e] <= std::min<long long>(trunc, total));
        }
    }
    RankProfile small = rank_profile(2, kHalf, 5, 128);
    RankProfile big = rank_profile(2, kHalf, 5, 512);
    for (size_t e = 0; e < small.ranks.size(); ++e) CHECK(small.ranks[e] <= big.ranks[e]);
}

TEST_CASE("rank is invariant under integer row mixing") {
    std::vector<long long> seq = sequence_values_i64(2, kHalf, 8 * 128);
    std::vector<std::vector<Int>> rows;
    long long stride = 1;
    for (int e = 0; e <= 3; ++e) {
        for (long long i = 0; i < stride; ++i) {
            std::vector<Int> row(128);
            for (long n = 0; n < 128; ++n)
                row[static_cast<size_t>(n)] =
                    static_cast<long>(seq[static_cast<size_t>(i + stride * n)]);
            rows.push_back(std::move(row));
        }
        stride *= 2;
    }
    IntRowBasis plain(128);
    for (const auto& r : rows) plain.insert(r);

    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<size_t> pick(0, rows.size() - 1);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int round = 0; round < 3; ++round) {
        for (size_t i = 0; i < rows.size(); ++i) {
            size_t j = pick(rng);
            if (j == i) continue;
            long c = coef(rng);
            for (size_t t = 0; t < rows[i].size(); ++t) rows[i][t] += c * rows[j][t];
        }
        IntRowBasis mixed(128);
        for (const auto& r : rows) mixed.insert(r);
        CHECK(mixed.rank() == plain.rank());
    }
}

TEST_CASE("stabilization needs room") {
    CHECK_THROWS_AS(rank_profile(2, kZero, 1, 64), parameter_error);
}
