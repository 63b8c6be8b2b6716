#include <gtest/gtest.h>

#include <random>

#include "simonzx/gf2.hpp"

using namespace simonzx;

namespace {

// every nonzero s with m.s = 0 for all samples, by brute force
std::vector<BitString> brute_nullspace(const std::vector<BitString>& samples, std::size_t n) {
    std::vector<BitString> out;
    for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); ++v) {
        const auto s = BitString::from_uint(v, n);
        bool ok = true;
        for (const auto& m : samples) ok = ok && !m.dot(s);
        if (ok) out.push_back(s);
    }
    return out;
}

}  // namespace

TEST(Gf2, RankOfSmallMatrices) {
    std::vector<BitString> rows{"110"_bits, "011"_bits, "101"_bits};
    EXPECT_EQ(gf2::rank(rows), 2U);
    rows.push_back("001"_bits);
    EXPECT_EQ(gf2::rank(rows), 3U);
    EXPECT_EQ(gf2::rank(std::vector<BitString>{}), 0U);
}

TEST(Gf2, InsertReportsIndependence) {
    gf2::RowSpace s(3);
    EXPECT_TRUE(s.insert("110"_bits));
    EXPECT_FALSE(s.insert("110"_bits));
    EXPECT_TRUE(s.insert("011"_bits));
    EXPECT_FALSE(s.insert("101"_bits));
    EXPECT_FALSE(s.insert("000"_bits));
    EXPECT_TRUE(s.contains("101"_bits));
}

TEST(Gf2, SolvesPeriodOfRankDeficientSystems) {
    const std::vector<BitString> eqs{"011"_bits, "110"_bits};
    const auto sol = gf2::solve_period(eqs);
    ASSERT_TRUE(std::holds_alternative<gf2::UniquePeriod>(sol));
    EXPECT_EQ(std::get<gf2::UniquePeriod>(sol).period.str(), "111");
}

TEST(Gf2, UnderdeterminedAndInconsistent) {
    EXPECT_TRUE(std::holds_alternative<gf2::Underdetermined>(gf2::solve_period(std::vector<BitString>{})));
    EXPECT_TRUE(std::holds_alternative<gf2::Underdetermined>(gf2::solve_period(std::vector{"100"_bits})));
    EXPECT_TRUE(std::holds_alternative<gf2::Inconsistent>(gf2::solve_period(std::vector{"10"_bits, "01"_bits})));
}

TEST(Gf2, SingleBitNeedsNoEquations) {
    const auto sol = gf2::solve_period(std::vector<BitString>{}, 1);
    ASSERT_TRUE(std::holds_alternative<gf2::UniquePeriod>(sol));
    EXPECT_EQ(std::get<gf2::UniquePeriod>(sol).period.str(), "1");
}

TEST(Gf2, NullspaceMatchesBruteForce) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 6;
        std::vector<BitString> rows;
        for (std::size_t i = 0, k = rng() % (n + 2); i < k; ++i) rows.push_back(BitString::from_uint(rng() % (1U << n), n));
        gf2::RowSpace s(n);
        for (const auto& r : rows) s.insert(r);
        const auto brute = brute_nullspace(rows, n);
        // the span of the basis has 2^dim elements, brute force lists the nonzero ones
        const auto basis = s.nullspace();
        EXPECT_EQ(basis.size(), n - s.rank());
        EXPECT_EQ(brute.size() + 1, std::size_t{1} << basis.size());
        for (const auto& b : basis) {
            for (const auto& r : rows) EXPECT_FALSE(r.dot(b));
        }
    }
}
