#include <gtest/gtest.h>

#include <random>
#include <set>

#include "simonzx/oracle_synth.hpp"

using namespace simonzx;

namespace {

// every affine map on n bits, by enumerating A and c
std::vector<FunctionTable> enumerate_affine(std::size_t n) {
    std::vector<FunctionTable> out;
    const std::uint64_t cells = n * n;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << cells); ++a) {
        std::vector<BitString> rows;
        for (std::size_t i = 0; i < n; ++i) rows.push_back(BitString::from_uint((a >> (i * n)) & ((1U << n) - 1), n));
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
            out.push_back(FunctionTable::affine(rows, BitString::from_uint(c, n)));
        }
    }
    return out;
}

}  // namespace

TEST(OracleSynth, WorkedTwoQubitExample) {
    const auto c = characteristic_of_function(FunctionTable::from_strings(2, {"10", "11", "11", "10"}));
    const auto r = factorize(c);
    ASSERT_TRUE(std::holds_alternative<GateList>(r));
    const auto& gl = std::get<GateList>(r);
    ASSERT_EQ(gl.gates.size(), 3U);
    EXPECT_EQ(gl.gates[0].name(), "X1");
    EXPECT_EQ(gl.gates[1].name(), "CNOT22");
    EXPECT_EQ(gl.gates[2].name(), "CNOT12");
    // intermediate strings of the scan
    auto work = c;
    std::vector<std::string> trail;
    for (const auto& g : gl.gates) {
        work ^= characteristic_of_gate(g, 2);
        trail.push_back(work.str());
    }
    EXPECT_EQ(trail, (std::vector<std::string>{"00010100", "00000101", "00000000"}));
}

TEST(OracleSynth, IdentityNeedsDiagonalCnots) {
    const auto r = synthesize_oracle(FunctionTable::identity(2));
    ASSERT_TRUE(std::holds_alternative<GateList>(r));
    std::vector<std::string> names;
    for (const auto& g : std::get<GateList>(r).gates) names.push_back(g.name());
    // 00011011: the first set bit is led by CNOT22 (00010001), leaving 00001010 = CNOT11
    EXPECT_EQ(names, (std::vector<std::string>{"CNOT22", "CNOT11"}));
}

TEST(OracleSynth, LeadersAreDistinct) {
    for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(leader_table(n).size(), n * n + n);
}

TEST(OracleSynth, EveryAffineTwoQubitMapRoundTrips) {
    const auto all = enumerate_affine(2);
    std::set<std::vector<BitString>> distinct;
    for (const auto& f : all) distinct.insert(f.outputs());
    EXPECT_EQ(distinct.size(), 64U);
    std::size_t longest = 0;
    for (const auto& f : all) {
        const auto r = synthesize_oracle(f);
        ASSERT_TRUE(std::holds_alternative<GateList>(r));
        const auto& gl = std::get<GateList>(r);
        EXPECT_EQ(simulate_classically(gl.gates, 2), f);
        longest = std::max(longest, gl.gates.size());
    }
    // at most one gate per leader, and the all-gates oracle reaches that
    EXPECT_EQ(longest, 6U);
}

TEST(OracleSynth, RandomThreeQubitAffineMapsRoundTrip) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<BitString> rows;
        for (int i = 0; i < 3; ++i) rows.push_back(BitString::from_uint(rng() % 8, 3));
        const auto f = FunctionTable::affine(rows, BitString::from_uint(rng() % 8, 3));
        const auto r = synthesize_oracle(f);
        ASSERT_TRUE(std::holds_alternative<GateList>(r));
        EXPECT_LE(std::get<GateList>(r).gates.size(), 12U);
        EXPECT_EQ(simulate_classically(std::get<GateList>(r).gates, 3), f);
    }
}

TEST(OracleSynth, NonAffineIsUnrealizable) {
    // period 101 but not affine
    const auto f = FunctionTable::from_strings(3, {"000", "001", "010", "100", "001", "000", "100", "010"});
    EXPECT_EQ(find_period(f).kind, PeriodKind::two_to_one);
    EXPECT_FALSE(is_affine(f));
    const auto r = synthesize_oracle(f);
    ASSERT_TRUE(std::holds_alternative<Unrealizable>(r));
    EXPECT_FALSE(std::get<Unrealizable>(r).residual.bits().is_zero());
}

TEST(OracleSynth, RealizableExactlyWhenAffine) {
    // all 256 functions on two bits
    std::size_t realizable = 0;
    for (std::uint64_t code = 0; code < 256; ++code) {
        std::vector<BitString> outs;
        for (int i = 0; i < 4; ++i) outs.push_back(BitString::from_uint((code >> (2 * i)) & 3U, 2));
        const FunctionTable f(2, outs);
        const bool ok = std::holds_alternative<GateList>(synthesize_oracle(f));
        EXPECT_EQ(ok, is_affine(f));
        realizable += ok ? 1 : 0;
    }
    EXPECT_EQ(realizable, enumerate_affine(2).size());
}
