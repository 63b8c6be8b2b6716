#include <gtest/gtest.h>

#include "simonzx/bits.hpp"

using namespace simonzx;

TEST(BitString, FirstBitIsMostSignificant) {
    EXPECT_EQ("010"_bits.to_uint(), 2U);
    EXPECT_EQ(BitString::from_uint(6, 3).str(), "110");
    for (std::uint64_t v = 0; v < 32; ++v) EXPECT_EQ(BitString::from_uint(v, 5).to_uint(), v);
}

TEST(BitString, RejectsForeignCharacters) { EXPECT_THROW(BitString::from_string("01a"), std::invalid_argument); }

TEST(BitString, XorAndDot) {
    const auto a = "1011"_bits;
    const auto b = "0110"_bits;
    EXPECT_EQ((a ^ b).str(), "1101");
    // 1*0 + 0*1 + 1*1 + 1*0 = 1
    EXPECT_TRUE(a.dot(b));
    EXPECT_FALSE(a.dot("0100"_bits));
    EXPECT_THROW(a ^ "01"_bits, std::invalid_argument);
}

TEST(BitString, DotMatchesPopcountParity) {
    for (std::uint64_t x = 0; x < 16; ++x) {
        for (std::uint64_t y = 0; y < 16; ++y) {
            const bool parity = (__builtin_popcountll(x & y) & 1) != 0;
            EXPECT_EQ(BitString::from_uint(x, 4).dot(BitString::from_uint(y, 4)), parity);
        }
    }
}

TEST(BitString, SliceAppendFirstSet) {
    auto s = "0010"_bits;
    EXPECT_EQ(s.first_set(), 2U);
    EXPECT_EQ(BitString(3).first_set(), 3U);
    s.append("11"_bits);
    EXPECT_EQ(s.str(), "001011");
    EXPECT_EQ(s.slice(2, 3).str(), "101");
    EXPECT_THROW((void)s.slice(5, 2), std::out_of_range);
    EXPECT_EQ(s.popcount(), 3U);
}
