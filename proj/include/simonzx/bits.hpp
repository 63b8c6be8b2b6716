#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace simonzx {

/**
 * @brief Fixed-length string of bits. Bit 1 (index 0) is the leftmost,
 * most-significant bit, so "010" has value 2.
 */
class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t n) : bits_(n, 0) {}

    static BitString from_string(std::string_view s) {
        BitString b(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] != '0' && s[i] != '1') {
                throw std::invalid_argument("bit string may only contain '0' and '1': " + std::string(s));
            }
            b.bits_[i] = static_cast<std::uint8_t>(s[i] - '0');
        }
        return b;
    }

    /// `value` read with bit 1 as the most significant of `n` bits.
    static BitString from_uint(std::uint64_t value, std::size_t n) {
        if (n > 64) throw std::invalid_argument("from_uint supports at most 64 bits");
        BitString b(n);
        for (std::size_t i = 0; i < n; ++i) {
            b.bits_[n - 1 - i] = static_cast<std::uint8_t>((value >> i) & 1U);
        }
        return b;
    }

    [[nodiscard]] std::uint64_t to_uint() const {
        if (size() > 64) throw std::logic_error("to_uint supports at most 64 bits");
        std::uint64_t v = 0;
        for (auto b : bits_) v = (v << 1U) | b;
        return v;
    }

    [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
    [[nodiscard]] bool empty() const noexcept { return bits_.empty(); }

    [[nodiscard]] bool get(std::size_t i) const { return bits_.at(i) != 0; }
    void set(std::size_t i, bool v) { bits_.at(i) = v ? 1 : 0; }
    void flip(std::size_t i) { bits_.at(i) ^= 1U; }

    [[nodiscard]] bool is_zero() const noexcept {
        return std::all_of(bits_.begin(), bits_.end(), [](auto b) { return b == 0; });
    }

    [[nodiscard]] std::size_t popcount() const noexcept {
        return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
    }

    /// Index of the first set bit, or size() when none.
    [[nodiscard]] std::size_t first_set() const noexcept {
        auto it = std::find(bits_.begin(), bits_.end(), std::uint8_t{1});
        return static_cast<std::size_t>(it - bits_.begin());
    }

    BitString& operator^=(const BitString& other) {
        require_same_length(other);
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= other.bits_[i];
        return *this;
    }

    friend BitString operator^(BitString a, const BitString& b) {
        a ^= b;
        return a;
    }

    /// Inner product over GF(2).
    [[nodiscard]] bool dot(const BitString& other) const {
        require_same_length(other);
        std::uint8_t acc = 0;
        for (std::size_t i = 0; i < bits_.size(); ++i) acc ^= bits_[i] & other.bits_[i];
        return acc != 0;
    }

    [[nodiscard]] BitString slice(std::size_t offset, std::size_t length) const {
        if (offset + length > size()) throw std::out_of_range("bit string slice out of range");
        BitString out(length);
        std::copy_n(bits_.begin() + static_cast<std::ptrdiff_t>(offset), length, out.bits_.begin());
        return out;
    }

    void append(const BitString& tail) { bits_.insert(bits_.end(), tail.bits_.begin(), tail.bits_.end()); }

    [[nodiscard]] std::string str() const {
        std::string s(bits_.size(), '0');
        for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = bits_[i] != 0 ? '1' : '0';
        return s;
    }

    friend bool operator==(const BitString&, const BitString&) = default;
    friend auto operator<=>(const BitString&, const BitString&) = default;

private:
    void require_same_length(const BitString& other) const {
        if (other.size() != size()) {
            throw std::invalid_argument("bit strings of different length: " + str() + " vs " + other.str());
        }
    }

    std::vector<std::uint8_t> bits_;
};

inline BitString operator""_bits(const char* s, std::size_t len) {
    return BitString::from_string(std::string_view(s, len));
}

}  // namespace simonzx
