#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "simonzx/bits.hpp"

namespace simonzx {

/// Explicit table f: {0,1}^n -> {0,1}^n, outputs listed in increasing input order.
class FunctionTable {
public:
    FunctionTable(std::size_t n, std::vector<BitString> outputs) : n_(n), outputs_(std::move(outputs)) {
        if (n_ == 0) throw std::invalid_argument("function table width must be positive");
        if (n_ > 24) throw std::invalid_argument("function table width above 24 is not supported");
        if (outputs_.size() != (std::size_t{1} << n_)) {
            throw std::invalid_argument("function table on " + std::to_string(n_) + " bits needs " +
                                        std::to_string(std::size_t{1} << n_) + " outputs, got " +
                                        std::to_string(outputs_.size()));
        }
        for (const auto& o : outputs_) {
            if (o.size() != n_) throw std::invalid_argument("output '" + o.str() + "' has wrong width");
        }
    }

    static FunctionTable from_strings(std::size_t n, const std::vector<std::string>& outputs) {
        std::vector<BitString> bits;
        bits.reserve(outputs.size());
        for (const auto& s : outputs) bits.push_back(BitString::from_string(s));
        return FunctionTable(n, std::move(bits));
    }

    static FunctionTable identity(std::size_t n) {
        std::vector<BitString> out;
        for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); ++t) out.push_back(BitString::from_uint(t, n));
        return FunctionTable(n, std::move(out));
    }

    static FunctionTable constant(const BitString& value) {
        return FunctionTable(value.size(), std::vector<BitString>(std::size_t{1} << value.size(), value));
    }

    /// f(t) = A t + c over GF(2). `rows[i]` is row i of A (bit i+1 of the output).
    static FunctionTable affine(const std::vector<BitString>& rows, const BitString& offset) {
        const std::size_t n = offset.size();
        if (rows.size() != n) throw std::invalid_argument("affine map needs n rows");
        std::vector<BitString> out;
        for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); ++t) {
            const auto input = BitString::from_uint(t, n);
            BitString y = offset;
            for (std::size_t i = 0; i < n; ++i) {
                if (rows[i].dot(input)) y.flip(i);
            }
            out.push_back(std::move(y));
        }
        return FunctionTable(n, std::move(out));
    }

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] std::size_t domain_size() const noexcept { return outputs_.size(); }
    [[nodiscard]] const std::vector<BitString>& outputs() const noexcept { return outputs_; }

    [[nodiscard]] const BitString& operator()(const BitString& input) const {
        if (input.size() != n_) throw std::invalid_argument("input width mismatch");
        return outputs_[static_cast<std::size_t>(input.to_uint())];
    }
    [[nodiscard]] const BitString& at(std::uint64_t input) const { return outputs_.at(static_cast<std::size_t>(input)); }

    [[nodiscard]] std::size_t image_size() const {
        return std::set<BitString>(outputs_.begin(), outputs_.end()).size();
    }

    friend bool operator==(const FunctionTable&, const FunctionTable&) = default;

private:
    std::size_t n_;
    std::vector<BitString> outputs_;
};

enum class PeriodKind { bijective, two_to_one, invalid };

inline const char* to_string(PeriodKind k) {
    switch (k) {
        case PeriodKind::bijective: return "bijective";
        case PeriodKind::two_to_one: return "two-to-one";
        case PeriodKind::invalid: return "invalid";
    }
    return "?";
}

struct PeriodReport {
    PeriodKind kind = PeriodKind::invalid;
    BitString period;  ///< 0^n for bijective; empty when invalid

    friend bool operator==(const PeriodReport&, const PeriodReport&) = default;
};

/**
 * @brief Classify f against the Simon promise by direct collision analysis.
 *
 * Every colliding input pair contributes the offset a ^ b. A two-to-one
 * function has exactly one such offset s and every input collides with
 * a ^ s; anything else (constant maps, many-to-one maps) is invalid.
 */
inline PeriodReport find_period(const FunctionTable& f) {
    const std::size_t n = f.n();
    std::map<BitString, std::vector<std::uint64_t>> preimages;
    for (std::uint64_t t = 0; t < f.domain_size(); ++t) preimages[f.at(t)].push_back(t);

    if (preimages.size() == f.domain_size()) return {PeriodKind::bijective, BitString(n)};

    std::set<std::uint64_t> offsets;
    for (const auto& [image, inputs] : preimages) {
        if (inputs.size() != 2) return {PeriodKind::invalid, {}};
        offsets.insert(inputs[0] ^ inputs[1]);
    }
    if (offsets.size() != 1) return {PeriodKind::invalid, {}};
    return {PeriodKind::two_to_one, BitString::from_uint(*offsets.begin(), n)};
}

/// f(t1 ^ t2) == f(t1) ^ f(t2) ^ f(0) for all pairs.
inline bool is_affine(const FunctionTable& f) {
    const auto& zero = f.at(0);
    for (std::uint64_t a = 0; a < f.domain_size(); ++a) {
        for (std::uint64_t b = a + 1; b < f.domain_size(); ++b) {
            if (f.at(a ^ b) != (f.at(a) ^ f.at(b) ^ zero)) return false;
        }
    }
    return true;
}

}  // namespace simonzx
