#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "simonzx/bits.hpp"
#include "simonzx/function_table.hpp"

namespace simonzx {

/**
 * @brief Oracle gate. CNOT controls on working qubit `control` and targets
 * auxiliary qubit `target`; X acts on auxiliary qubit `target`. Indices are
 * 1-based.
 */
struct Gate {
    enum class Kind { cnot, x };

    Kind kind = Kind::x;
    std::size_t control = 0;  ///< unused for X
    std::size_t target = 1;

    static Gate cnot(std::size_t control, std::size_t target) { return {Kind::cnot, control, target}; }
    static Gate x(std::size_t target) { return {Kind::x, 0, target}; }

    [[nodiscard]] bool is_cnot() const noexcept { return kind == Kind::cnot; }

    void validate(std::size_t n) const {
        auto in_range = [n](std::size_t i) { return i >= 1 && i <= n; };
        if (!in_range(target) || (is_cnot() && !in_range(control))) {
            throw std::out_of_range("gate " + name() + " has an index outside [1, " + std::to_string(n) + "]");
        }
    }

    [[nodiscard]] std::string name() const {
        if (is_cnot()) return "CNOT" + std::to_string(control) + std::to_string(target);
        return "X" + std::to_string(target);
    }

    friend bool operator==(const Gate&, const Gate&) = default;
    friend auto operator<=>(const Gate&, const Gate&) = default;
};

/// Concatenation of 2^n blocks of n bits; block i is the image of input i.
class Characteristic {
public:
    Characteristic(std::size_t n, BitString bits) : n_(n), bits_(std::move(bits)) {
        if (n_ == 0 || n_ > 20) throw std::invalid_argument("characteristic block width out of range");
        if (bits_.size() != n_ * (std::size_t{1} << n_)) {
            throw std::invalid_argument("characteristic length must be n * 2^n");
        }
    }

    static Characteristic zero(std::size_t n) { return {n, BitString(n * (std::size_t{1} << n))}; }

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] const BitString& bits() const noexcept { return bits_; }
    [[nodiscard]] std::size_t blocks() const noexcept { return std::size_t{1} << n_; }
    [[nodiscard]] BitString block(std::size_t i) const { return bits_.slice(i * n_, n_); }
    [[nodiscard]] std::string str() const { return bits_.str(); }

    Characteristic& operator^=(const Characteristic& other) {
        if (other.n_ != n_) throw std::invalid_argument("characteristic width mismatch");
        bits_ ^= other.bits_;
        return *this;
    }
    friend Characteristic operator^(Characteristic a, const Characteristic& b) {
        a ^= b;
        return a;
    }

    [[nodiscard]] FunctionTable to_function() const {
        std::vector<BitString> out;
        for (std::size_t i = 0; i < blocks(); ++i) out.push_back(block(i));
        return FunctionTable(n_, std::move(out));
    }

    friend bool operator==(const Characteristic&, const Characteristic&) = default;

private:
    std::size_t n_;
    BitString bits_;
};

inline Characteristic characteristic_of_function(const FunctionTable& f) {
    BitString bits;
    for (const auto& o : f.outputs()) bits.append(o);
    return {f.n(), std::move(bits)};
}

inline Characteristic characteristic_of_gate(const Gate& g, std::size_t n) {
    g.validate(n);
    auto c = Characteristic::zero(n);
    BitString bits = c.bits();
    const std::size_t offset = g.target - 1;
    for (std::uint64_t sigma = 0; sigma < (std::uint64_t{1} << n); ++sigma) {
        // bit `control` counted from the left, i.e. weight 2^(n - control)
        const bool active = !g.is_cnot() || ((sigma >> (n - g.control)) & 1U) != 0;
        if (active) bits.set(static_cast<std::size_t>(sigma) * n + offset, true);
    }
    return {n, std::move(bits)};
}

/// Classical action of the gate list on |t>|0^n>, read off the auxiliary register.
inline FunctionTable simulate_classically(std::span<const Gate> gates, std::size_t n) {
    std::vector<BitString> out;
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); ++t) {
        const auto input = BitString::from_uint(t, n);
        BitString aux(n);
        for (const auto& g : gates) {
            g.validate(n);
            if (!g.is_cnot() || input.get(g.control - 1)) aux.flip(g.target - 1);
        }
        out.push_back(std::move(aux));
    }
    return FunctionTable(n, std::move(out));
}

/// All n^2 CNOTs then the n X gates, CNOTs in (control, target) order.
inline std::vector<Gate> oracle_gate_set(std::size_t n) {
    std::vector<Gate> s;
    for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t k = 1; k <= n; ++k) s.push_back(Gate::cnot(j, k));
    }
    for (std::size_t k = 1; k <= n; ++k) s.push_back(Gate::x(k));
    return s;
}

}  // namespace simonzx
