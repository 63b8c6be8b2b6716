#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <variant>
#include <vector>

#include "simonzx/characteristic.hpp"
#include "simonzx/function_table.hpp"

namespace simonzx {

struct GateList {
    std::size_t n = 0;
    std::vector<Gate> gates;

    friend bool operator==(const GateList&, const GateList&) = default;
};

/// Returned when the characteristic has a set bit no gate leads at; the function is not affine.
struct Unrealizable {
    Characteristic residual;
};

using SynthesisResult = std::variant<GateList, Unrealizable>;

/// Position of each gate's first set characteristic bit. Leaders are pairwise distinct.
inline std::map<std::size_t, Gate> leader_table(std::size_t n) {
    if (n == 0) throw std::invalid_argument("leader table needs n >= 1");
    std::map<std::size_t, Gate> table;
    for (const auto& g : oracle_gate_set(n)) {
        const auto pos = characteristic_of_gate(g, n).bits().first_set();
        auto [it, inserted] = table.emplace(pos, g);
        if (!inserted) {
            throw std::logic_error("gates " + it->second.name() + " and " + g.name() + " share a leader");
        }
    }
    return table;
}

/**
 * @brief Factor a characteristic into CNOT/X gate characteristics.
 *
 * Scans left to right; at every set bit the gate leading at that position is
 * XORed in. A set bit without a leader ends the scan with the residual.
 * Gates appear in scan order.
 */
inline SynthesisResult factorize(const Characteristic& c) {
    const auto leaders = leader_table(c.n());
    Characteristic work = c;
    GateList out{c.n(), {}};
    for (std::size_t pos = 0; pos < work.bits().size(); ++pos) {
        if (!work.bits().get(pos)) continue;
        auto it = leaders.find(pos);
        if (it == leaders.end()) return Unrealizable{work};
        work ^= characteristic_of_gate(it->second, c.n());
        out.gates.push_back(it->second);
    }
    return out;
}

inline SynthesisResult synthesize_oracle(const FunctionTable& f) {
    return factorize(characteristic_of_function(f));
}

}  // namespace simonzx
