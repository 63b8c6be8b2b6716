#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "simonzx/circuit.hpp"
#include "simonzx/oracle_synth.hpp"
#include "simonzx/zx/diagram.hpp"

namespace simonzx::mbqc {

using zx::EdgeKind;
using zx::VertexKind;
using zx::ZxDiagram;

/// Per qubit wire, the last vertex and the kind of the edge still to be drawn to the next one.
struct WireFront {
    int vertex = -1;
    EdgeKind pending = EdgeKind::plain;
};

namespace detail {

inline void extend(ZxDiagram& d, WireFront& w, int next) {
    d.add_edge(w.vertex, next, w.pending);
    w.vertex = next;
    w.pending = EdgeKind::plain;
}

inline void apply_ops(ZxDiagram& d, std::vector<WireFront>& wires, const std::vector<Op>& ops) {
    for (const auto& op : ops) {
        switch (op.kind) {
            case Op::Kind::h: {
                auto& w = wires.at(op.a - 1);
                w.pending = zx::toggled(w.pending);
                break;
            }
            case Op::Kind::x: extend(d, wires.at(op.a - 1), d.add_x(zx::pi)); break;
            case Op::Kind::cnot: {
                const int c = d.add_z();
                const int t = d.add_x();
                extend(d, wires.at(op.a - 1), c);
                extend(d, wires.at(op.b - 1), t);
                d.add_edge(c, t);
                break;
            }
        }
    }
}

inline void close_outputs(ZxDiagram& d, std::vector<WireFront>& wires) {
    for (auto& w : wires) extend(d, w, d.add_output());
}

}  // namespace detail

/**
 * @brief Gate-by-gate translation: |+> -> Z(0) state, |0> -> X(0) state,
 * CNOT -> Z(0) on the control joined to X(0) on the target, X -> X(pi),
 * H -> Hadamard edge. Outputs follow qubit order.
 */
inline ZxDiagram circuit_to_zx(const Circuit& c) {
    c.validate();
    ZxDiagram d;
    std::vector<WireFront> wires(c.q);
    for (std::size_t i = 0; i < c.q; ++i) {
        wires[i].vertex = c.initial[i] == Init::plus ? d.add_z() : d.add_x();
    }
    detail::apply_ops(d, wires, c.ops);
    detail::close_outputs(d, wires);
    return d;
}

/// Same translation with open inputs instead of prepared states.
inline ZxDiagram operator_to_zx(std::size_t q, const std::vector<Op>& ops) {
    Circuit probe{q, std::vector<Init>(q, Init::zero), ops};
    probe.validate();
    ZxDiagram d;
    std::vector<WireFront> wires(q);
    for (auto& w : wires) w.vertex = d.add_input();
    detail::apply_ops(d, wires, ops);
    detail::close_outputs(d, wires);
    return d;
}

/// CNOT slot: control on working qubit j, target on auxiliary qubit k (1-based).
struct Slot {
    std::size_t j = 1;
    std::size_t k = 1;
    friend auto operator<=>(const Slot&, const Slot&) = default;
};

/// Which oracle gates are switched on.
struct OracleSettings {
    std::size_t n = 0;
    std::map<Slot, bool> cnot_on;
    std::vector<bool> x_flip;  ///< index k-1

    static OracleSettings all_off(std::size_t n) {
        OracleSettings s{n, {}, std::vector<bool>(n, false)};
        for (std::size_t j = 1; j <= n; ++j) {
            for (std::size_t k = 1; k <= n; ++k) s.cnot_on[{j, k}] = false;
        }
        return s;
    }

    /// Setting number `code`: bit i (LSB first) of the n^2 CNOT slots in (j,k) order, then n flip bits.
    static OracleSettings from_code(std::size_t n, std::uint64_t code) {
        auto s = all_off(n);
        std::size_t bit = 0;
        for (auto& [slot, on] : s.cnot_on) on = ((code >> bit++) & 1U) != 0;
        for (std::size_t k = 0; k < n; ++k) s.x_flip[k] = ((code >> bit++) & 1U) != 0;
        return s;
    }

    static std::uint64_t count(std::size_t n) { return std::uint64_t{1} << (n * n + n); }

    static OracleSettings from_gates(const GateList& gl) {
        auto s = all_off(gl.n);
        for (const auto& g : gl.gates) {
            g.validate(gl.n);
            if (g.is_cnot()) {
                bool& on = s.cnot_on.at({g.control, g.target});
                if (on) throw std::invalid_argument("gate list repeats " + g.name());
                on = true;
            } else {
                if (s.x_flip[g.target - 1]) throw std::invalid_argument("gate list repeats " + g.name());
                s.x_flip[g.target - 1] = true;
            }
        }
        return s;
    }

    [[nodiscard]] GateList to_gates() const {
        GateList gl{n, {}};
        for (const auto& [slot, on] : cnot_on) {
            if (on) gl.gates.push_back(Gate::cnot(slot.j, slot.k));
        }
        for (std::size_t k = 0; k < n; ++k) {
            if (x_flip[k]) gl.gates.push_back(Gate::x(k + 1));
        }
        return gl;
    }

    friend bool operator==(const OracleSettings&, const OracleSettings&) = default;
};

/**
 * @brief Raw ZX translation of the fully switchable n-qubit oracle, including
 * the initial states and the Hadamard basis change on the working outputs.
 */
struct AdaptiveDiagram {
    std::size_t n = 0;
    ZxDiagram base;
    std::map<Slot, int> adaptive_nodes;  ///< terminal effect per slot (phase-0 Z placeholder)
    std::map<Slot, int> hubs;
    std::map<std::size_t, int> flip_nodes;  ///< X node at the end of auxiliary line k
    std::map<Slot, std::vector<int>> corrective_sites;  ///< {working-line site, auxiliary-line site}
    std::vector<int> working_outputs;
    std::vector<int> aux_outputs;
};

/**
 * @brief Builds the generalized raw translation.
 *
 * Working line j: Z(0) state, then one corrective site per slot (j,1..n)
 * joined by plain edges, then a Hadamard edge to the output. Auxiliary line
 * k: X(0) state, Hadamard edge, one site per slot (1..n,k), the flip node
 * after a final Hadamard edge, then the output. Consecutive auxiliary sites
 * are separated by two Hadamards, drawn as one plain edge. Each slot hub is
 * Hadamard-linked to its two sites and carries the adaptive effect.
 */
inline AdaptiveDiagram build_raw_translation(std::size_t n) {
    if (n == 0) throw std::invalid_argument("raw translation needs n >= 1");
    AdaptiveDiagram a;
    a.n = n;
    auto& d = a.base;

    std::map<Slot, int> working_site;
    std::map<Slot, int> aux_site;
    std::vector<int> working_last(n);
    std::vector<int> aux_last(n);

    for (std::size_t j = 1; j <= n; ++j) {
        int prev = d.add_z();
        for (std::size_t k = 1; k <= n; ++k) {
            const int site = d.add_z();
            d.add_edge(prev, site);
            working_site[{j, k}] = site;
            prev = site;
        }
        working_last[j - 1] = prev;
    }
    for (std::size_t k = 1; k <= n; ++k) {
        int prev = d.add_x();
        EdgeKind link = EdgeKind::hadamard;
        for (std::size_t j = 1; j <= n; ++j) {
            const int site = d.add_z();
            d.add_edge(prev, site, link);
            link = EdgeKind::plain;
            aux_site[{j, k}] = site;
            prev = site;
        }
        const int flip = d.add_x();
        d.add_edge(prev, flip, EdgeKind::hadamard);
        a.flip_nodes[k] = flip;
        aux_last[k - 1] = flip;
    }
    for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t k = 1; k <= n; ++k) {
            const Slot s{j, k};
            const int hub = d.add_z();
            const int effect = d.add_z();
            d.add_edge(working_site[s], hub, EdgeKind::hadamard);
            d.add_edge(hub, aux_site[s], EdgeKind::hadamard);
            d.add_edge(hub, effect);
            a.hubs[s] = hub;
            a.adaptive_nodes[s] = effect;
            a.corrective_sites[s] = {working_site[s], aux_site[s]};
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        const int out = d.add_output();
        d.add_edge(working_last[j], out, EdgeKind::hadamard);
        a.working_outputs.push_back(out);
    }
    for (std::size_t k = 0; k < n; ++k) {
        const int out = d.add_output();
        d.add_edge(aux_last[k], out);
        a.aux_outputs.push_back(out);
    }
    return a;
}

/**
 * @brief Concrete oracle diagram: switched-on slots get the Z(pi/2) effect
 * and pi/2 on both corrective sites, switched-off slots the X(0) effect;
 * flipped auxiliaries get phase pi on their flip node.
 */
inline ZxDiagram instantiate(const AdaptiveDiagram& a, const OracleSettings& s) {
    if (s.n != a.n || s.x_flip.size() != a.n || s.cnot_on.size() != a.n * a.n) {
        throw std::invalid_argument("oracle settings do not match the diagram width");
    }
    ZxDiagram d = a.base;
    for (const auto& [slot, effect] : a.adaptive_nodes) {
        const bool on = s.cnot_on.at(slot);
        if (on) {
            d.set_phase(effect, zx::pi / 2);
            for (int site : a.corrective_sites.at(slot)) d.add_phase(site, zx::pi / 2);
        } else {
            d.set_kind(effect, VertexKind::x);
            d.set_phase(effect, 0.0);
        }
    }
    for (const auto& [k, node] : a.flip_nodes) d.set_phase(node, s.x_flip[k - 1] ? zx::pi : 0.0);
    return d;
}

}  // namespace simonzx::mbqc
