#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "simonzx/zx/diagram.hpp"
#include "simonzx/zx/tensor.hpp"

namespace simonzx::zx {

/// Two-line open diagram: inputs (top, bottom) then outputs (top, bottom).
struct TwoLine {
    ZxDiagram d;
    int in_top = -1;
    int in_bottom = -1;
    int out_top = -1;
    int out_bottom = -1;

    TwoLine() {
        in_top = d.add_input();
        in_bottom = d.add_input();
        out_top = d.add_output();
        out_bottom = d.add_output();
    }
};

/**
 * @brief The adaptive CNOT gadget: a phase-0 Z hub Hadamard-linked to one Z
 * spider on each line, with a terminal effect on the hub. `on` plugs the
 * Z(pi/2) effect, otherwise the phase-0 X effect.
 */
inline ZxDiagram adaptive_gadget(bool on) {
    TwoLine g;
    auto& d = g.d;
    const int top = d.add_z();
    const int bottom = d.add_z();
    const int hub = d.add_z();
    const int effect = on ? d.add_z(pi / 2) : d.add_x();
    d.add_edge(g.in_top, top);
    d.add_edge(top, g.out_top);
    d.add_edge(g.in_bottom, bottom);
    d.add_edge(bottom, g.out_bottom);
    d.add_edge(top, hub, EdgeKind::hadamard);
    d.add_edge(hub, bottom, EdgeKind::hadamard);
    d.add_edge(hub, effect);
    return d;
}

/**
 * @brief Every intermediate form of the switched-on gadget identity, ending
 * with the CNOT (target conjugated by Hadamards) followed by -pi/2 on both lines.
 */
inline std::vector<ZxDiagram> adaptive_cnot_chain() {
    std::vector<ZxDiagram> chain{adaptive_gadget(true)};
    {
        // effect fused into the hub
        TwoLine g;
        auto& d = g.d;
        const int top = d.add_z();
        const int bottom = d.add_z();
        const int hub = d.add_z(pi / 2);
        d.add_edge(g.in_top, top);
        d.add_edge(top, g.out_top);
        d.add_edge(g.in_bottom, bottom);
        d.add_edge(bottom, g.out_bottom);
        d.add_edge(top, hub, EdgeKind::hadamard);
        d.add_edge(hub, bottom, EdgeKind::hadamard);
        chain.push_back(d);
    }
    {
        // Z(-pi/2) on both lines joined by one Hadamard edge
        TwoLine g;
        auto& d = g.d;
        const int top = d.add_z(-pi / 2);
        const int bottom = d.add_z(-pi / 2);
        d.add_edge(g.in_top, top);
        d.add_edge(top, g.out_top);
        d.add_edge(g.in_bottom, bottom);
        d.add_edge(bottom, g.out_bottom);
        d.add_edge(top, bottom, EdgeKind::hadamard);
        chain.push_back(d);
    }
    for (bool as_cnot : {false, true}) {
        // controlled-Z, then the version with the target written as an X spider
        TwoLine g;
        auto& d = g.d;
        const int top = d.add_z();
        const int bottom = as_cnot ? d.add_x() : d.add_z();
        const int top_phase = d.add_z(-pi / 2);
        const int bottom_phase = d.add_z(-pi / 2);
        const EdgeKind line = as_cnot ? EdgeKind::hadamard : EdgeKind::plain;
        d.add_edge(g.in_top, top);
        d.add_edge(top, top_phase);
        d.add_edge(top_phase, g.out_top);
        d.add_edge(g.in_bottom, bottom, line);
        d.add_edge(bottom, bottom_phase, line);
        d.add_edge(bottom_phase, g.out_bottom);
        d.add_edge(top, bottom, as_cnot ? EdgeKind::plain : EdgeKind::hadamard);
        chain.push_back(d);
    }
    return chain;
}

/// Every intermediate form of the switched-off gadget identity, ending with two bare wires.
inline std::vector<ZxDiagram> adaptive_bridge_chain() {
    std::vector<ZxDiagram> chain{adaptive_gadget(false)};
    {
        // copy rule: the hub is replaced by X states on both Hadamard legs
        TwoLine g;
        auto& d = g.d;
        const int top = d.add_z();
        const int bottom = d.add_z();
        const int s1 = d.add_x();
        const int s2 = d.add_x();
        d.add_edge(g.in_top, top);
        d.add_edge(top, g.out_top);
        d.add_edge(g.in_bottom, bottom);
        d.add_edge(bottom, g.out_bottom);
        d.add_edge(top, s1, EdgeKind::hadamard);
        d.add_edge(s2, bottom, EdgeKind::hadamard);
        chain.push_back(d);
    }
    {
        // colour-changed states, plain-connected Z legs
        TwoLine g;
        auto& d = g.d;
        const int top = d.add_z();
        const int bottom = d.add_z();
        const int s1 = d.add_z();
        const int s2 = d.add_z();
        d.add_edge(g.in_top, top);
        d.add_edge(top, g.out_top);
        d.add_edge(g.in_bottom, bottom);
        d.add_edge(bottom, g.out_bottom);
        d.add_edge(top, s1);
        d.add_edge(s2, bottom);
        chain.push_back(d);
    }
    {
        TwoLine g;
        g.d.add_edge(g.in_top, g.out_top);
        g.d.add_edge(g.in_bottom, g.out_bottom);
        chain.push_back(g.d);
    }
    return chain;
}

struct GadgetVerdict {
    bool holds = false;
    double max_residual = 0.0;
};

/// Checks every link of the chosen identity chain against its first diagram.
inline GadgetVerdict verify_adaptive_cnot(bool cnot_on, double tol = 1e-9) {
    const auto chain = cnot_on ? adaptive_cnot_chain() : adaptive_bridge_chain();
    const auto first = eval_tensor(chain.front());
    GadgetVerdict v{true, 0.0};
    for (std::size_t i = 1; i < chain.size(); ++i) {
        const double r = proportionality_residual(first, eval_tensor(chain[i]));
        v.max_residual = std::max(v.max_residual, r);
    }
    v.holds = v.max_residual <= tol;
    return v;
}

}  // namespace simonzx::zx
