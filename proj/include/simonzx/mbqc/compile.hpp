#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "simonzx/circuit.hpp"
#include "simonzx/function_table.hpp"
#include "simonzx/mbqc/pattern.hpp"
#include "simonzx/mbqc/pipeline.hpp"
#include "simonzx/mbqc/translate.hpp"
#include "simonzx/oracle_synth.hpp"

namespace simonzx::mbqc {

/**
 * @brief The adaptive oracle compiled once to measurement form. Concrete
 * oracles only change measurement angles and planes on this fixed cluster.
 */
struct CompiledOracle {
    std::size_t n = 0;
    AuxPlug plug = AuxPlug::computational_zero;
    AdaptiveDiagram raw;
    PipelineTrace trace;
    MeasurementPattern base;
    std::map<Slot, int> adaptive_qubits;
    std::map<Slot, std::vector<int>> corrective_qubits;  ///< where each slot's pi/2 lands
    std::map<std::size_t, int> flip_qubits;
    std::vector<int> aux_readout;  ///< measured qubits holding the auxiliary register
    std::vector<int> working_outputs;

    [[nodiscard]] const ZxDiagram& mbqc_diagram() const { return trace.result(); }

    /// Angles and planes for one oracle: on slots xy(pi/2) with corrections, off slots z, flips add pi.
    [[nodiscard]] MeasurementPattern pattern_for(const OracleSettings& s) const {
        if (s.n != n || s.x_flip.size() != n || s.cnot_on.size() != n * n) {
            throw std::invalid_argument("oracle settings do not match the compiled width");
        }
        MeasurementPattern p = base;
        auto shift = [&p](int q, double delta) {
            if (auto it = p.measurements.find(q); it != p.measurements.end()) {
                it->second.angle = zx::canonical_phase(it->second.angle + delta);
            } else {
                p.output_phases[q] = zx::canonical_phase(p.output_phases[q] + delta);
            }
        };
        for (const auto& [slot, q] : adaptive_qubits) {
            if (s.cnot_on.at(slot)) {
                p.measurements.at(q) = {Plane::xy, zx::canonical_phase(base.measurements.at(q).angle + zx::pi / 2)};
                for (int c : corrective_qubits.at(slot)) shift(c, zx::pi / 2);
            } else {
                p.measurements.at(q) = {Plane::z, 0.0};
            }
        }
        for (const auto& [k, q] : flip_qubits) {
            if (s.x_flip.at(k - 1)) shift(q, zx::pi);
        }
        return p;
    }

    /// Working-register outcome distribution, post-selected except for the auxiliary readout.
    [[nodiscard]] Distribution distribution(const OracleSettings& s) const {
        return pattern_distribution(pattern_for(s), aux_readout);
    }
};

inline CompiledOracle compile_adaptive(std::size_t n, AuxPlug plug = AuxPlug::computational_zero) {
    CompiledOracle c;
    c.n = n;
    c.plug = plug;
    c.raw = build_raw_translation(n);
    c.trace = simplify_to_mbqc(c.raw, plug);
    c.base = extract_pattern(c.mbqc_diagram());

    const auto& result = c.mbqc_diagram();
    auto live = [&](int id) {
        const int r = c.trace.resolve(id);
        if (!result.has_vertex(r) || !result.vertex(r).is_spider()) {
            throw PipelineError("compile", "node " + std::to_string(id) + " did not survive simplification");
        }
        return r;
    };
    for (const auto& [slot, hub] : c.raw.hubs) c.adaptive_qubits[slot] = live(hub);
    for (const auto& [slot, sites] : c.raw.corrective_sites) {
        for (int site : sites) c.corrective_qubits[slot].push_back(live(site));
    }
    for (const auto& [k, node] : c.raw.flip_nodes) c.flip_qubits[k] = live(node);
    for (int node : c.trace.plug_nodes) c.aux_readout.push_back(live(node));
    c.working_outputs = c.base.outputs;
    for (const auto& [slot, q] : c.adaptive_qubits) {
        if (!c.base.measurements.contains(q)) throw PipelineError("compile", "adaptive qubit became an output");
    }
    return c;
}

/// Working-register distribution of the post-selected pattern for a realizable oracle.
inline Distribution mbqc_distribution(const GateList& oracle, AuxPlug plug = AuxPlug::computational_zero) {
    return compile_adaptive(oracle.n, plug).distribution(OracleSettings::from_gates(oracle));
}

}  // namespace simonzx::mbqc
