#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "simonzx/bits.hpp"
#include "simonzx/circuit.hpp"
#include "simonzx/mbqc/pipeline.hpp"
#include "simonzx/zx/tensor.hpp"

namespace simonzx::mbqc {

/// xy: projector <0| + e^{i angle}<1| (angle 0 is the x basis). z: computational basis.
enum class Plane { xy, z };

inline const char* to_string(Plane p) { return p == Plane::xy ? "xy" : "z"; }

struct Measurement {
    Plane plane = Plane::xy;
    double angle = 0.0;
    friend bool operator==(const Measurement&, const Measurement&) = default;
};

/// Covector of the given outcome; outcome 1 is the orthogonal projector.
inline std::array<zx::complex, 2> measurement_covector(const Measurement& m, bool outcome) {
    if (m.plane == Plane::z) return outcome ? std::array<zx::complex, 2>{0.0, 1.0} : std::array<zx::complex, 2>{1.0, 0.0};
    const auto phase = std::polar(1.0, m.angle + (outcome ? zx::pi : 0.0));
    return {1.0, phase};
}

/**
 * @brief Cluster graph plus one measurement per non-output node. Output
 * qubits are read in the computational basis after the phase in output_phases.
 */
struct MeasurementPattern {
    std::vector<int> nodes;
    std::vector<std::pair<int, int>> edges;
    std::map<int, Measurement> measurements;
    std::vector<int> outputs;
    std::map<int, double> output_phases;

    void validate() const {
        const std::set<int> node_set(nodes.begin(), nodes.end());
        if (node_set.size() != nodes.size()) throw std::invalid_argument("pattern has duplicate nodes");
        const std::set<int> out_set(outputs.begin(), outputs.end());
        if (out_set.size() != outputs.size()) throw std::invalid_argument("pattern has duplicate outputs");
        for (int v : nodes) {
            const bool measured = measurements.contains(v);
            if (measured == out_set.contains(v)) {
                throw std::invalid_argument("node " + std::to_string(v) + " must be either measured or an output");
            }
        }
        for (const auto& [v, m] : measurements) {
            if (!node_set.contains(v)) throw std::invalid_argument("measurement on unknown node " + std::to_string(v));
        }
        for (int v : outputs) {
            if (!node_set.contains(v)) throw std::invalid_argument("unknown output node " + std::to_string(v));
        }
        std::set<std::pair<int, int>> seen;
        for (auto [a, b] : edges) {
            if (a == b || !node_set.contains(a) || !node_set.contains(b)) throw std::invalid_argument("bad pattern edge");
            if (!seen.emplace(std::min(a, b), std::max(a, b)).second) throw std::invalid_argument("duplicate pattern edge");
        }
    }

    [[nodiscard]] std::size_t size() const noexcept { return nodes.size(); }
};

/**
 * @brief Reads a graph-like diagram without inputs as a pattern: spiders on
 * output legs are outputs, every other spider is measured in the xy plane
 * at its phase.
 */
inline MeasurementPattern extract_pattern(const ZxDiagram& d) {
    if (auto why = graph_like_violation(d)) throw std::invalid_argument("not graph-like: " + *why);
    if (!d.inputs().empty()) throw std::invalid_argument("pattern extraction needs a diagram without inputs");
    MeasurementPattern p;
    for (int b : d.outputs()) {
        const int s = d.edge(d.incident_edges(b).front()).other(b);
        if (std::find(p.outputs.begin(), p.outputs.end(), s) != p.outputs.end()) {
            throw std::invalid_argument("spider " + std::to_string(s) + " carries two output legs");
        }
        p.outputs.push_back(s);
        p.output_phases[s] = d.vertex(s).phase;
    }
    for (const auto& [id, v] : d.vertices()) {
        if (!v.is_spider()) continue;
        p.nodes.push_back(id);
        if (std::find(p.outputs.begin(), p.outputs.end(), id) == p.outputs.end()) {
            p.measurements[id] = {Plane::xy, v.phase};
        }
    }
    for (const auto& [eid, e] : d.edges()) {
        if (d.vertex(e.a).is_spider() && d.vertex(e.b).is_spider()) p.edges.emplace_back(e.a, e.b);
    }
    p.validate();
    return p;
}

/// Diagram of a pattern: Z spiders on Hadamard edges; z-plane measurements become an X(0) effect.
inline ZxDiagram pattern_to_diagram(const MeasurementPattern& p) {
    p.validate();
    ZxDiagram d;
    std::map<int, int> id_of;
    for (int v : p.nodes) {
        double phase = 0.0;
        if (auto it = p.measurements.find(v); it != p.measurements.end() && it->second.plane == Plane::xy) {
            phase = it->second.angle;
        }
        if (auto it = p.output_phases.find(v); it != p.output_phases.end()) phase = it->second;
        id_of[v] = d.add_z(phase);
    }
    for (auto [a, b] : p.edges) d.add_edge(id_of.at(a), id_of.at(b), EdgeKind::hadamard);
    for (const auto& [v, m] : p.measurements) {
        if (m.plane == Plane::z) d.add_edge(id_of.at(v), d.add_x());
    }
    for (int v : p.outputs) d.add_edge(id_of.at(v), d.add_output());
    return d;
}

/**
 * @brief Prepares the cluster state (|+> per node, CZ per edge), projects
 * every measured node onto the chosen outcome (0 unless listed in
 * `flipped`), and returns the unnormalized tensor over the outputs.
 */
inline zx::Tensor simulate_pattern(const MeasurementPattern& p, const std::set<int>& flipped = {}) {
    p.validate();
    if (p.size() > max_simulated_qubits) {
        throw std::out_of_range("pattern of " + std::to_string(p.size()) + " qubits exceeds the simulation cap");
    }
    for (int v : flipped) {
        if (!p.measurements.contains(v)) throw std::invalid_argument("flipped node is not measured");
    }
    // measured qubits first, then outputs in output order; qubit 0 is the most significant bit
    std::vector<int> order;
    for (int v : p.nodes) {
        if (p.measurements.contains(v)) order.push_back(v);
    }
    const std::size_t measured = order.size();
    order.insert(order.end(), p.outputs.begin(), p.outputs.end());
    std::map<int, std::size_t> pos;
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;

    const std::size_t q = order.size();
    std::vector<zx::complex> amps(std::size_t{1} << q, zx::complex{1.0, 0.0});
    for (auto [a, b] : p.edges) {
        const std::size_t ma = std::size_t{1} << (q - 1 - pos.at(a));
        const std::size_t mb = std::size_t{1} << (q - 1 - pos.at(b));
        for (std::size_t i = 0; i < amps.size(); ++i) {
            if ((i & ma) != 0 && (i & mb) != 0) amps[i] = -amps[i];
        }
    }
    for (std::size_t k = 0; k < p.outputs.size(); ++k) {
        const double phase = p.output_phases.contains(p.outputs[k]) ? p.output_phases.at(p.outputs[k]) : 0.0;
        if (phase == 0.0) continue;
        const std::size_t m = std::size_t{1} << (q - 1 - (measured + k));
        const auto w = std::polar(1.0, phase);
        for (std::size_t i = 0; i < amps.size(); ++i) {
            if ((i & m) != 0) amps[i] *= w;
        }
    }

    zx::Tensor t(q, std::move(amps));
    for (std::size_t i = measured; i-- > 0;) {
        const int v = order[i];
        t = t.contract_leg(i, measurement_covector(p.measurements.at(v), flipped.contains(v)));
    }
    return t;
}

/**
 * @brief Computational-basis outcome distribution of the outputs, with every
 * measured node post-selected on outcome 0 except `marginal_nodes`, whose
 * outcomes are summed over.
 */
inline Distribution pattern_distribution(const MeasurementPattern& p, const std::vector<int>& marginal_nodes = {}) {
    const std::size_t width = p.outputs.size();
    std::vector<double> weights(std::size_t{1} << width, 0.0);
    double total = 0.0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << marginal_nodes.size()); ++mask) {
        std::set<int> flipped;
        for (std::size_t i = 0; i < marginal_nodes.size(); ++i) {
            if (((mask >> i) & 1U) != 0) flipped.insert(marginal_nodes[i]);
        }
        const auto t = simulate_pattern(p, flipped);
        for (std::size_t i = 0; i < t.size(); ++i) {
            const double w = std::norm(t[i]);
            weights[i] += w;
            total += w;
        }
    }
    if (total <= 0.0) throw std::domain_error("post-selected pattern has zero probability");
    Distribution d;
    for (std::size_t m = 0; m < weights.size(); ++m) d[BitString::from_uint(m, width)] = weights[m] / total;
    return d;
}

}  // namespace simonzx::mbqc
