#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "simonzx/characteristic.hpp"
#include "simonzx/circuit.hpp"
#include "simonzx/function_table.hpp"
#include "simonzx/mbqc/pattern.hpp"
#include "simonzx/mbqc/topology.hpp"
#include "simonzx/oracle_synth.hpp"
#include "simonzx/zx/diagram.hpp"

namespace simonzx::io {

using json = nlohmann::ordered_json;

/// Thrown for well-formed JSON that does not describe the expected object.
class SchemaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

template <class T>
T get(const json& j, const char* key) {
    try {
        return field(j, key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("field \"") + key + "\": " + e.what());
    }
}

}  // namespace detail

// function tables: {"n": 2, "outputs": ["10", "11", "11", "10"]}

inline json to_json(const FunctionTable& f) {
    json out = json::array();
    for (const auto& o : f.outputs()) out.push_back(o.str());
    return {{"n", f.n()}, {"outputs", out}};
}

inline FunctionTable function_from_json(const json& j) {
    const auto n = detail::get<std::size_t>(j, "n");
    const auto outs = detail::get<std::vector<std::string>>(j, "outputs");
    try {
        return FunctionTable::from_strings(n, outs);
    } catch (const std::exception& e) {
        throw SchemaError(e.what());
    }
}

// gate lists: {"n": 2, "gates": [{"kind": "x", "target": 1}, {"kind": "cnot", "control": 2, "target": 2}]}

inline json to_json(const Gate& g) {
    if (g.is_cnot()) return {{"kind", "cnot"}, {"control", g.control}, {"target", g.target}, {"name", g.name()}};
    return {{"kind", "x"}, {"target", g.target}, {"name", g.name()}};
}

inline json to_json(const GateList& gl) {
    json gates = json::array();
    for (const auto& g : gl.gates) gates.push_back(to_json(g));
    return {{"n", gl.n}, {"gates", gates}};
}

inline GateList gates_from_json(const json& j) {
    GateList gl{detail::get<std::size_t>(j, "n"), {}};
    const auto& gates = detail::field(j, "gates");
    if (!gates.is_array()) throw SchemaError("\"gates\" must be an array");
    for (const auto& g : gates) {
        const auto kind = detail::get<std::string>(g, "kind");
        if (kind == "cnot") {
            gl.gates.push_back(Gate::cnot(detail::get<std::size_t>(g, "control"), detail::get<std::size_t>(g, "target")));
        } else if (kind == "x") {
            gl.gates.push_back(Gate::x(detail::get<std::size_t>(g, "target")));
        } else {
            throw SchemaError("unknown gate kind \"" + kind + "\"");
        }
        try {
            gl.gates.back().validate(gl.n);
        } catch (const std::exception& e) {
            throw SchemaError(e.what());
        }
    }
    return gl;
}

inline json to_json(const Characteristic& c) { return {{"n", c.n()}, {"bits", c.str()}}; }

// diagrams: {"nodes": [{"id", "kind", "phase"}], "edges": [{"a", "b", "h"}], "inputs": [...], "outputs": [...]}

inline json to_json(const zx::ZxDiagram& d) {
    json nodes = json::array();
    for (const auto& [id, v] : d.vertices()) {
        nodes.push_back({{"id", id}, {"kind", zx::to_string(v.kind)}, {"phase", v.phase}});
    }
    json edges = json::array();
    for (const auto& [id, e] : d.edges()) edges.push_back({{"a", e.a}, {"b", e.b}, {"h", e.kind == zx::EdgeKind::hadamard}});
    return {{"nodes", nodes}, {"edges", edges}, {"inputs", d.inputs()}, {"outputs", d.outputs()}};
}

inline zx::ZxDiagram diagram_from_json(const json& j) {
    zx::ZxDiagram d;
    for (const auto& node : detail::field(j, "nodes")) {
        const auto kind = detail::get<std::string>(node, "kind");
        zx::VertexKind k{};
        if (kind == "Z") {
            k = zx::VertexKind::z;
        } else if (kind == "X") {
            k = zx::VertexKind::x;
        } else if (kind == "B") {
            k = zx::VertexKind::boundary;
        } else {
            throw SchemaError("unknown node kind \"" + kind + "\"");
        }
        const double phase = node.contains("phase") ? detail::get<double>(node, "phase") : 0.0;
        try {
            d.insert_vertex(detail::get<int>(node, "id"), {k, phase});
        } catch (const std::exception& e) {
            throw SchemaError(e.what());
        }
    }
    for (const auto& edge : detail::field(j, "edges")) {
        const bool h = edge.contains("h") && detail::get<bool>(edge, "h");
        try {
            d.add_edge(detail::get<int>(edge, "a"), detail::get<int>(edge, "b"),
                       h ? zx::EdgeKind::hadamard : zx::EdgeKind::plain);
        } catch (const std::out_of_range& e) {
            throw SchemaError(e.what());
        }
    }
    d.set_legs(detail::get<std::vector<int>>(j, "inputs"), detail::get<std::vector<int>>(j, "outputs"));
    try {
        d.validate();
    } catch (const std::logic_error& e) {
        throw SchemaError(e.what());
    }
    return d;
}

inline json to_json(const mbqc::MeasurementPattern& p) {
    json measurements = json::array();
    for (const auto& [v, m] : p.measurements) {
        measurements.push_back({{"node", v}, {"plane", mbqc::to_string(m.plane)}, {"angle", m.angle}});
    }
    json edges = json::array();
    for (auto [a, b] : p.edges) edges.push_back({a, b});
    json phases = json::array();
    for (int v : p.outputs) phases.push_back(p.output_phases.contains(v) ? p.output_phases.at(v) : 0.0);
    return {{"nodes", p.nodes}, {"edges", edges}, {"measurements", measurements}, {"outputs", p.outputs},
            {"output_phases", phases}};
}

inline json to_json(const mbqc::TopologyGraph& g) {
    json nodes = json::array();
    for (const auto& v : g.nodes) {
        json node{{"id", v.id}, {"kind", "Z"}, {"phase", 0.0}, {"role", mbqc::to_string(v.role)}};
        if (v.role == mbqc::NodeRole::gadget) node["slot"] = {v.j, v.k};
        nodes.push_back(node);
    }
    json edges = json::array();
    for (auto [a, b] : g.edges) edges.push_back({{"a", a}, {"b", b}, {"h", g.expanded}});
    return {{"form", g.expanded ? "expanded" : "compact"}, {"nodes", nodes}, {"edges", edges}, {"legs", g.legs},
            {"node_count", g.nodes.size()}, {"edge_count", g.edges.size()}};
}

inline json to_json(const Distribution& d) {
    json out = json::object();
    for (const auto& [m, p] : d) out[m.str()] = p;
    return out;
}

inline json to_json(const ProtocolReport& r) {
    json eqs = json::array();
    for (const auto& e : r.equations) eqs.push_back(e.str());
    return {{"status", r.status == ProtocolStatus::solved ? "solved" : "underdetermined"},
            {"kind", to_string(r.kind)},
            {"period", r.status == ProtocolStatus::solved ? json(r.period.str()) : json(nullptr)},
            {"rounds_used", r.rounds_used},
            {"equations", eqs},
            {"verified", r.verified}};
}

}  // namespace simonzx::io
