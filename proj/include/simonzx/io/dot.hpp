#pragma once

#include <iomanip>
#include <sstream>
#include <string>

#include "simonzx/mbqc/topology.hpp"
#include "simonzx/zx/diagram.hpp"

namespace simonzx::io {

/// Z spiders green, X spiders red, boundaries as points; Hadamard edges dashed blue.
inline std::string to_dot(const zx::ZxDiagram& d, const std::string& name = "zx") {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    os << "  // " << d.num_spiders() << " spiders, " << d.edges().size() << " edges\n";
    for (const auto& [id, v] : d.vertices()) {
        os << "  n" << id;
        if (!v.is_spider()) {
            os << " [shape=point];\n";
            continue;
        }
        os << " [shape=ellipse, style=filled, fillcolor=" << (v.kind == zx::VertexKind::z ? "palegreen" : "lightcoral");
        os << ", label=\"";
        if (!zx::phase_is(v.phase, 0.0)) os << std::setprecision(6) << v.phase / zx::pi << "pi";
        os << "\"];\n";
    }
    for (const auto& [id, e] : d.edges()) {
        os << "  n" << e.a << " -- n" << e.b;
        if (e.kind == zx::EdgeKind::hadamard) os << " [style=dashed, color=blue]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

/// Compact form: gadget edges dashed red. Expanded form: Hadamard edges dashed blue.
inline std::string to_dot(const mbqc::TopologyGraph& g, std::size_t n) {
    std::ostringstream os;
    os << "graph " << (g.expanded ? "expanded" : "compact") << "_n" << n << " {\n";
    os << "  // nodes: " << g.nodes.size() << "\n";
    os << "  // edges: " << g.edges.size() << (g.expanded ? " hadamard" : " gadget") << "\n";
    os << "  // legs: " << g.legs.size() << "\n";
    for (const auto& v : g.nodes) {
        os << "  n" << v.id << " [shape=circle, style=filled, fillcolor=palegreen, label=\"";
        switch (v.role) {
            case mbqc::NodeRole::working: os << "w" << v.j; break;
            case mbqc::NodeRole::auxiliary: os << "a" << v.k; break;
            case mbqc::NodeRole::gadget: os << "g" << v.j << v.k; break;
        }
        os << "\"];\n";
    }
    for (int leg : g.legs) {
        os << "  out" << leg << " [shape=point];\n";
        os << "  n" << leg << " -- out" << leg << ";\n";
    }
    for (auto [a, b] : g.edges) {
        os << "  n" << a << " -- n" << b << (g.expanded ? " [style=dashed, color=blue]" : " [style=dashed, color=red]")
           << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace simonzx::io
