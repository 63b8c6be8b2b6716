#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "simonzx/mbqc/compile.hpp"

namespace simonzx::mbqc {

enum class NodeRole { working, auxiliary, gadget };

inline const char* to_string(NodeRole r) {
    switch (r) {
        case NodeRole::working: return "working";
        case NodeRole::auxiliary: return "auxiliary";
        case NodeRole::gadget: return "gadget";
    }
    return "?";
}

struct TopologyNode {
    int id = 0;
    NodeRole role = NodeRole::working;
    std::size_t j = 0;  ///< working index, or slot row
    std::size_t k = 0;  ///< auxiliary index, or slot column
};

struct TopologyGraph {
    std::vector<TopologyNode> nodes;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> legs;  ///< nodes carrying an output leg
    bool expanded = false;

    [[nodiscard]] std::size_t count(NodeRole r) const {
        return static_cast<std::size_t>(
            std::count_if(nodes.begin(), nodes.end(), [r](const auto& v) { return v.role == r; }));
    }
};

/// Compact and expanded cluster layouts of the n-qubit oracle.
struct ClusterTopology {
    std::size_t n = 0;
    TopologyGraph compact;
    TopologyGraph expanded;
};

/**
 * @brief Ring of 2n nodes alternating working/auxiliary (ids in ring order),
 * one gadget edge from every working node to every auxiliary node. The
 * expanded form replaces each gadget edge by a measurement node with two
 * Hadamard edges.
 */
inline ClusterTopology topology(std::size_t n) {
    if (n == 0) throw std::invalid_argument("topology needs n >= 1");
    ClusterTopology t;
    t.n = n;
    auto working_id = [](std::size_t j) { return static_cast<int>(2 * (j - 1)); };
    auto aux_id = [](std::size_t k) { return static_cast<int>(2 * (k - 1) + 1); };
    for (auto* g : {&t.compact, &t.expanded}) {
        for (std::size_t i = 1; i <= n; ++i) {
            g->nodes.push_back({working_id(i), NodeRole::working, i, 0});
            g->nodes.push_back({aux_id(i), NodeRole::auxiliary, 0, i});
            g->legs.push_back(working_id(i));
        }
    }
    t.expanded.expanded = true;
    int next = static_cast<int>(2 * n);
    for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t k = 1; k <= n; ++k) {
            t.compact.edges.emplace_back(working_id(j), aux_id(k));
            const int g = next++;
            t.expanded.nodes.push_back({g, NodeRole::gadget, j, k});
            t.expanded.edges.emplace_back(working_id(j), g);
            t.expanded.edges.emplace_back(g, aux_id(k));
        }
    }
    return t;
}

/**
 * @brief Whether the compiled cluster with its output qubits removed is the
 * expanded topology, under the correspondence working line j, auxiliary line
 * k and slot (j,k).
 */
inline bool matches_expanded(const CompiledOracle& c, const ClusterTopology& t) {
    if (c.n != t.n) return false;
    std::map<int, int> to_topo;
    for (const auto& v : t.expanded.nodes) {
        int q = -1;
        switch (v.role) {
            case NodeRole::working: q = c.trace.resolve(c.raw.corrective_sites.at({v.j, 1}).front()); break;
            case NodeRole::auxiliary: q = c.flip_qubits.at(v.k); break;
            case NodeRole::gadget: q = c.adaptive_qubits.at({v.j, v.k}); break;
        }
        if (!to_topo.emplace(q, v.id).second) return false;
    }
    const std::set<int> outputs(c.base.outputs.begin(), c.base.outputs.end());
    if (c.base.nodes.size() != to_topo.size() + outputs.size()) return false;
    auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    std::set<std::pair<int, int>> mapped;
    for (auto [a, b] : c.base.edges) {
        if (outputs.contains(a) || outputs.contains(b)) continue;
        if (!to_topo.contains(a) || !to_topo.contains(b)) return false;
        mapped.insert(key(to_topo.at(a), to_topo.at(b)));
    }
    std::set<std::pair<int, int>> want;
    for (auto [a, b] : t.expanded.edges) want.insert(key(a, b));
    return mapped == want;
}

}  // namespace simonzx::mbqc
