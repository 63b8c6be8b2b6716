#include <gtest/gtest.h>

#include <map>
#include <set>

#include "simonzx/mbqc/topology.hpp"

using namespace simonzx::mbqc;

TEST(Topology, Counts) {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto t = topology(n);
        EXPECT_EQ(t.compact.nodes.size(), 2 * n);
        EXPECT_EQ(t.compact.edges.size(), n * n);
        EXPECT_EQ(t.compact.legs.size(), n);
        EXPECT_EQ(t.expanded.nodes.size(), 2 * n + n * n);
        EXPECT_EQ(t.expanded.edges.size(), 2 * n * n);
        EXPECT_EQ(t.expanded.count(NodeRole::gadget), n * n);
        EXPECT_EQ(t.expanded.count(NodeRole::working), n);
        EXPECT_EQ(t.expanded.count(NodeRole::auxiliary), n);
    }
    EXPECT_THROW(topology(0), std::invalid_argument);
}

TEST(Topology, CompactIsCompleteBipartite) {
    const auto t = topology(3);
    std::map<int, NodeRole> role;
    for (const auto& v : t.compact.nodes) role[v.id] = v.role;
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : t.compact.edges) {
        EXPECT_EQ(role.at(a), NodeRole::working);
        EXPECT_EQ(role.at(b), NodeRole::auxiliary);
        EXPECT_TRUE(seen.emplace(a, b).second);
    }
    EXPECT_EQ(seen.size(), 9U);
}

TEST(Topology, GadgetNodesJoinTheirSlot) {
    const auto t = topology(3);
    std::map<int, TopologyNode> by_id;
    for (const auto& v : t.expanded.nodes) by_id[v.id] = v;
    std::map<int, std::vector<int>> adj;
    for (auto [a, b] : t.expanded.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (const auto& v : t.expanded.nodes) {
        if (v.role != NodeRole::gadget) {
            EXPECT_EQ(adj[v.id].size(), 3U);
            continue;
        }
        ASSERT_EQ(adj[v.id].size(), 2U);
        std::set<std::pair<NodeRole, std::size_t>> ends;
        for (int u : adj[v.id]) {
            const auto& w = by_id.at(u);
            ends.emplace(w.role, w.role == NodeRole::working ? w.j : w.k);
        }
        const std::set<std::pair<NodeRole, std::size_t>> want{{NodeRole::working, v.j}, {NodeRole::auxiliary, v.k}};
        EXPECT_EQ(ends, want);
    }
}

TEST(Topology, CompiledClusterMatchesExpanded) {
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto c = compile_adaptive(n);
        EXPECT_TRUE(matches_expanded(c, topology(n))) << n;
        EXPECT_FALSE(matches_expanded(c, topology(n + 1)));
    }
}

TEST(Topology, PlusPlugKeepsExtraReadoutNodes) {
    // the plus effect leaves one more measured node per auxiliary line
    const auto c = compile_adaptive(2, AuxPlug::plus);
    EXPECT_EQ(c.base.size(), 12U);
    EXPECT_FALSE(matches_expanded(c, topology(2)));
}
