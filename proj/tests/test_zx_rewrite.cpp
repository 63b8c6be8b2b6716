#include <gtest/gtest.h>

#include "simonzx/verify.hpp"
#include "simonzx/zx/rewrite.hpp"
#include "simonzx/zx/tensor.hpp"

using namespace simonzx::zx;

namespace {

double residual(const ZxDiagram& a, const ZxDiagram& b) { return proportionality_residual(eval_tensor(a), eval_tensor(b)); }

}  // namespace

TEST(Fuse, AddsPhasesAndKeepsSmallerId) {
    ZxDiagram d;
    const int a = d.add_z(pi / 4);
    const int b = d.add_z(pi / 2);
    d.add_edge(d.add_input(), a);
    const int e = d.add_edge(a, b);
    d.add_edge(b, d.add_output());
    const auto f = fuse_spiders(d, e);
    EXPECT_TRUE(f.has_vertex(a));
    EXPECT_FALSE(f.has_vertex(b));
    EXPECT_NEAR(phase_distance(f.vertex(a).phase, 3 * pi / 4), 0.0, 1e-12);
    EXPECT_LT(residual(d, f), 1e-12);
}

TEST(Fuse, ParallelHadamardEdgesCancel) {
    ZxDiagram d;
    const int a = d.add_z();
    const int b = d.add_z();
    const int c = d.add_z(pi / 3);
    d.add_edge(d.add_output(), a);
    const int e = d.add_edge(a, b);
    d.add_edge(a, c, EdgeKind::hadamard);
    d.add_edge(b, c, EdgeKind::hadamard);
    d.add_edge(c, d.add_output());
    const auto f = fuse_spiders(d, e);
    EXPECT_TRUE(f.edges_between(a, c).empty());
    EXPECT_LT(residual(d, f), 1e-12);
}

TEST(Fuse, HadamardSelfLoopAddsPi) {
    ZxDiagram d;
    const int a = d.add_z();
    const int b = d.add_z();
    const int e = d.add_edge(a, b);
    d.add_edge(a, b, EdgeKind::hadamard);
    d.add_edge(a, d.add_output());
    const auto f = fuse_spiders(d, e);
    EXPECT_FALSE(f.has_self_loops());
    EXPECT_NEAR(phase_distance(f.vertex(a).phase, pi), 0.0, 1e-12);
    EXPECT_LT(residual(d, f), 1e-12);
}

TEST(Fuse, Preconditions) {
    ZxDiagram d;
    const int z = d.add_z();
    const int x = d.add_x();
    const int plain = d.add_edge(z, x);
    const int z2 = d.add_z();
    const int had = d.add_edge(z, z2, EdgeKind::hadamard);
    EXPECT_THROW(fuse_spiders(d, plain), RewriteError);
    EXPECT_THROW(fuse_spiders(d, had), RewriteError);
    EXPECT_THROW(fuse_spiders(d, 99), RewriteError);
}

TEST(ColorChange, TogglesEdgesAndColour) {
    ZxDiagram d;
    const int x = d.add_x(pi / 5);
    const int in = d.add_input();
    d.add_edge(in, x);
    d.add_edge(x, d.add_output(), EdgeKind::hadamard);
    const auto c = color_change(d, x);
    EXPECT_EQ(c.vertex(x).kind, VertexKind::z);
    EXPECT_EQ(c.edge(c.incident_edges(in).front()).kind, EdgeKind::hadamard);
    EXPECT_LT(residual(d, c), 1e-12);
    EXPECT_THROW(color_change(d, in), RewriteError);
}

TEST(RemoveIdentity, PlainAndHadamardPairs) {
    for (auto kind : {EdgeKind::plain, EdgeKind::hadamard}) {
        ZxDiagram d;
        const int a = d.add_z(pi / 7);
        const int mid = d.add_x();
        const int b = d.add_x(pi / 3);
        d.add_edge(d.add_input(), a);
        d.add_edge(a, mid, kind);
        d.add_edge(mid, b, kind);
        d.add_edge(b, d.add_output());
        const auto r = remove_identity(d, mid);
        EXPECT_FALSE(r.has_vertex(mid));
        EXPECT_LT(residual(d, r), 1e-12);
    }
}

TEST(RemoveIdentity, Preconditions) {
    ZxDiagram d;
    const int a = d.add_z();
    const int mid = d.add_z(pi);
    d.add_edge(d.add_input(), mid);
    d.add_edge(mid, a);
    EXPECT_THROW(remove_identity(d, mid), RewriteError);  // phase
    ZxDiagram e;
    const int m2 = e.add_z();
    e.add_edge(e.add_input(), m2);
    e.add_edge(m2, e.add_output(), EdgeKind::hadamard);
    EXPECT_THROW(remove_identity(e, m2), RewriteError);  // mixed kinds
}

TEST(CopyRule, ZeroStateThroughPhaseFreeZ) {
    ZxDiagram d;
    const int hub = d.add_z();
    const int state = d.add_x();
    d.add_edge(state, hub);
    d.add_edge(hub, d.add_output());
    d.add_edge(hub, d.add_output(), EdgeKind::hadamard);
    const auto c = copy_rule(d, state);
    EXPECT_FALSE(c.has_vertex(hub));
    EXPECT_EQ(c.count_spiders(VertexKind::x), 2U);
    EXPECT_LT(residual(d, c), 1e-12);
}

TEST(CopyRule, RequiresPhaseZeroHub) {
    ZxDiagram d;
    const int hub = d.add_z(pi / 2);
    const int state = d.add_x();
    d.add_edge(state, hub);
    d.add_edge(hub, d.add_output());
    EXPECT_THROW(copy_rule(d, state), RewriteError);
}

TEST(Rules, RandomizedSoundness) {
    const auto rep = simonzx::verify::verify_rules(2024, 60);
    for (const auto& c : rep.cases) EXPECT_TRUE(c.passed) << c.name << " residual " << c.max_residual;
}
