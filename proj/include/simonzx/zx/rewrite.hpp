#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "simonzx/zx/diagram.hpp"

namespace simonzx::zx {

namespace detail {

inline void require_spider(const ZxDiagram& d, int v, const char* rule) {
    if (!d.has_vertex(v) || !d.vertex(v).is_spider()) {
        throw RewriteError(std::string(rule) + ": vertex " + std::to_string(v) + " is not a spider");
    }
}

}  // namespace detail

/**
 * @brief Removes self-loops on `v`: plain loops are scalars, a Hadamard loop
 * adds pi to the phase.
 */
inline void remove_self_loops(ZxDiagram& d, int v) {
    for (int e : d.incident_edges(v)) {
        const auto& edge = d.edge(e);
        if (!edge.is_self_loop()) continue;
        if (edge.kind == EdgeKind::hadamard) d.add_phase(v, pi);
        d.remove_edge(e);
    }
}

/**
 * @brief Cancels parallel edges between `v` and each neighbouring spider.
 *
 * Same-colour pairs: Hadamard edges cancel in pairs, plain duplicates
 * collapse to one. Opposite-colour pairs: plain edges cancel in pairs (Hopf
 * law), Hadamard duplicates collapse to one. Mixed plain/Hadamard bundles are
 * left alone.
 */
inline void reduce_parallel_edges(ZxDiagram& d, int v) {
    std::map<int, std::vector<int>> by_neighbour;
    for (int e : d.incident_edges(v)) {
        const auto& edge = d.edge(e);
        if (edge.is_self_loop()) continue;
        const int w = edge.other(v);
        if (d.vertex(w).is_spider()) by_neighbour[w].push_back(e);
    }
    for (auto& [w, es] : by_neighbour) {
        if (es.size() < 2) continue;
        std::vector<int> plain;
        std::vector<int> had;
        for (int e : es) (d.edge(e).kind == EdgeKind::plain ? plain : had).push_back(e);
        if (!plain.empty() && !had.empty()) continue;
        const bool same_colour = d.vertex(w).kind == d.vertex(v).kind;
        const bool is_hadamard = plain.empty();
        auto& bundle = is_hadamard ? had : plain;
        const bool cancels_in_pairs = same_colour == is_hadamard;
        std::size_t keep = cancels_in_pairs ? bundle.size() % 2 : 1;
        for (std::size_t i = keep; i < bundle.size(); ++i) d.remove_edge(bundle[i]);
    }
}

/**
 * @brief Spider fusion along a plain edge between two same-colour spiders.
 *
 * The spider with the larger id is absorbed into the one with the smaller
 * id; phases add. Returns the diagram; the survivor id is min(a, b).
 */
inline ZxDiagram fuse_spiders(const ZxDiagram& d, int edge_id) {
    if (!d.has_edge(edge_id)) throw RewriteError("fuse_spiders: no edge " + std::to_string(edge_id));
    const Edge e = d.edge(edge_id);
    if (e.kind != EdgeKind::plain) throw RewriteError("fuse_spiders: edge is not plain");
    if (e.is_self_loop()) throw RewriteError("fuse_spiders: edge is a self-loop");
    detail::require_spider(d, e.a, "fuse_spiders");
    detail::require_spider(d, e.b, "fuse_spiders");
    if (d.vertex(e.a).kind != d.vertex(e.b).kind) throw RewriteError("fuse_spiders: spiders differ in colour");

    ZxDiagram out = d;
    const int keep = std::min(e.a, e.b);
    const int gone = std::max(e.a, e.b);
    out.remove_edge(edge_id);
    out.add_phase(keep, d.vertex(gone).phase);
    for (int other : out.incident_edges(gone)) {
        const auto& oe = out.edge(other);
        if (oe.is_self_loop()) {
            out.reattach(other, gone, keep);
            out.reattach(other, gone, keep);
        } else {
            out.reattach(other, gone, keep);
        }
    }
    out.remove_vertex(gone);
    remove_self_loops(out, keep);
    reduce_parallel_edges(out, keep);
    return out;
}

/// Colour change: Z <-> X, toggling every incident edge between plain and Hadamard.
inline ZxDiagram color_change(const ZxDiagram& d, int node) {
    detail::require_spider(d, node, "color_change");
    ZxDiagram out = d;
    out.set_kind(node, d.vertex(node).kind == VertexKind::z ? VertexKind::x : VertexKind::z);
    for (int e : d.incident_edges(node)) {
        // a self-loop is toggled at both ends, leaving it unchanged
        if (!d.edge(e).is_self_loop()) out.set_edge_kind(e, toggled(d.edge(e).kind));
    }
    return out;
}

/**
 * @brief Removes a phase-0 spider of degree 2 whose two edges are of the same
 * kind, joining its neighbours with a plain edge.
 */
inline ZxDiagram remove_identity(const ZxDiagram& d, int node) {
    detail::require_spider(d, node, "remove_identity");
    if (!phase_is(d.vertex(node).phase, 0.0, 1e-12)) throw RewriteError("remove_identity: phase is not zero");
    const auto es = d.incident_edges(node);
    if (es.size() != 2 || d.degree(node) != 2) throw RewriteError("remove_identity: degree is not 2");
    const Edge e1 = d.edge(es[0]);
    const Edge e2 = d.edge(es[1]);
    if (e1.kind != e2.kind) throw RewriteError("remove_identity: edges differ in kind");

    ZxDiagram out = d;
    const int u = e1.other(node);
    const int w = e2.other(node);
    out.remove_vertex(node);
    out.add_edge(u, w, EdgeKind::plain);
    if (u == w) {
        remove_self_loops(out, u);
    } else {
        if (out.vertex(u).is_spider()) reduce_parallel_edges(out, u);
    }
    return out;
}

/**
 * @brief Copy rule: a phase-0 X state plugged into a phase-0 Z spider
 * becomes a phase-0 X state on each remaining leg of that spider.
 */
inline ZxDiagram copy_rule(const ZxDiagram& d, int state_node) {
    detail::require_spider(d, state_node, "copy_rule");
    const auto& state = d.vertex(state_node);
    if (state.kind != VertexKind::x || !phase_is(state.phase, 0.0, 1e-12)) {
        throw RewriteError("copy_rule: state is not a phase-0 X spider");
    }
    const auto state_edges = d.incident_edges(state_node);
    if (state_edges.size() != 1 || d.degree(state_node) != 1) throw RewriteError("copy_rule: state must have degree 1");
    const Edge link = d.edge(state_edges.front());
    if (link.kind != EdgeKind::plain) throw RewriteError("copy_rule: state edge must be plain");
    const int hub = link.other(state_node);
    if (!d.vertex(hub).is_spider() || d.vertex(hub).kind != VertexKind::z) {
        throw RewriteError("copy_rule: state is not attached to a Z spider");
    }
    if (!phase_is(d.vertex(hub).phase, 0.0, 1e-12)) throw RewriteError("copy_rule: Z spider phase is not zero");

    ZxDiagram out = d;
    std::vector<std::pair<int, EdgeKind>> legs;
    for (int e : d.incident_edges(hub)) {
        if (e == state_edges.front()) continue;
        const auto& edge = d.edge(e);
        if (edge.is_self_loop()) throw RewriteError("copy_rule: Z spider has a self-loop");
        legs.emplace_back(edge.other(hub), edge.kind);
    }
    out.remove_vertex(state_node);
    out.remove_vertex(hub);
    for (const auto& [w, kind] : legs) {
        const int fresh = out.add_x(0.0);
        out.add_edge(fresh, w, kind);
    }
    return out;
}

}  // namespace simonzx::zx
