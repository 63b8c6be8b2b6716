#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "simonzx/mbqc/translate.hpp"
#include "simonzx/zx/rewrite.hpp"
#include "simonzx/zx/tensor.hpp"

namespace simonzx::mbqc {

/**
 * @brief Effect plugged onto the auxiliary outputs.
 *
 * computational_zero is the phase-0 X effect (<0|); plus is the phase-0 Z effect (<+|).
 */
enum class AuxPlug { computational_zero, plus };

inline const char* to_string(AuxPlug p) { return p == AuxPlug::plus ? "plus" : "zero"; }

inline std::array<zx::complex, 2> plug_covector(AuxPlug p) {
    return p == AuxPlug::plus ? std::array<zx::complex, 2>{1.0, 1.0} : std::array<zx::complex, 2>{1.0, 0.0};
}

class PipelineError : public std::runtime_error {
public:
    PipelineError(std::string stage, const std::string& what)
        : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}
    [[nodiscard]] const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

struct PipelineStage {
    std::string name;
    ZxDiagram diagram;
};

struct PipelineTrace {
    std::vector<PipelineStage> stages;  ///< "input" first, the result last
    std::map<int, int> merged_into;     ///< absorbed spider -> survivor (one fusion step)
    AuxPlug plug = AuxPlug::computational_zero;
    std::vector<int> plug_nodes;  ///< spiders created on the auxiliary outputs, in order

    /// The id a spider of the input diagram ended up in.
    [[nodiscard]] int resolve(int id) const {
        auto it = merged_into.find(id);
        while (it != merged_into.end()) {
            id = it->second;
            it = merged_into.find(id);
        }
        return id;
    }

    [[nodiscard]] const ZxDiagram& result() const { return stages.back().diagram; }
};

struct PipelineOptions {
    AuxPlug plug = AuxPlug::computational_zero;
    std::set<int> protected_nodes;  ///< never removed by the identity stage
    bool protect_plugs = true;      ///< keep the auxiliary readout spiders
};

/// All spiders Z, spider-spider edges Hadamard, boundary edges plain, no loops or parallel edges.
inline std::optional<std::string> graph_like_violation(const ZxDiagram& d) {
    for (const auto& [id, v] : d.vertices()) {
        if (v.kind == VertexKind::x) return "X spider " + std::to_string(id);
    }
    std::set<std::pair<int, int>> seen;
    for (const auto& [eid, e] : d.edges()) {
        if (e.is_self_loop()) return "self-loop on " + std::to_string(e.a);
        const bool boundary = !d.vertex(e.a).is_spider() || !d.vertex(e.b).is_spider();
        if (boundary && e.kind != EdgeKind::plain) return "Hadamard boundary edge " + std::to_string(eid);
        if (!boundary && e.kind != EdgeKind::hadamard) return "plain internal edge " + std::to_string(eid);
        if (!seen.emplace(std::min(e.a, e.b), std::max(e.a, e.b)).second) {
            return "parallel edges between " + std::to_string(e.a) + " and " + std::to_string(e.b);
        }
    }
    for (int b : d.outputs()) {
        const int s = d.edge(d.incident_edges(b).front()).other(b);
        if (!d.vertex(s).is_spider()) return "bare wire at output " + std::to_string(b);
    }
    return std::nullopt;
}

inline bool is_graph_like(const ZxDiagram& d) { return !graph_like_violation(d).has_value(); }

namespace detail {

inline bool touches_boundary(const ZxDiagram& d, int v) {
    for (int e : d.incident_edges(v)) {
        if (!d.vertex(d.edge(e).other(v)).is_spider()) return true;
    }
    return false;
}

inline void fuse_all(ZxDiagram& d, PipelineTrace& trace) {
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& [eid, e] : d.edges()) {
            if (e.kind != EdgeKind::plain || e.is_self_loop()) continue;
            const auto& va = d.vertex(e.a);
            const auto& vb = d.vertex(e.b);
            if (!va.is_spider() || !vb.is_spider() || va.kind != vb.kind) continue;
            trace.merged_into[std::max(e.a, e.b)] = std::min(e.a, e.b);
            d = zx::fuse_spiders(d, eid);
            changed = true;
            break;
        }
    }
}

}  // namespace detail

/**
 * @brief The fixed simplification sequence to the measurement-based form.
 *
 * 1. plug the auxiliary outputs, 2. colour-change every X spider, 3. fuse
 * along plain edges until none is left, 4. remove phase-0 degree-2 spiders
 * between two Hadamard edges (then fuse again), 5. put a Z(0) spider on every
 * Hadamard output leg. The result must be graph-like.
 */
inline PipelineTrace simplify_to_mbqc(const ZxDiagram& input, const std::vector<int>& aux_outputs,
                                      const PipelineOptions& options = {}) {
    PipelineTrace trace;
    trace.plug = options.plug;
    trace.stages.push_back({"input", input});
    ZxDiagram d = input;

    for (int b : aux_outputs) {
        if (std::find(d.outputs().begin(), d.outputs().end(), b) == d.outputs().end()) {
            throw PipelineError("plug", "vertex " + std::to_string(b) + " is not an output");
        }
        d.close_boundary(b, options.plug == AuxPlug::plus ? VertexKind::z : VertexKind::x);
        trace.plug_nodes.push_back(b);
    }
    trace.stages.push_back({"plug", d});

    std::vector<int> x_nodes;
    for (const auto& [id, v] : d.vertices()) {
        if (v.kind == VertexKind::x) x_nodes.push_back(id);
    }
    for (int v : x_nodes) d = zx::color_change(d, v);
    trace.stages.push_back({"color_change", d});

    detail::fuse_all(d, trace);
    trace.stages.push_back({"fuse", d});

    std::set<int> keep;
    for (int v : options.protected_nodes) keep.insert(trace.resolve(v));
    if (options.protect_plugs) {
        for (int v : trace.plug_nodes) keep.insert(trace.resolve(v));
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& [id, v] : d.vertices()) {
            if (!v.is_spider() || keep.contains(id) || !zx::phase_is(v.phase, 0.0, 1e-12)) continue;
            const auto es = d.incident_edges(id);
            if (es.size() != 2 || d.degree(id) != 2) continue;
            if (d.edge(es[0]).kind != EdgeKind::hadamard || d.edge(es[1]).kind != EdgeKind::hadamard) continue;
            if (detail::touches_boundary(d, id)) continue;
            d = zx::remove_identity(d, id);
            changed = true;
            break;
        }
        if (changed) detail::fuse_all(d, trace);
    }
    trace.stages.push_back({"remove_identity", d});

    for (int b : d.outputs()) {
        const auto es = d.incident_edges(b);
        if (es.size() != 1) throw PipelineError("output_legs", "output " + std::to_string(b) + " has degree != 1");
        if (d.edge(es.front()).kind != EdgeKind::hadamard) continue;
        const int s = d.edge(es.front()).other(b);
        const int fresh = d.add_z();
        d.reattach(es.front(), b, fresh);
        d.add_edge(fresh, b);
        if (!d.vertex(s).is_spider()) throw PipelineError("output_legs", "Hadamard wire between boundaries");
    }
    trace.stages.push_back({"output_legs", d});

    if (auto why = graph_like_violation(d)) throw PipelineError("output_legs", "result is not graph-like: " + *why);
    return trace;
}

/// The adaptive (uninstantiated) translation; slot hubs are protected so they stay measurable.
inline PipelineTrace simplify_to_mbqc(const AdaptiveDiagram& a, AuxPlug plug = AuxPlug::computational_zero) {
    PipelineOptions opt{plug, {}, true};
    for (const auto& [slot, hub] : a.hubs) opt.protected_nodes.insert(hub);
    return simplify_to_mbqc(a.base, a.aux_outputs, opt);
}

inline PipelineTrace simplify_to_mbqc(const AdaptiveDiagram& a, const OracleSettings& s,
                                      AuxPlug plug = AuxPlug::computational_zero) {
    PipelineOptions opt{plug, {}, true};
    for (const auto& [slot, hub] : a.hubs) opt.protected_nodes.insert(hub);
    return simplify_to_mbqc(instantiate(a, s), a.aux_outputs, opt);
}

struct StageCheck {
    std::string name;
    double residual = 0.0;
};

/**
 * @brief Tensor proportionality of every stage against its predecessor. The
 * plug stage is compared against the previous tensor with the plugged legs
 * contracted by the plug covector.
 */
inline std::vector<StageCheck> check_stages(const PipelineTrace& trace) {
    std::vector<StageCheck> out;
    auto prev = zx::eval_tensor(trace.stages.front().diagram);
    for (std::size_t i = 1; i < trace.stages.size(); ++i) {
        const auto& before = trace.stages[i - 1].diagram;
        auto cur = zx::eval_tensor(trace.stages[i].diagram);
        auto reference = prev;
        if (trace.stages[i].name == "plug") {
            std::vector<std::size_t> legs;
            for (int b : trace.plug_nodes) {
                const auto& outs = before.outputs();
                const auto pos = static_cast<std::size_t>(std::find(outs.begin(), outs.end(), b) - outs.begin());
                legs.push_back(before.inputs().size() + pos);
            }
            std::sort(legs.rbegin(), legs.rend());
            for (auto leg : legs) reference = reference.contract_leg(leg, plug_covector(trace.plug));
        }
        out.push_back({trace.stages[i].name, zx::proportionality_residual(reference, cur)});
        prev = std::move(cur);
    }
    return out;
}

}  // namespace simonzx::mbqc
