#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "simonzx/circuit.hpp"
#include "simonzx/function_table.hpp"
#include "simonzx/io/json.hpp"
#include "simonzx/mbqc/compile.hpp"
#include "simonzx/zx/gadget.hpp"
#include "simonzx/zx/rewrite.hpp"
#include "simonzx/zx/tensor.hpp"

namespace simonzx::verify {

using io::json;

struct CaseResult {
    std::string name;
    bool passed = false;
    double max_residual = 0.0;
    std::size_t instances = 0;
    std::string detail;
    json offending;  ///< first failing diagram, if any
};

struct Report {
    std::uint64_t seed = 0;
    double tol = 1e-9;
    std::vector<CaseResult> cases;

    [[nodiscard]] bool all_passed() const {
        return std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.passed; });
    }

    [[nodiscard]] json to_json() const {
        json arr = json::array();
        for (const auto& c : cases) {
            json j{{"case", c.name},
                   {"status", c.passed ? "pass" : "fail"},
                   {"max_residual", std::isfinite(c.max_residual) ? json(c.max_residual) : json("inf")},
                   {"instances", c.instances}};
            if (!c.detail.empty()) j["detail"] = c.detail;
            if (!c.offending.is_null()) j["diagram"] = c.offending;
            arr.push_back(j);
        }
        return {{"seed", seed}, {"tol", tol}, {"passed", all_passed()}, {"cases", arr}};
    }
};

/// Random open diagram: spiders of both colours with random phases, random edges, up to `max_legs` legs.
class DiagramSampler {
public:
    explicit DiagramSampler(std::uint64_t seed) : rng_(seed) {}

    std::size_t uniform(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }
    double phase() {
        // half the time a multiple of pi/4, otherwise anywhere on the circle
        if (uniform(0, 1) == 0) return static_cast<double>(uniform(0, 7)) * zx::pi / 4;
        return std::uniform_real_distribution<double>(0.0, zx::two_pi)(rng_);
    }
    zx::VertexKind colour() { return uniform(0, 1) == 0 ? zx::VertexKind::z : zx::VertexKind::x; }
    zx::EdgeKind edge_kind() { return uniform(0, 1) == 0 ? zx::EdgeKind::plain : zx::EdgeKind::hadamard; }

    /// `spiders` random spiders, a few random edges and up to max_legs legs; returns spider ids via `ids`.
    zx::ZxDiagram diagram(std::size_t spiders, std::size_t max_legs, std::vector<int>& ids) {
        zx::ZxDiagram d;
        ids.clear();
        for (std::size_t i = 0; i < spiders; ++i) ids.push_back(d.add_spider(colour(), phase()));
        const std::size_t extra = uniform(0, spiders + 1);
        for (std::size_t i = 0; i < extra; ++i) {
            const int a = ids[uniform(0, ids.size() - 1)];
            const int b = ids[uniform(0, ids.size() - 1)];
            if (a != b) d.add_edge(a, b, edge_kind());
        }
        const std::size_t legs = uniform(0, max_legs);
        for (std::size_t i = 0; i < legs; ++i) {
            const int b = uniform(0, 1) == 0 ? d.add_input() : d.add_output();
            d.add_edge(ids[uniform(0, ids.size() - 1)], b, edge_kind());
        }
        return d;
    }

private:
    std::mt19937_64 rng_;
};

namespace detail {

/// Runs `make` to get (before, after) pairs and records the worst residual.
template <class Make>
CaseResult rule_case(const std::string& name, std::size_t instances, double tol, Make make) {
    CaseResult r{name, true, 0.0, instances, {}, nullptr};
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < instances; ++i) {
        const auto [before, after] = make();
        const auto tb = zx::eval_tensor(before);
        const double res = zx::proportionality_residual(tb, zx::eval_tensor(after));
        if (tb.max_abs() > zx::numerical_zero) ++nonzero;
        if (!(res <= tol) && r.passed) {
            r.passed = false;
            r.offending = {{"before", io::to_json(before)}, {"after", io::to_json(after)}};
        }
        r.max_residual = std::max(r.max_residual, res);
    }
    r.detail = std::to_string(nonzero) + " of " + std::to_string(instances) + " instances have a nonzero tensor";
    return r;
}

}  // namespace detail

/**
 * @brief Randomized soundness of each rewrite rule (at least `instances`
 * diagrams with at most 8 legs each) plus both adaptive gadget identities.
 */
inline Report verify_rules(std::uint64_t seed, std::size_t instances = 200, double tol = 1e-9) {
    Report rep{seed, tol, {}};
    DiagramSampler gen(seed);
    std::vector<int> ids;

    rep.cases.push_back(detail::rule_case("rule/fuse_spiders", instances, tol, [&] {
        auto d = gen.diagram(gen.uniform(2, 6), 6, ids);
        const int a = ids[0];
        const int b = d.add_spider(d.vertex(a).kind, gen.phase());
        const int e = d.add_edge(a, b);
        for (std::size_t i = 0, k = gen.uniform(0, 3); i < k; ++i) {
            d.add_edge(b, ids[gen.uniform(0, ids.size() - 1)], gen.edge_kind());
        }
        if (gen.uniform(0, 1) == 0) d.add_edge(b, d.add_output(), gen.edge_kind());
        return std::pair{d, zx::fuse_spiders(d, e)};
    }));

    rep.cases.push_back(detail::rule_case("rule/color_change", instances, tol, [&] {
        auto d = gen.diagram(gen.uniform(1, 6), 8, ids);
        return std::pair{d, zx::color_change(d, ids[gen.uniform(0, ids.size() - 1)])};
    }));

    rep.cases.push_back(detail::rule_case("rule/remove_identity", instances, tol, [&] {
        auto d = gen.diagram(gen.uniform(2, 6), 6, ids);
        const int u = ids[gen.uniform(0, ids.size() - 1)];
        const int w = ids[gen.uniform(0, ids.size() - 1)];
        const int mid = d.add_spider(gen.colour(), 0.0);
        const auto kind = gen.edge_kind();
        d.add_edge(u, mid, kind);
        if (u == w) {
            d.add_edge(mid, d.add_output(), kind);  // identity in front of a leg
        } else {
            d.add_edge(mid, w, kind);
        }
        return std::pair{d, zx::remove_identity(d, mid)};
    }));

    rep.cases.push_back(detail::rule_case("rule/copy_rule", instances, tol, [&] {
        auto d = gen.diagram(gen.uniform(1, 5), 5, ids);
        const int hub = d.add_z(0.0);
        for (std::size_t i = 0, k = gen.uniform(1, 3); i < k; ++i) {
            d.add_edge(hub, ids[gen.uniform(0, ids.size() - 1)], gen.edge_kind());
        }
        if (gen.uniform(0, 1) == 0) d.add_edge(hub, d.add_output(), gen.edge_kind());
        const int state = d.add_x(0.0);
        d.add_edge(state, hub);
        return std::pair{d, zx::copy_rule(d, state)};
    }));

    for (bool on : {true, false}) {
        const auto v = zx::verify_adaptive_cnot(on, tol);
        rep.cases.push_back({on ? "gadget/adaptive_cnot_on" : "gadget/adaptive_cnot_off", v.holds, v.max_residual,
                             on ? zx::adaptive_cnot_chain().size() - 1 : zx::adaptive_bridge_chain().size() - 1,
                             on ? "proportional to CNOT with -pi/2 corrections" : "proportional to two disconnected wires", nullptr});
    }
    return rep;
}

/// Worst distance of `dist` from the uniform distribution on {m : m.s = 0}; s = 0 means all of {0,1}^n.
inline double sampling_law_deviation(const Distribution& dist, const BitString& s) {
    const std::size_t n = s.size();
    const std::size_t support = s.is_zero() ? (std::size_t{1} << n) : (std::size_t{1} << (n - 1));
    double worst = 0.0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        const auto bits = BitString::from_uint(m, n);
        const double want = bits.dot(s) ? 0.0 : 1.0 / static_cast<double>(support);
        const auto it = dist.find(bits);
        worst = std::max(worst, std::abs((it == dist.end() ? 0.0 : it->second) - want));
    }
    return worst;
}

inline double distribution_distance(const Distribution& a, const Distribution& b) {
    double worst = 0.0;
    for (const auto& [m, p] : a) worst = std::max(worst, std::abs(p - (b.contains(m) ? b.at(m) : 0.0)));
    for (const auto& [m, p] : b) worst = std::max(worst, std::abs(p - (a.contains(m) ? a.at(m) : 0.0)));
    return worst;
}

/// Every function on n bits, in lexicographic order of output tuples (n <= 2 keeps this small).
inline std::vector<FunctionTable> all_functions(std::size_t n) {
    const std::size_t size = std::size_t{1} << n;
    const std::uint64_t per = std::uint64_t{1} << n;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < size; ++i) total *= per;
    std::vector<FunctionTable> out;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<BitString> outs;
        std::uint64_t c = code;
        for (std::size_t i = 0; i < size; ++i) {
            outs.push_back(BitString::from_uint(c % per, n));
            c /= per;
        }
        out.emplace_back(n, std::move(outs));
    }
    return out;
}

/// Affine functions with a mod-2 period (two-to-one or bijective).
inline std::vector<FunctionTable> realizable_periodic(std::size_t n) {
    std::vector<FunctionTable> out;
    for (auto& f : all_functions(n)) {
        if (is_affine(f) && find_period(f).kind != PeriodKind::invalid) out.push_back(std::move(f));
    }
    return out;
}

/// Circuit state after oracle and working-register H, as a tensor over (working, auxiliary).
inline zx::Tensor circuit_reference(const GateList& gl) {
    return {2 * gl.n, run_state(simon_circuit(gl)).amplitudes()};
}

/// Contracts the auxiliary legs (the last n) of a reference tensor with the plug covector.
inline zx::Tensor plug_reference(zx::Tensor t, std::size_t n, mbqc::AuxPlug plug) {
    for (std::size_t leg = 2 * n; leg-- > n;) t = t.contract_leg(leg, mbqc::plug_covector(plug));
    return t;
}

struct SweepTotals {
    double final_residual = 0.0;
    double stage_residual = 0.0;
    std::size_t nonzero = 0;
};

/// All 2^(n^2+n) settings: simplified diagram vs plugged circuit reference, plus every stage.
inline SweepTotals settings_sweep(std::size_t n, mbqc::AuxPlug plug) {
    const auto a = mbqc::build_raw_translation(n);
    SweepTotals t;
    for (std::uint64_t code = 0; code < mbqc::OracleSettings::count(n); ++code) {
        const auto s = mbqc::OracleSettings::from_code(n, code);
        const auto trace = mbqc::simplify_to_mbqc(a, s, plug);
        for (const auto& st : mbqc::check_stages(trace)) t.stage_residual = std::max(t.stage_residual, st.residual);
        const auto ref = plug_reference(circuit_reference(s.to_gates()), n, plug);
        if (ref.max_abs() > zx::numerical_zero) ++t.nonzero;
        t.final_residual = std::max(t.final_residual, zx::proportionality_residual(ref, zx::eval_tensor(trace.result())));
    }
    return t;
}

/**
 * @brief The n = 2 end-to-end sweep: the 64 settings through the pipeline
 * (both auxiliary plugs), the raw translation, the extracted patterns, and
 * for every realizable periodic function the circuit-vs-pattern distribution,
 * the sampling law and protocol recovery.
 */
inline Report verify_simon_n2(std::uint64_t seed, double tol = 1e-9) {
    constexpr std::size_t n = 2;
    Report rep{seed, tol, {}};
    const auto settings = mbqc::OracleSettings::count(n);

    for (auto plug : {mbqc::AuxPlug::plus, mbqc::AuxPlug::computational_zero}) {
        const auto t = settings_sweep(n, plug);
        const double worst = std::max(t.final_residual, t.stage_residual);
        std::ostringstream detail;
        detail << "final " << t.final_residual << ", stages " << t.stage_residual << ", " << t.nonzero
               << " settings with a nonzero reference";
        rep.cases.push_back({std::string("pipeline/settings_sweep_") + mbqc::to_string(plug), worst <= tol, worst,
                             settings, detail.str(), nullptr});
    }

    {
        const auto a = mbqc::build_raw_translation(n);
        CaseResult c{"raw/settings_sweep", true, 0.0, settings, "instantiated translation vs full circuit state", nullptr};
        for (std::uint64_t code = 0; code < settings; ++code) {
            const auto s = mbqc::OracleSettings::from_code(n, code);
            const auto d = mbqc::instantiate(a, s);
            const double r = zx::proportionality_residual(circuit_reference(s.to_gates()), zx::eval_tensor(d));
            if (!(r <= tol) && c.passed) c.offending = io::to_json(d);
            c.passed = c.passed && r <= tol;
            c.max_residual = std::max(c.max_residual, r);
        }
        rep.cases.push_back(c);
    }

    const auto compiled = mbqc::compile_adaptive(n);
    {
        CaseResult c{"pattern/settings_sweep", true, 0.0, settings, "cluster simulation vs simplified diagram", nullptr};
        for (std::uint64_t code = 0; code < settings; ++code) {
            const auto s = mbqc::OracleSettings::from_code(n, code);
            const auto p = compiled.pattern_for(s);
            const auto sim = mbqc::simulate_pattern(p);
            const auto trace = mbqc::simplify_to_mbqc(compiled.raw, s, compiled.plug);
            const double r = std::max(zx::proportionality_residual(zx::eval_tensor(trace.result()), sim),
                                      zx::proportionality_residual(zx::eval_tensor(mbqc::pattern_to_diagram(p)), sim));
            c.passed = c.passed && r <= tol;
            c.max_residual = std::max(c.max_residual, r);
        }
        rep.cases.push_back(c);
    }

    const auto functions = realizable_periodic(n);
    std::size_t two_to_one = 0;
    std::size_t bijective = 0;
    CaseResult dist_case{"mbqc/distribution", true, 0.0, functions.size(), {}, nullptr};
    CaseResult law_case{"mbqc/sampling_law", true, 0.0, functions.size(), {}, nullptr};
    CaseResult proto_case{"protocol/recovery", true, 0.0, functions.size(), {}, nullptr};
    for (const auto& f : functions) {
        const auto truth = find_period(f);
        (truth.kind == PeriodKind::two_to_one ? two_to_one : bijective)++;
        const auto gl = std::get<GateList>(synthesize_oracle(f));
        const auto circuit = working_outcome_distribution(gl);
        const auto pattern = compiled.distribution(mbqc::OracleSettings::from_gates(gl));
        const double dd = distribution_distance(circuit, pattern);
        dist_case.max_residual = std::max(dist_case.max_residual, dd);
        dist_case.passed = dist_case.passed && dd <= tol;
        const double law = std::max(sampling_law_deviation(circuit, truth.period), sampling_law_deviation(pattern, truth.period));
        law_case.max_residual = std::max(law_case.max_residual, law);
        law_case.passed = law_case.passed && law <= tol;
        for (const auto* dist : {&circuit, &pattern}) {
            const auto r = run_simon_protocol(f, *dist, seed, 64);
            proto_case.passed = proto_case.passed && r.status == ProtocolStatus::solved && r.verified;
        }
    }
    std::ostringstream counts;
    counts << two_to_one << " two-to-one and " << bijective << " bijective functions (enumerated)";
    dist_case.detail = counts.str();
    law_case.detail = counts.str();
    proto_case.detail = counts.str() + ", circuit and pattern distributions";
    rep.cases.push_back(dist_case);
    rep.cases.push_back(law_case);
    rep.cases.push_back(proto_case);
    return rep;
}

}  // namespace simonzx::verify
