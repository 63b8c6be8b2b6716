#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "simonzx/circuit.hpp"
#include "simonzx/io/dot.hpp"
#include "simonzx/io/json.hpp"
#include "simonzx/mbqc/compile.hpp"
#include "simonzx/mbqc/topology.hpp"
#include "simonzx/oracle_synth.hpp"
#include "simonzx/verify.hpp"

namespace simonzx::cli {

using io::json;

enum ExitCode : int { ok = 0, bad_input = 1, unrealizable = 2, pipeline_stuck = 3, verification_failed = 4 };

struct CommandResult {
    int exit_code = ok;
    std::string out;  ///< primary output (JSON or DOT)
    std::string err;  ///< diagnostic for stderr
};

struct RunConfig {
    std::uint64_t seed = 1;
    double tol = 1e-9;

    void validate() const {
        if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    }
};

namespace detail {

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline CommandResult fail(int code, const std::string& msg) { return {code, {}, msg + "\n"}; }

/// Parses a function table; JSON or schema trouble becomes a bad_input result.
inline std::variant<FunctionTable, CommandResult> parse_function(const std::string& text) {
    try {
        return io::function_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
        return fail(bad_input, std::string("malformed JSON: ") + e.what());
    } catch (const std::exception& e) {
        return fail(bad_input, std::string("invalid function table: ") + e.what());
    }
}

}  // namespace detail

/// Function table JSON -> gate list JSON, or the unrealizable residual with exit 2.
inline CommandResult cmd_synthesize(const std::string& function_json) {
    auto parsed = detail::parse_function(function_json);
    if (auto* r = std::get_if<CommandResult>(&parsed)) return *r;
    const auto& f = std::get<FunctionTable>(parsed);
    const auto result = synthesize_oracle(f);
    if (const auto* gl = std::get_if<GateList>(&result)) return {ok, detail::dump(io::to_json(*gl)), {}};
    const auto& bad = std::get<Unrealizable>(result);
    json j{{"status", "unrealizable"}, {"n", f.n()}, {"residual", bad.residual.str()}};
    return {unrealizable, detail::dump(j), "function is not affine; residual characteristic " + bad.residual.str() + "\n"};
}

enum class SimMode { circuit, mbqc };

/**
 * @brief Runs the protocol on the exact outcome distribution of the chosen
 * mode. The mbqc mode compiles the adaptive cluster for n and post-selects.
 */
inline CommandResult cmd_simulate(const std::string& function_json, SimMode mode, const RunConfig& cfg, std::size_t rounds) {
    try {
        cfg.validate();
    } catch (const std::exception& e) {
        return detail::fail(bad_input, e.what());
    }
    auto parsed = detail::parse_function(function_json);
    if (auto* r = std::get_if<CommandResult>(&parsed)) return *r;
    const auto& f = std::get<FunctionTable>(parsed);
    const auto synth = synthesize_oracle(f);
    const auto* gl = std::get_if<GateList>(&synth);
    if (gl == nullptr) {
        return detail::fail(unrealizable, "function is not affine; residual characteristic " +
                                              std::get<Unrealizable>(synth).residual.str());
    }
    Distribution dist;
    try {
        dist = mode == SimMode::circuit ? working_outcome_distribution(*gl) : mbqc::mbqc_distribution(*gl);
    } catch (const mbqc::PipelineError& e) {
        return detail::fail(pipeline_stuck, std::string("pipeline stuck at ") + e.what());
    } catch (const std::exception& e) {
        return detail::fail(bad_input, std::string("cannot simulate: ") + e.what());
    }
    const auto report = run_simon_protocol(f, dist, cfg.seed, rounds);
    json j{{"seed", cfg.seed}, {"mode", mode == SimMode::circuit ? "circuit" : "mbqc"}, {"n", f.n()}};
    j["oracle"] = io::to_json(*gl);
    const json summary = io::to_json(report);
    for (const auto& [k, v] : summary.items()) j[k] = v;
    j["distribution"] = io::to_json(dist);
    return {ok, detail::dump(j), {}};
}

struct CompileOptions {
    std::optional<std::size_t> adaptive_n;  ///< compile the switchable oracle of this width
    std::optional<std::string> function_json;
    bool check = false;
    bool dot = false;
    mbqc::AuxPlug plug = mbqc::AuxPlug::computational_zero;
};

/**
 * @brief Raw translation, simplified diagram and measurement pattern. With
 * a function, the pattern carries that oracle's angles. `check` adds the
 * stage-by-stage tensor comparison.
 */
inline CommandResult cmd_compile(const CompileOptions& opt, const RunConfig& cfg) {
    std::size_t n = 0;
    std::optional<mbqc::OracleSettings> settings;
    if (opt.function_json) {
        auto parsed = detail::parse_function(*opt.function_json);
        if (auto* r = std::get_if<CommandResult>(&parsed)) return *r;
        const auto& f = std::get<FunctionTable>(parsed);
        const auto synth = synthesize_oracle(f);
        const auto* gl = std::get_if<GateList>(&synth);
        if (gl == nullptr) {
            return detail::fail(unrealizable, "function is not affine; residual characteristic " +
                                                  std::get<Unrealizable>(synth).residual.str());
        }
        n = f.n();
        settings = mbqc::OracleSettings::from_gates(*gl);
    } else if (opt.adaptive_n) {
        n = *opt.adaptive_n;
    } else {
        return detail::fail(bad_input, "compile needs a function file or --adaptive n");
    }
    if (n < 1 || n > 4) return detail::fail(bad_input, "compile supports 1 <= n <= 4");

    mbqc::CompiledOracle c;
    mbqc::PipelineTrace trace;
    try {
        c = mbqc::compile_adaptive(n, opt.plug);
        trace = settings ? mbqc::simplify_to_mbqc(c.raw, *settings, opt.plug) : c.trace;
    } catch (const mbqc::PipelineError& e) {
        json j{{"status", "pipeline_stuck"}, {"stage", e.stage()}, {"message", e.what()}};
        return {pipeline_stuck, detail::dump(j), std::string("pipeline stuck at stage ") + e.stage() + "\n"};
    }

    if (opt.dot) return {ok, io::to_dot(trace.result(), "mbqc_n" + std::to_string(n)), {}};

    const auto pattern = settings ? c.pattern_for(*settings) : c.base;
    json j{{"n", n}, {"plug", mbqc::to_string(opt.plug)}};
    if (settings) j["oracle"] = io::to_json(settings->to_gates());
    j["raw"] = io::to_json(settings ? mbqc::instantiate(c.raw, *settings) : c.raw.base);
    j["mbqc"] = io::to_json(trace.result());
    j["pattern"] = io::to_json(pattern);
    json slots = json::array();
    for (const auto& [slot, q] : c.adaptive_qubits) slots.push_back({{"slot", {slot.j, slot.k}}, {"node", q}});
    j["adaptive_qubits"] = slots;
    j["aux_readout"] = c.aux_readout;
    j["spider_count"] = trace.result().num_spiders();
    j["measured_count"] = pattern.measurements.size();

    int code = ok;
    std::string err;
    if (opt.check) {
        json stages = json::array();
        bool all = true;
        auto record = [&](const std::string& name, double r) {
            const bool pass = r <= cfg.tol;
            all = all && pass;
            stages.push_back({{"stage", name}, {"status", pass ? "pass" : "fail"}, {"max_residual", r}});
        };
        // checks beyond the contraction or simulation cap are reported as skipped, not failed
        auto skip = [&](const std::string& name, const std::exception& e) {
            stages.push_back({{"stage", name}, {"status", "skipped"}, {"detail", e.what()}});
        };
        try {
            for (const auto& st : mbqc::check_stages(trace)) record(st.name, st.residual);
        } catch (const std::exception& e) {
            skip("stages", e);
        }
        try {
            record("pattern", zx::proportionality_residual(zx::eval_tensor(trace.result()), mbqc::simulate_pattern(pattern)));
        } catch (const std::exception& e) {
            skip("pattern", e);
        }
        j["check"] = stages;
        if (!all) {
            code = verification_failed;
            err = "stage check failed\n";
        }
    }
    return {code, detail::dump(j), err};
}

inline CommandResult cmd_topology(std::size_t n, bool expanded, bool dot) {
    if (n < 1) return detail::fail(bad_input, "topology needs n >= 1");
    const auto t = mbqc::topology(n);
    const auto& g = expanded ? t.expanded : t.compact;
    if (dot) return {ok, io::to_dot(g, n), {}};
    json j = io::to_json(g);
    j["n"] = n;
    return {ok, detail::dump(j), {}};
}

/// Rule soundness plus the n = 2 sweep; exit 4 if any case fails.
inline CommandResult cmd_verify(const RunConfig& cfg) {
    try {
        cfg.validate();
    } catch (const std::exception& e) {
        return detail::fail(bad_input, e.what());
    }
    auto rules = verify::verify_rules(cfg.seed, 200, cfg.tol);
    const auto simon = verify::verify_simon_n2(cfg.seed, cfg.tol);
    rules.cases.insert(rules.cases.end(), simon.cases.begin(), simon.cases.end());
    const bool pass = rules.all_passed();
    return {pass ? ok : verification_failed, detail::dump(rules.to_json()), pass ? "" : "verification failed\n"};
}

}  // namespace simonzx::cli
