// simonzx: oracle synthesis, simulation, ZX compilation and cluster topologies for Simon's algorithm.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "simonzx/commands.hpp"

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int emit(const simonzx::cli::CommandResult& r, const std::string& out_path) {
    if (!r.err.empty()) std::cerr << r.err;
    if (!r.out.empty()) {
        if (out_path.empty()) {
            std::cout << r.out;
        } else {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "cannot write " << out_path << "\n";
                return simonzx::cli::bad_input;
            }
            out << r.out;
        }
    }
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace simonzx::cli;
    CLI::App app{"Simon's algorithm: oracle synthesis, ZX compilation to measurement patterns"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string out_path;
    app.add_option("--seed", cfg.seed, "seed for every random choice")->capture_default_str();
    app.add_option("--tol", cfg.tol, "tensor and distribution tolerance")->capture_default_str();
    app.add_option("--out", out_path, "write the result here instead of stdout");

    std::string input;
    auto* synth = app.add_subcommand("synthesize", "function table JSON -> CNOT/X oracle");
    synth->add_option("input", input, "function table JSON file, - for stdin")->required();

    std::string mode = "circuit";
    std::size_t rounds = 64;
    auto* sim = app.add_subcommand("simulate", "run the protocol on the exact outcome distribution");
    sim->add_option("input", input, "function table JSON file, - for stdin")->required();
    sim->add_option("--mode", mode, "circuit or mbqc")->check(CLI::IsMember({"circuit", "mbqc"}))->capture_default_str();
    sim->add_option("--rounds", rounds, "maximum sampling rounds")->capture_default_str();

    CompileOptions copt;
    std::size_t adaptive_n = 0;
    std::string format = "json";
    std::string plug = "zero";
    auto* comp = app.add_subcommand("compile", "ZX translation, simplification and measurement pattern");
    comp->add_option("input", input, "function table JSON file, - for stdin");
    comp->add_option("--adaptive", adaptive_n, "compile the switchable oracle of this width");
    comp->add_flag("--check", copt.check, "compare every pipeline stage by tensor contraction");
    comp->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
    comp->add_option("--plug", plug, "auxiliary output effect: zero or plus")
        ->check(CLI::IsMember({"zero", "plus"}))
        ->capture_default_str();

    std::size_t topo_n = 2;
    bool expanded = false;
    std::string topo_format = "json";
    auto* topo = app.add_subcommand("topology", "cluster graph of the n-qubit oracle");
    topo->add_option("n", topo_n, "register width")->required();
    topo->add_flag("--expanded", expanded, "one measurement node per gadget edge");
    topo->add_option("--format", topo_format, "json or dot")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();

    auto* ver = app.add_subcommand("verify", "rule soundness and the n = 2 acceptance sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*synth) return emit(cmd_synthesize(slurp(input)), out_path);
        if (*sim) {
            return emit(cmd_simulate(slurp(input), mode == "mbqc" ? SimMode::mbqc : SimMode::circuit, cfg, rounds),
                        out_path);
        }
        if (*comp) {
            if (!input.empty()) copt.function_json = slurp(input);
            if (adaptive_n > 0) copt.adaptive_n = adaptive_n;
            copt.dot = format == "dot";
            copt.plug = plug == "plus" ? simonzx::mbqc::AuxPlug::plus : simonzx::mbqc::AuxPlug::computational_zero;
            return emit(cmd_compile(copt, cfg), out_path);
        }
        if (*topo) return emit(cmd_topology(topo_n, expanded, topo_format == "dot"), out_path);
        if (*ver) return emit(cmd_verify(cfg), out_path);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return bad_input;
    }
    return bad_input;
}
