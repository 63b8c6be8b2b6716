#include <gtest/gtest.h>

#include "simonzx/commands.hpp"

using namespace simonzx;
using simonzx::io::json;

TEST(Json, FunctionRoundTrip) {
    const auto f = FunctionTable::from_strings(2, {"10", "11", "11", "10"});
    const auto j = io::to_json(f);
    EXPECT_EQ(j.dump(), R"({"n":2,"outputs":["10","11","11","10"]})");
    EXPECT_EQ(io::function_from_json(j).outputs(), f.outputs());
}

TEST(Json, FunctionSchemaErrors) {
    EXPECT_THROW(io::function_from_json(json::parse(R"({"outputs": ["0", "1"]})")), io::SchemaError);
    EXPECT_THROW(io::function_from_json(json::parse(R"({"n": 2, "outputs": ["00", "01"]})")), io::SchemaError);
    EXPECT_THROW(io::function_from_json(json::parse(R"({"n": 1, "outputs": ["0", "2"]})")), io::SchemaError);
    EXPECT_THROW(io::function_from_json(json::parse(R"({"n": "two", "outputs": []})")), io::SchemaError);
    EXPECT_THROW(io::function_from_json(json::parse("[1, 2]")), io::SchemaError);
}

TEST(Json, GateListRoundTrip) {
    const GateList gl{3, {Gate::x(1), Gate::cnot(2, 3), Gate::cnot(1, 1)}};
    const auto back = io::gates_from_json(io::to_json(gl));
    EXPECT_EQ(back.n, 3U);
    ASSERT_EQ(back.gates.size(), 3U);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(back.gates[i].name(), gl.gates[i].name());
    EXPECT_EQ(io::to_json(gl)["gates"][1]["name"], gl.gates[1].name());
}

TEST(Json, GateListSchemaErrors) {
    EXPECT_THROW(io::gates_from_json(json::parse(R"({"n": 2, "gates": [{"kind": "h", "target": 1}]})")), io::SchemaError);
    EXPECT_THROW(io::gates_from_json(json::parse(R"({"n": 2, "gates": [{"kind": "x", "target": 3}]})")), io::SchemaError);
    EXPECT_THROW(io::gates_from_json(json::parse(R"({"n": 2, "gates": [{"kind": "cnot", "target": 1}]})")), io::SchemaError);
    EXPECT_THROW(io::gates_from_json(json::parse(R"({"n": 2, "gates": 5})")), io::SchemaError);
}

TEST(Json, DiagramRoundTripPreservesTensor) {
    const auto c = mbqc::compile_adaptive(2);
    for (const auto* d : {&c.raw.base, &c.mbqc_diagram()}) {
        const auto back = io::diagram_from_json(json::parse(io::to_json(*d).dump()));
        EXPECT_EQ(back.num_spiders(), d->num_spiders());
        EXPECT_EQ(back.edges().size(), d->edges().size());
        EXPECT_LT(zx::proportionality_residual(zx::eval_tensor(*d), zx::eval_tensor(back)), 1e-12);
    }
}

TEST(Json, DiagramSchemaErrors) {
    EXPECT_THROW(io::diagram_from_json(json::parse(R"({"nodes": [{"id": 0, "kind": "Y"}], "edges": [], "inputs": [], "outputs": []})")),
                 io::SchemaError);
    EXPECT_THROW(io::diagram_from_json(json::parse(R"({"nodes": [{"id": 0, "kind": "Z"}], "edges": [{"a": 0, "b": 9}], "inputs": [], "outputs": []})")),
                 io::SchemaError);
    EXPECT_THROW(io::diagram_from_json(json::parse(R"({"nodes": [], "edges": []})")), io::SchemaError);
}

TEST(Json, PatternAndTopology) {
    const auto c = mbqc::compile_adaptive(2);
    const auto p = io::to_json(c.base);
    EXPECT_EQ(p["nodes"].size(), 10U);
    EXPECT_EQ(p["measurements"].size(), 8U);
    EXPECT_EQ(p["measurements"][0]["plane"], "xy");
    const auto t = io::to_json(mbqc::topology(2).expanded);
    EXPECT_EQ(t["form"], "expanded");
    EXPECT_EQ(t["node_count"], 8);
    EXPECT_EQ(t["edge_count"], 8);
    EXPECT_EQ(t["nodes"][4]["role"], "gadget");
}

TEST(Dot, TopologyHeaderCounts) {
    const auto compact = io::to_dot(mbqc::topology(3).compact, 3);
    EXPECT_NE(compact.find("// nodes: 6"), std::string::npos);
    EXPECT_NE(compact.find("// edges: 9 gadget"), std::string::npos);
    EXPECT_NE(compact.find("color=red"), std::string::npos);
    const auto expanded = io::to_dot(mbqc::topology(3).expanded, 3);
    EXPECT_NE(expanded.find("// nodes: 15"), std::string::npos);
    EXPECT_NE(expanded.find("// edges: 18 hadamard"), std::string::npos);
}

TEST(Dot, DiagramListsEverySpider) {
    const auto c = mbqc::compile_adaptive(1);
    const auto dot = io::to_dot(c.mbqc_diagram(), "g");
    EXPECT_EQ(dot.rfind("graph g {", 0), 0U);
    EXPECT_NE(dot.find(std::to_string(c.mbqc_diagram().num_spiders()) + " spiders"), std::string::npos);
}

namespace {

const std::string simon_json = R"({"n": 2, "outputs": ["10", "11", "11", "10"]})";
const std::string nonaffine_json = R"({"n": 3, "outputs": ["000", "001", "010", "100", "001", "000", "100", "010"]})";

}  // namespace

TEST(Commands, SynthesizeExitCodes) {
    EXPECT_EQ(cli::cmd_synthesize(simon_json).exit_code, cli::ok);
    EXPECT_EQ(cli::cmd_synthesize("{\"n\": 2").exit_code, cli::bad_input);
    EXPECT_EQ(cli::cmd_synthesize(R"({"n": 2})").exit_code, cli::bad_input);
    const auto r = cli::cmd_synthesize(nonaffine_json);
    EXPECT_EQ(r.exit_code, cli::unrealizable);
    EXPECT_EQ(json::parse(r.out)["status"], "unrealizable");
}

TEST(Commands, SimulateFindsPeriod) {
    for (auto mode : {cli::SimMode::circuit, cli::SimMode::mbqc}) {
        const auto r = cli::cmd_simulate(simon_json, mode, {3, 1e-9}, 64);
        ASSERT_EQ(r.exit_code, cli::ok) << r.err;
        const auto j = json::parse(r.out);
        EXPECT_EQ(j["period"], "11");
        EXPECT_TRUE(j["verified"].get<bool>());
    }
    EXPECT_EQ(cli::cmd_simulate(simon_json, cli::SimMode::circuit, {1, 0.0}, 64).exit_code, cli::bad_input);
    EXPECT_EQ(cli::cmd_simulate(nonaffine_json, cli::SimMode::circuit, {}, 64).exit_code, cli::unrealizable);
}

TEST(Commands, SimulateIsDeterministic) {
    const auto a = cli::cmd_simulate(simon_json, cli::SimMode::circuit, {9, 1e-9}, 64);
    const auto b = cli::cmd_simulate(simon_json, cli::SimMode::circuit, {9, 1e-9}, 64);
    EXPECT_EQ(a.out, b.out);
}

TEST(Commands, Compile) {
    cli::CompileOptions opt;
    EXPECT_EQ(cli::cmd_compile(opt, {}).exit_code, cli::bad_input);
    opt.adaptive_n = 5;
    EXPECT_EQ(cli::cmd_compile(opt, {}).exit_code, cli::bad_input);
    opt.adaptive_n = 2;
    opt.check = true;
    const auto r = cli::cmd_compile(opt, {});
    ASSERT_EQ(r.exit_code, cli::ok) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["spider_count"], 10);
    EXPECT_EQ(j["measured_count"], 8);
    for (const auto& st : j["check"]) EXPECT_EQ(st["status"], "pass") << st["stage"];
    cli::CompileOptions fopt;
    fopt.function_json = nonaffine_json;
    EXPECT_EQ(cli::cmd_compile(fopt, {}).exit_code, cli::unrealizable);
}

TEST(Commands, Topology) {
    EXPECT_EQ(cli::cmd_topology(0, false, false).exit_code, cli::bad_input);
    const auto r = cli::cmd_topology(4, true, false);
    ASSERT_EQ(r.exit_code, cli::ok);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["node_count"], 24);
    EXPECT_EQ(j["edge_count"], 32);
}
