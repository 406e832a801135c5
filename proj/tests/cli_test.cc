// Copyright 2026 The Hyperstate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

using hyperstate::cli::run_cli;

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;

    nlohmann::json json() const {
        return nlohmann::json::parse(out);
    }
};

CliRun run(std::vector<std::string> args, const std::string &stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    CliRun r;
    r.code = run_cli(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

}  // namespace

TEST(cli, help_and_usage) {
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"nonsense"}).code, 2);
    EXPECT_EQ(run({"verify"}).code, 2);
    EXPECT_EQ(run({"verify", "teleport"}).code, 2);
}

TEST(cli, verify_bell) {
    CliRun r = run({"verify", "bell"});
    ASSERT_EQ(r.code, 0) << r.err;
    nlohmann::json j = r.json();
    EXPECT_EQ(j["schema"], "hyperstate/1");
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_EQ(j["realizable"], 5);
    EXPECT_EQ(j["byproduct_table"].size(), 5u);
    EXPECT_EQ(j["byproduct_table"][0]["byproducts"], "1");
    EXPECT_EQ(j["byproduct_table"][1]["byproducts"], "Z_{3}");
}

TEST(cli, verify_gadgets) {
    for (std::string g : {"wire2", "wire3", "ccz-gadget"}) {
        CliRun r = run({"verify", g});
        EXPECT_EQ(r.code, 0) << g << r.err;
    }
}

TEST(cli, verify_cnz) {
    CliRun r = run({"verify", "cnz", "--r", "1"});
    ASSERT_EQ(r.code, 0);
    nlohmann::json j = r.json();
    EXPECT_EQ(j["hadamard_depth"], 2);
    EXPECT_EQ(j["counts"]["CCZ"], 7);
    EXPECT_EQ(j["counts"]["H"], 6);
}

TEST(cli, verify_identity) {
    CliRun r = run({"verify", "identity"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["product"], "C_{1,2,3,4}");
    CliRun over = run({"verify", "identity", "--n", "12", "--cap", "10"});
    EXPECT_EQ(over.code, 2);
    EXPECT_NE(over.err.find("cap"), std::string::npos);
    CliRun bad = run({"verify", "identity", "--e1", "1,2", "--i", "0"});
    EXPECT_EQ(bad.code, 2);
}

TEST(cli, cap_ceiling_and_env) {
    EXPECT_EQ(run({"--cap", "27", "verify", "bell"}).code, 2);
    ::setenv("HYPERSTATE_ORACLE_CAP", "8", 1);
    EXPECT_EQ(run({"verify", "ccz-gadget"}).code, 2);
    ::setenv("HYPERSTATE_ORACLE_CAP", "lots", 1);
    EXPECT_EQ(run({"verify", "bell"}).code, 2);
    ::unsetenv("HYPERSTATE_ORACLE_CAP");
    EXPECT_EQ(run({"verify", "bell"}).code, 0);
}

TEST(cli, rule_x_box_wire) {
    CliRun r = run({"rule", "x", "--example", "wire2", "--box", "0,1,2", "--outcome", "+++", "--pivot", "4", "--check"});
    ASSERT_EQ(r.code, 0) << r.out << r.err;
    nlohmann::json j = r.json();
    EXPECT_EQ(j["pivot_label"], 4);
    EXPECT_EQ(j["text"], "H_{4} C_{3,4} C_{4,5}");
    EXPECT_TRUE(j["check"]["ok"].get<bool>());

    CliRun minus = run({"rule", "x", "--example", "wire2", "--box", "0,1,2", "--outcome", "-++", "--pivot", "4",
                     "--format", "text"});
    ASSERT_EQ(minus.code, 0);
    EXPECT_NE(minus.out.find("post: Z_{4} C_{3,4} C_{4,5}"), std::string::npos) << minus.out;
}

TEST(cli, rule_x_forbidden_is_structured) {
    CliRun r = run({"rule", "x", "--example", "five", "--box", "0,1,2", "--outcome", "+--"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.json()["error"]["kind"], "ForbiddenOutcome");
}

TEST(cli, rule_x_no_pivot) {
    CliRun r = run({"rule", "x", "--state", "-", "--vertex", "2"}, R"({"n":3,"edges":[[0,1]]})");
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.json()["error"]["kind"], "NoPivot");
}

TEST(cli, rule_z) {
    CliRun r = run({"rule", "z", "--state", "-", "--vertex", "2", "--outcome", "1", "--check"},
                R"({"n":3,"edges":[[0,1,2]]})");
    ASSERT_EQ(r.code, 0);
    nlohmann::json j = r.json();
    EXPECT_EQ(j["post"]["edges"], nlohmann::json::parse("[[0,1]]"));
    EXPECT_EQ(j["text"], "C_{0,1}");
    EXPECT_TRUE(j["check"]["ok"].get<bool>());
}

TEST(cli, rule_glc_and_gcnot) {
    const std::string path = (std::filesystem::temp_directory_path() / "hyperstate_cli_state.json").string();
    {
        std::ofstream f(path);
        f << R"({"n":4,"edges":[[0,1],[1,2],[1,3],[0,2,3]]})";
    }
    CliRun g = run({"rule", "glc", "--state", path, "--vertex", "1", "--check"});
    EXPECT_EQ(g.code, 0) << g.out;
    CliRun c = run({"rule", "gcnot", "--state", path, "--vertex", "3", "--controls", "0", "--check"});
    EXPECT_EQ(c.code, 0) << c.out;
    EXPECT_TRUE(c.json()["check"]["ok"].get<bool>());
    std::filesystem::remove(path);
}

TEST(cli, rule_input_errors) {
    EXPECT_EQ(run({"rule", "z", "--state", "-", "--vertex", "0"}, "{not json").code, 2);
    EXPECT_EQ(run({"rule", "z", "--vertex", "0"}).code, 2);
    EXPECT_EQ(run({"rule", "z", "--state", "/nonexistent/state.json", "--vertex", "0"}).code, 2);
    EXPECT_EQ(run({"rule", "x", "--example", "five", "--vertex", "0", "--outcome", "?"}).code, 2);
    EXPECT_EQ(run({"rule", "y", "--example", "five"}).code, 2);
}

TEST(cli, fuzz) {
    CliRun clean = run({"fuzz", "--cases", "100", "--n", "8", "--seed", "7", "--no-cross-form"});
    ASSERT_EQ(clean.code, 0) << clean.out;
    nlohmann::json j = clean.json();
    EXPECT_TRUE(j["pass"].get<bool>());
    for (const auto &c : j["checks"]) {
        EXPECT_EQ(c["failed"], 0) << c["name"];
    }
    CliRun again = run({"fuzz", "--cases", "100", "--n", "8", "--seed", "7", "--no-cross-form", "--threads", "2"});
    EXPECT_EQ(again.out, clean.out);
}

TEST(cli, fuzz_reports_cross_form_mismatch) {
    CliRun r = run({"fuzz", "--cases", "100", "--n", "8", "--seed", "7"});
    EXPECT_EQ(r.code, 1);
    nlohmann::json j = r.json();
    EXPECT_EQ(j["first_failure"]["check"], "measure_x_glc");
    EXPECT_NE(j["reproduce"].get<std::string>().find("--start"), std::string::npos);
}

TEST(cli, fuzz_negative_control_and_cap) {
    CliRun r = run({"fuzz", "--cases", "20", "--no-cross-form", "--invert-minus-correction"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.json()["first_failure"]["check"], "measure_x");
    EXPECT_NE(r.err.find("reproduce"), std::string::npos);
    EXPECT_EQ(run({"fuzz", "--n", "30"}).code, 2);
}

TEST(cli, resources) {
    CliRun r = run({"resources", "--N", "6"});
    ASSERT_EQ(r.code, 0);
    nlohmann::json j = r.json();
    EXPECT_EQ(j["K_CCZ"], 7);
    EXPECT_EQ(j["K_SWAP"], 24);
    EXPECT_EQ(j["H"], 6);
    EXPECT_EQ(j["ancillas"], 3);
    EXPECT_EQ(j["cz_physical"], 237);
    EXPECT_EQ(j["qubits_physical"], 234);
    EXPECT_EQ(j["standard_cluster"], 63);
    EXPECT_EQ(run({"resources", "--N", "7"}).code, 2);
    EXPECT_EQ(run({"resources"}).code, 2);
}

TEST(cli, export) {
    CliRun dot = run({"export", "--what", "ccz-gadget", "--format", "dot"});
    ASSERT_EQ(dot.code, 0);
    EXPECT_EQ(dot.out.rfind("graph hypergraph {", 0), 0u);
    EXPECT_NE(dot.out.find("shape=square"), std::string::npos);

    CliRun json = run({"export", "--what", "bell", "--format", "json"});
    ASSERT_EQ(json.code, 0);
    EXPECT_EQ(json.json()["name"], "bell");

    CliRun circuit = run({"export", "--what", "cnz", "--r", "1", "--format", "json"});
    ASSERT_EQ(circuit.code, 0);
    EXPECT_EQ(circuit.json()["qubits"], 9);

    const std::string path = (std::filesystem::temp_directory_path() / "hyperstate_cnz.dot").string();
    ASSERT_EQ(run({"export", "--what", "cnz", "--format", "dot", "--out", path}).code, 0);
    std::ifstream f(path);
    std::string first;
    std::getline(f, first);
    EXPECT_EQ(first, "digraph circuit {");
    std::filesystem::remove(path);

    EXPECT_EQ(run({"export", "--what", "teapot"}).code, 2);
    EXPECT_EQ(run({"export", "--what", "bell", "--format", "png"}).code, 2);
}
