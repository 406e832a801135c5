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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hyperstate/certify.h"
#include "hyperstate/cnz.h"
#include "hyperstate/errors.h"
#include "hyperstate/fuzz.h"
#include "hyperstate/mbqc.h"
#include "hyperstate/rewrite.h"

namespace hyperstate::cli {

namespace {

const char *kSchema = "hyperstate/1";

/// Usage-type failures exit 2; everything the library reports about a
/// specific instance exits 1.
bool is_usage_error(const Error &e) {
    return e.kind() == "InvalidArgument" || e.kind() == "ParseError" || e.kind() == "CapExceeded";
}

nlohmann::json error_json(const std::string &kind, const std::string &message) {
    return nlohmann::json{{"schema", kSchema}, {"error", {{"kind", kind}, {"message", message}}}};
}

std::optional<GadgetSpec> gadget_by_name(const std::string &name) {
    if (name == "bell") {
        return build_bell_teleporter();
    }
    if (name == "wire2") {
        return build_wire_fragment(WireVariant::Plain);
    }
    if (name == "wire3") {
        return build_wire_fragment(WireVariant::TargetHyperedge);
    }
    if (name == "ccz-gadget") {
        return build_ccz_gadget();
    }
    return std::nullopt;
}

std::vector<XOutcome> parse_x_outcomes(const std::string &s) {
    std::vector<XOutcome> out;
    for (char c : s) {
        if (c == '+' || c == '0') {
            out.push_back(XOutcome::Plus);
        } else if (c == '-' || c == '1') {
            out.push_back(XOutcome::Minus);
        } else {
            throw InvalidArgument("outcome must be written with +, -, 0 or 1; got '" + s + "'");
        }
    }
    return out;
}

std::string bits_string(const std::vector<int> &bits) {
    std::string s;
    for (int b : bits) {
        s += b ? '1' : '0';
    }
    return s;
}

struct Options {
    std::optional<std::size_t> cap;

    std::string verify_what;
    std::size_t verify_r = 1;
    std::size_t verify_n = 9;
    std::vector<Vertex> verify_e1 = {0, 3, 4};
    std::vector<Vertex> verify_e2 = {0, 1, 2};
    Vertex verify_i = 0;
    std::size_t trials = 10;
    std::uint64_t seed = 1;
    std::size_t threads = 0;

    std::string rule_kind;
    std::string state_path;
    std::string example;
    std::optional<Vertex> vertex;
    std::vector<Vertex> box;
    std::string outcome = "+";
    std::optional<Vertex> pivot;
    std::vector<Vertex> controls;
    bool check = false;
    std::string format = "json";

    std::size_t fuzz_cases = 1000;
    std::size_t fuzz_n = 8;
    std::uint64_t fuzz_start = 0;
    bool no_cross_form = false;
    bool invert_minus = false;

    std::int64_t resources_n = 6;

    std::string export_what;
    std::string export_out;
};

std::size_t effective_cap(const Options &o) {
    if (o.cap) {
        if (*o.cap > kHardOracleCeiling) {
            throw InvalidArgument("--cap may not exceed " + std::to_string(kHardOracleCeiling));
        }
        return *o.cap;
    }
    return oracle_cap_from_env();
}

void emit(std::ostream &out, const nlohmann::json &j) {
    out << j.dump(2) << "\n";
}

int cmd_verify(const Options &o, std::ostream &out) {
    const std::size_t cap = effective_cap(o);
    if (auto g = gadget_by_name(o.verify_what)) {
        VerificationReport rep = exhaustive_verify(*g, cap, o.threads);
        nlohmann::json j = to_json(rep);
        nlohmann::json table = nlohmann::json::array();
        for (const PatternCheck &c : rep.checks) {
            if (c.realizable) {
                table.push_back({{"bits", bits_string(c.bits)},
                                 {"probability", c.oracle_probability},
                                 {"byproducts", product_notation(c.byproducts)}});
            }
        }
        j["byproduct_table"] = table;
        emit(out, j);
        return rep.pass ? kExitPass : kExitFailure;
    }
    if (o.verify_what == "identity") {
        IdentityCheck c = verify_identity(Edge::of(o.verify_e1), Edge::of(o.verify_e2), o.verify_i, o.verify_n,
                                          o.trials, o.seed, cap);
        const Edge product[] = {c.product};
        emit(out, {{"schema", kSchema},
                   {"check", "identity"},
                   {"n", o.verify_n},
                   {"e1", o.verify_e1},
                   {"e2", o.verify_e2},
                   {"i", o.verify_i},
                   {"product", product_notation(product)},
                   {"trials", o.trials},
                   {"max_deviation", c.max_deviation},
                   {"pass", c.holds}});
        return c.holds ? kExitPass : kExitFailure;
    }
    if (o.verify_what == "cnz") {
        LogicalCircuit nested = build_cnz(o.verify_r);
        LogicalCircuit layered = layerize(nested);
        const std::size_t N = std::size_t{3} << o.verify_r;
        CircuitCheck a = verify_cnz_circuit(nested, N, o.trials, o.seed, cap, o.threads);
        CircuitCheck b = verify_cnz_circuit(layered, N, o.trials, o.seed + 1, cap, o.threads);
        const bool pass = a.holds && b.holds;
        emit(out, {{"schema", kSchema},
                   {"check", "cnz"},
                   {"r", o.verify_r},
                   {"N", N},
                   {"qubits", nested.num_qubits},
                   {"trials", o.trials},
                   {"max_deviation", std::max(a.max_deviation, b.max_deviation)},
                   {"hadamard_depth", hadamard_depth(layered)},
                   {"counts", {{"CCZ", nested.count(GateKind::CCZ)}, {"H", nested.count(GateKind::H)}}},
                   {"ancillas", nested.ancillas.size()},
                   {"pass", pass}});
        return pass ? kExitPass : kExitFailure;
    }
    throw InvalidArgument("unknown verification target '" + o.verify_what + "'");
}

Hypergraph load_state(const Options &o, std::istream &in) {
    if (!o.example.empty()) {
        if (o.example == "five") {
            return build_bell_teleporter().graph;
        }
        auto g = gadget_by_name(o.example);
        if (!g) {
            throw InvalidArgument("unknown example '" + o.example + "'");
        }
        return g->graph;
    }
    if (o.state_path.empty()) {
        throw InvalidArgument("rule needs --state FILE (or -) or --example NAME");
    }
    nlohmann::json j;
    try {
        if (o.state_path == "-") {
            j = nlohmann::json::parse(in);
        } else {
            std::ifstream f(o.state_path);
            if (!f) {
                throw InvalidArgument("cannot open " + o.state_path);
            }
            j = nlohmann::json::parse(f);
        }
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("state is not valid JSON: ") + e.what());
    }
    if (j.contains("graph")) {
        j = j["graph"];
    }
    return hypergraph_from_json(j);
}

nlohmann::json certificate_json(const Certificate &c) {
    nlohmann::json j{{"ok", c.ok}, {"max_deviation", c.deviation}, {"probability", c.probability}};
    if (!c.detail.empty()) {
        j["detail"] = c.detail;
    }
    return j;
}

Vertex require_vertex(const Options &o) {
    if (!o.vertex) {
        throw InvalidArgument("--vertex is required");
    }
    return *o.vertex;
}

int cmd_rule(const Options &o, std::istream &in, std::ostream &out) {
    const Hypergraph h = load_state(o, in);
    const std::size_t cap = o.check ? effective_cap(o) : kDefaultOracleCap;
    nlohmann::json j{{"schema", kSchema}, {"rule", o.rule_kind}};
    std::optional<Certificate> cert;
    std::string text;

    if (o.rule_kind == "x") {
        std::vector<XOutcome> outcomes = parse_x_outcomes(o.outcome);
        XRewriteResult r;
        if (!o.box.empty()) {
            if (o.box.size() != 3 || outcomes.size() != 3) {
                throw InvalidArgument("--box needs three vertices and a three-symbol --outcome");
            }
            std::array<Vertex, 3> box{o.box[0], o.box[1], o.box[2]};
            std::array<XOutcome, 3> pattern{outcomes[0], outcomes[1], outcomes[2]};
            r = measure_box_x(h, box, pattern, o.pivot);
            if (o.check) {
                cert = certify_box(h, box, pattern, r, cap);
            }
        } else {
            if (outcomes.size() != 1) {
                throw InvalidArgument("--outcome for a single vertex is one of +, -");
            }
            Vertex b = require_vertex(o);
            r = measure_x(h, b, outcomes[0], o.pivot);
            if (o.check) {
                cert = certify_measure_x(h, b, outcomes[0], r, cap);
            }
        }
        j.update(to_json(r));
        j["rule"] = "x";
        j["pivot_label"] = r.vertex_map[r.pivot];
        j["text"] = "H_{" + std::to_string(r.vertex_map[r.pivot]) + "} " + product_notation(r.post.edges(), r.vertex_map);
        text = "post: " + product_notation(r.post.edges(), r.vertex_map) +
               "\npivot: " + std::to_string(r.vertex_map[r.pivot]) + "\nclass: " + to_string(r.outcome_class) +
               "\ncorrections: " + product_notation(r.correction_edges, r.vertex_map) +
               "\nprobability: " + std::to_string(r.probability) + "\n";
    } else if (o.rule_kind == "z") {
        Vertex a = require_vertex(o);
        int outcome = o.outcome == "1" || o.outcome == "-" ? 1 : 0;
        if (o.outcome != "0" && o.outcome != "1" && o.outcome != "+" && o.outcome != "-") {
            throw InvalidArgument("--outcome for a Z measurement is 0 or 1");
        }
        Hypergraph post = measure_z(h, a, outcome);
        VertexMap map;
        for (Vertex v = 0; v < h.num_vertices(); ++v) {
            if (v != a) {
                map.push_back(v);
            }
        }
        j["post"] = to_json(post);
        j["vertex_map"] = map;
        j["probability"] = 0.5;
        j["text"] = product_notation(post.edges(), map);
        text = "post: " + product_notation(post.edges(), map) + "\nprobability: 0.5\n";
        if (o.check) {
            cert = certify_measure_z(h, a, outcome, post, cap);
        }
    } else if (o.rule_kind == "glc") {
        Vertex a = require_vertex(o);
        Hypergraph post = glc(h, a);
        j["post"] = to_json(post);
        j["text"] = product_notation(post.edges());
        text = "post: " + product_notation(post.edges()) + "\n";
        if (o.check) {
            cert = certify_glc(h, a, post, cap);
        }
    } else if (o.rule_kind == "gcnot") {
        Vertex t = require_vertex(o);
        Edge controls = Edge::of(o.controls);
        Hypergraph post = gcnot(h, controls, t);
        j["post"] = to_json(post);
        j["text"] = product_notation(post.edges());
        text = "post: " + product_notation(post.edges()) + "\n";
        if (o.check) {
            cert = certify_gcnot(h, controls, t, post, cap);
        }
    } else {
        throw InvalidArgument("unknown rule '" + o.rule_kind + "'");
    }

    if (cert) {
        j["check"] = certificate_json(*cert);
        text += std::string("check: ") + (cert->ok ? "PASS" : "FAIL") + "\n";
    }
    if (o.format == "text") {
        out << text;
    } else {
        emit(out, j);
    }
    return !cert || cert->ok ? kExitPass : kExitFailure;
}

int cmd_fuzz(const Options &o, std::ostream &out, std::ostream &err) {
    FuzzConfig config;
    config.cases = o.fuzz_cases;
    config.num_vertices = o.fuzz_n;
    config.seed = o.seed;
    config.first_case = o.fuzz_start;
    config.cap = effective_cap(o);
    config.threads = o.threads;
    config.cross_form = !o.no_cross_form;
    config.invert_minus_correction = o.invert_minus;
    FuzzSummary s = run_fuzz(config);
    nlohmann::json j = to_json(s);
    j["cases"] = o.fuzz_cases;
    j["n"] = o.fuzz_n;
    j["seed"] = o.seed;
    if (s.first_failure) {
        std::string repro = "hyperstate fuzz --cases 1 --n " + std::to_string(o.fuzz_n) + " --seed " +
                            std::to_string(o.seed) + " --start " + std::to_string(s.first_failure->case_index);
        if (o.no_cross_form) {
            repro += " --no-cross-form";
        }
        if (o.invert_minus) {
            repro += " --invert-minus-correction";
        }
        j["reproduce"] = repro;
        err << "fuzz failure in check " << s.first_failure->check << "; reproduce with: " << repro << "\n";
    }
    emit(out, j);
    return s.ok() ? kExitPass : kExitFailure;
}

int cmd_resources(const Options &o, std::ostream &out) {
    emit(out, to_json(resources(level_for(o.resources_n))));
    return kExitPass;
}

int cmd_export(const Options &o, std::ostream &out) {
    std::string body;
    if (auto g = gadget_by_name(o.export_what)) {
        if (o.format == "dot") {
            body = to_dot(*g);
        } else if (o.format == "json") {
            body = to_json(*g).dump(2) + "\n";
        } else {
            throw InvalidArgument("export supports --format json or dot");
        }
    } else if (o.export_what == "cnz") {
        LogicalCircuit c = layerize(build_cnz(o.verify_r));
        if (o.format == "dot") {
            body = to_dot(c);
        } else if (o.format == "json") {
            body = to_json(c).dump(2) + "\n";
        } else {
            throw InvalidArgument("export supports --format json or dot");
        }
    } else {
        throw InvalidArgument("unknown export target '" + o.export_what + "'");
    }
    if (o.export_out.empty() || o.export_out == "-") {
        out << body;
    } else {
        std::ofstream f(o.export_out);
        if (!f) {
            throw InvalidArgument("cannot write " + o.export_out);
        }
        f << body;
    }
    return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Hypergraph-state measurement rules, MBQC gadgets and C^NZ circuits", "hyperstate"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--cap", o.cap, "Dense oracle qubit cap (default: HYPERSTATE_ORACLE_CAP or 22, at most 26)");

    CLI::App *verify = app.add_subcommand("verify", "Run an oracle-backed verification");
    verify->add_option("what", o.verify_what, "bell | wire2 | wire3 | ccz-gadget | identity | cnz")->required();
    verify->add_option("--r", o.verify_r, "Recursion level for cnz (N = 3 * 2^r)");
    verify->add_option("--n", o.verify_n, "Register size for identity");
    verify->add_option("--e1", o.verify_e1, "First edge for identity")->delimiter(',');
    verify->add_option("--e2", o.verify_e2, "Second edge for identity")->delimiter(',');
    verify->add_option("--i", o.verify_i, "Shared vertex for identity");
    verify->add_option("--trials", o.trials, "Random input states");
    verify->add_option("--seed", o.seed, "PRNG seed");
    verify->add_option("--threads", o.threads, "Worker threads (0: all cores)");

    CLI::App *rule = app.add_subcommand("rule", "Apply one rewrite rule to a hypergraph state");
    rule->add_option("kind", o.rule_kind, "x | z | glc | gcnot")->required();
    rule->add_option("--state", o.state_path, "Hypergraph JSON file, or - for stdin");
    rule->add_option("--example", o.example, "Built-in state: five | bell | wire2 | wire3 | ccz-gadget");
    rule->add_option("--vertex", o.vertex, "Measured vertex, glc vertex or gcnot target");
    rule->add_option("--box", o.box, "Three box vertices for a joint X measurement")->delimiter(',');
    rule->add_option("--outcome", o.outcome, "+ or - (X), 0 or 1 (Z), or three symbols for a box");
    rule->add_option("--pivot", o.pivot, "Pivot vertex for X measurements");
    rule->add_option("--controls", o.controls, "Control set for gcnot")->delimiter(',');
    rule->add_flag("--check", o.check, "Compare against the dense oracle");
    rule->add_option("--format", o.format, "json | text")->check(CLI::IsMember({"json", "text"}));

    CLI::App *fuzz = app.add_subcommand("fuzz", "Fuzz the rewrite rules against the oracle");
    fuzz->add_option("--cases", o.fuzz_cases, "Number of cases");
    fuzz->add_option("--n", o.fuzz_n, "Vertices per instance");
    fuzz->add_option("--seed", o.seed, "PRNG seed");
    fuzz->add_option("--start", o.fuzz_start, "Index of the first case");
    fuzz->add_option("--threads", o.threads, "Worker threads (0: all cores)");
    fuzz->add_flag("--no-cross-form", o.no_cross_form, "Skip the measure_x_glc versus measure_x comparison");
    fuzz->add_flag("--invert-minus-correction", o.invert_minus, "Negative control: undo the minus correction");

    CLI::App *res = app.add_subcommand("resources", "Resource counts for C^NZ");
    res->add_option("--N", o.resources_n, "Number of logical qubits, 3 * 2^r")->required();

    CLI::App *exp = app.add_subcommand("export", "Write a gadget or circuit as JSON or DOT");
    exp->add_option("--what", o.export_what, "bell | wire2 | wire3 | ccz-gadget | cnz")->required();
    exp->add_option("--format", o.format, "json | dot")->check(CLI::IsMember({"json", "dot"}));
    exp->add_option("--r", o.verify_r, "Recursion level for cnz");
    exp->add_option("--out", o.export_out, "Output file (default stdout)");

    std::vector<const char *> argv{"hyperstate"};
    for (const std::string &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (verify->parsed()) {
            return cmd_verify(o, out);
        }
        if (rule->parsed()) {
            return cmd_rule(o, in, out);
        }
        if (fuzz->parsed()) {
            return cmd_fuzz(o, out, err);
        }
        if (res->parsed()) {
            return cmd_resources(o, out);
        }
        return cmd_export(o, out);
    } catch (const Error &e) {
        if (is_usage_error(e)) {
            err << "hyperstate: " << e.what() << "\n";
            return kExitUsage;
        }
        emit(out, error_json(e.kind(), e.what()));
        return kExitFailure;
    }
}

}  // namespace hyperstate::cli
