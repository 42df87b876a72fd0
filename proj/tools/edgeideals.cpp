// Command-line front end: graded Betti numbers and projective dimensions
// of edge ideals of finite simple graphs, with verification suites.
//
// Exit codes: 0 success, 1 usage error, 2 input parse failure,
// 3 enumeration ceiling exceeded, 4 method incompatible with the input,
// 5 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "edgeideals/edgeideals.hpp"
#include "edgeideals/verify.hpp"

namespace ei = edgeideals;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitCeiling = 3;
constexpr int kExitMethod = 4;
constexpr int kExitVerify = 5;

struct InputOptions {
    std::string file;
    std::string family;
};

struct Loaded {
    ei::Graph graph;
    std::optional<ei::FamilySpec> family;
};

Loaded load_input(const InputOptions& in) {
    if (in.file.empty() == in.family.empty())
        throw ei::ParseError("exactly one of --input and --family is required");
    Loaded out;
    if (!in.family.empty()) {
        out.family = ei::parse_family(in.family);
        out.graph = ei::family_graph(*out.family);
    } else {
        std::ifstream f(in.file);
        if (!f) throw ei::ParseError("cannot open `" + in.file + "`");
        out.graph = ei::parse_graph_stream(f);
    }
    return out;
}

struct MethodChoice {
    bool closed_form = false;
    ei::Engine engine = ei::Engine::auto_select;
};

MethodChoice resolve_method(const std::string& name, const Loaded& in) {
    MethodChoice m;
    if (name == "closed-form") {
        if (!in.family) {
            std::cerr << "error: --method closed-form requires --family\n";
            std::exit(kExitMethod);
        }
        m.closed_form = true;
        return m;
    }
    if (name == "auto") {
        if (in.family) m.closed_form = true;
        else if (ei::is_forest(in.graph)) m.engine = ei::Engine::forest;
        else m.engine = ei::Engine::hochster;
        return m;
    }
    if (name == "hochster") m.engine = ei::Engine::hochster;
    else if (name == "dual-links") m.engine = ei::Engine::dual_links;
    else if (name == "koszul") m.engine = ei::Engine::koszul;
    else if (name == "forest") {
        if (!ei::is_forest(in.graph)) {
            std::cerr << "error: --method forest requires a forest input\n";
            std::exit(kExitMethod);
        }
        m.engine = ei::Engine::forest;
    } else {
        std::cerr << "error: unknown method `" << name << "`\n";
        std::exit(kExitMethod);
    }
    return m;
}

ei::BettiTable compute_table(const Loaded& in, const MethodChoice& m, ei::FieldSpec field,
                             int ceiling) {
    if (m.closed_form) return ei::family_betti(*in.family);
    switch (m.engine) {
    case ei::Engine::dual_links: return ei::betti_dual_links(in.graph, field, ceiling);
    case ei::Engine::koszul:
        return ei::to_quotient_convention(ei::betti_koszul(in.graph, field, ceiling));
    case ei::Engine::forest: return ei::betti_forest(in.graph);
    default: return ei::betti_hochster(in.graph, field, ceiling);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graded Betti numbers and projective dimensions of edge ideals"};
    app.require_subcommand(1);

    InputOptions input;
    std::string field_flag = "0";
    std::string method = "auto";
    std::string format = "text";
    int ceiling = ei::kDefaultCeiling;

    auto add_input_opts = [&](CLI::App* cmd, bool with_method = true) {
        cmd->add_option("--input", input.file, "graph file (`n <count>` header, `u v` lines)");
        cmd->add_option("--family", input.family,
                        "family string: complete:4, bipartite:2,3, multipartite:2,2,3, "
                        "star:4, cycle:6, line:5");
        cmd->add_option("--field", field_flag, "coefficient field: 0 (Q), 2, or p:<prime>");
        cmd->add_option("--ceiling", ceiling, "full-table enumeration ceiling (default 22)");
        if (with_method)
            cmd->add_option("--method", method,
                            "auto | hochster | dual-links | koszul | forest | closed-form");
    };

    auto* cmd_betti = app.add_subcommand("betti", "print the graded Betti table");
    add_input_opts(cmd_betti);
    cmd_betti->add_option("--format", format, "text | json");

    auto* cmd_pd = app.add_subcommand("pd", "print the projective dimension");
    add_input_opts(cmd_pd);

    auto* cmd_matchings = app.add_subcommand("matchings", "count induced i-matchings");
    int matching_size = 1;
    add_input_opts(cmd_matchings, false);
    cmd_matchings->add_option("--i", matching_size, "matching size (default 1)");

    auto* cmd_rp2 = app.add_subcommand(
        "rp2", "characteristic-dependent Betti number of the 31-vertex fixture");
    cmd_rp2->add_option("--field", field_flag, "coefficient field: 0 (Q), 2, or p:<prime>");

    auto* cmd_cellular = app.add_subcommand("cellular", "cellular resolution checks");
    cmd_cellular->require_subcommand(1);
    auto* cmd_check_c4 = cmd_cellular->add_subcommand(
        "check-c4", "exhaustive minimal-cellular search for the 4-cycle");
    cmd_check_c4->add_option("--field", field_flag, "coefficient field");
    auto* cmd_taylor = cmd_cellular->add_subcommand("taylor", "acyclicity of the Taylor complex");
    cmd_taylor->add_option("--input,--graph", input.file, "graph file");
    cmd_taylor->add_option("--family", input.family, "family string");
    cmd_taylor->add_option("--field", field_flag, "coefficient field");

    auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
    std::string suite = "all";
    std::uint64_t seed = ei::verify::kDefaultSeed;
    int max_n = 0;
    cmd_verify->add_option("--suite", suite,
                           "all | c4-resolution | families | forest | engines | matchings | "
                           "pd-laws | rp2 | cellular | duality | monotonicity");
    cmd_verify->add_option("--seed", seed, "corpus seed (printed in every report)");
    cmd_verify->add_option("--max-n", max_n, "accepted for compatibility; suites pin their sizes");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_betti->parsed()) {
            Loaded in = load_input(input);
            ei::FieldSpec field = ei::parse_field_flag(field_flag);
            MethodChoice m = resolve_method(method, in);
            ei::BettiTable t = compute_table(in, m, field, ceiling);
            if (format == "json")
                std::cout << ei::table_to_json(t, field).dump() << "\n";
            else
                std::cout << ei::render_table_text(t);
        } else if (cmd_pd->parsed()) {
            Loaded in = load_input(input);
            ei::FieldSpec field = ei::parse_field_flag(field_flag);
            MethodChoice m = resolve_method(method, in);
            ei::PdResult r;
            if (m.closed_form) {
                r = ei::family_betti(*in.family).pd_result();
                r.value = ei::pd_closed_form(*in.family); // same value, stated form
            } else {
                r = ei::projective_dimension(in.graph, field, m.engine, ceiling);
            }
            std::cout << r.value << "  (beta_{" << r.cert_i << "," << r.cert_d << "} != 0)\n";
        } else if (cmd_matchings->parsed()) {
            Loaded in = load_input(input);
            std::cout << ei::count_induced_matchings(in.graph, matching_size) << "\n";
        } else if (cmd_rp2->parsed()) {
            ei::FieldSpec field = ei::parse_field_flag(field_flag);
            ei::Graph g = ei::rp2_barycentric_graph();
            long long v = ei::betti_hochster_entry(g, 29, g.vertex_set(), field);
            std::cout << "vertices = " << g.n << "\n";
            std::cout << "beta_29_31 = " << v << "  (field " << ei::field_name(field) << ")\n";
        } else if (cmd_check_c4->parsed()) {
            ei::FieldSpec field = ei::parse_field_flag(field_flag);
            ei::C4SearchResult r = ei::c4_minimal_cellular_search(field);
            nlohmann::json j;
            j["field"] = ei::field_name(field);
            j["no_minimal_cellular"] = r.no_minimal_cellular;
            nlohmann::json assignments = nlohmann::json::array();
            for (const auto& a : r.assignments) {
                nlohmann::json e;
                e["generator_of_vertex"] = a.generator_of_vertex;
                e["acyclic"] = a.check.acyclic;
                e["witnesses"] = a.check.witnesses;
                assignments.push_back(std::move(e));
            }
            j["assignments"] = std::move(assignments);
            std::cout << j.dump(2) << "\n";
        } else if (cmd_taylor->parsed()) {
            Loaded in = load_input(input);
            ei::FieldSpec field = ei::parse_field_flag(field_flag);
            ei::CellularCheck chk = ei::is_cellular_resolution(ei::taylor_complex(in.graph), field);
            nlohmann::json j;
            j["field"] = ei::field_name(field);
            j["acyclic"] = chk.acyclic;
            j["witnesses"] = chk.witnesses;
            std::cout << j.dump(2) << "\n";
        } else if (cmd_verify->parsed()) {
            bool ok = true;
            bool known = suite == "all";
            for (const auto& name : ei::verify::suite_names()) known = known || name == suite;
            if (!known) {
                std::cerr << "error: unknown suite `" << suite << "`\n";
                return 1;
            }
            std::cout << "verification corpus seed: " << seed << "\n";
            for (const auto& c : ei::verify::run_suite(suite, seed)) {
                std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << ": " << c.detail << "\n";
                ok = ok && c.pass;
            }
            if (!ok) return kExitVerify;
        }
    } catch (const ei::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ei::CeilingExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCeiling;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return 0;
}
