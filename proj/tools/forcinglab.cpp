#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "forcinglab/decomposition.hpp"
#include "forcinglab/enumerate.hpp"
#include "forcinglab/errors.hpp"
#include "forcinglab/graph6.hpp"
#include "forcinglab/recognizers.hpp"
#include "forcinglab/solvers.hpp"
#include "forcinglab/structure_sets.hpp"
#include "forcinglab/verify.hpp"

using namespace forcinglab;
using nlohmann::json;

namespace {

std::vector<Graph> read_input(const std::string& arg) {
    if (arg != "-") return {parse_graph6(arg)};
    std::vector<Graph> out;
    Graph6Reader reader(std::cin, true);
    while (auto g = reader.next()) out.push_back(std::move(*g));
    return out;
}

std::string set_text(VertexSet s) {
    std::ostringstream os;
    os << s;
    return os.str();
}

json set_json(VertexSet s) { return s.to_vector(); }

void analyze(const Graph& g) {
    std::cout << "graph6: " << write_graph6(g) << "\n";
    std::cout << "n: " << g.order() << "\nm: " << g.size() << "\ndegrees:";
    for (int d : g.degree_sequence()) std::cout << ' ' << d;
    std::cout << "\n";
    if (g.order() == 0 || !is_connected(g)) {
        std::cout << "components: " << components(g).size() << "\nconnected: no\n";
        return;
    }
    std::cout << "connected: yes\nkappa: " << vertex_connectivity(g) << "\n";
    const BlockDecomposition bd = block_decomposition(g);
    std::cout << "blocks:";
    for (VertexSet b : bd.blocks) std::cout << ' ' << set_text(b);
    std::cout << "\ncut vertices: " << set_text(bd.cut_vertices) << "\n";
    const StructuralSets sets = structural_sets(g);
    std::cout << "leaves: " << set_text(pendant_structure(g).leaves) << "\n";
    std::cout << "R1: " << set_text(sets.r1) << "\nR2: " << set_text(sets.r2) << "\nR3: " << set_text(sets.r3) << "\n";
    std::cout << "M: " << set_text(sets.m) << (sets.is_path ? " (path: containment does not apply)" : "") << "\n";
}

VertexSet parse_vertex_list(const std::string& text, int n) {
    VertexSet s;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const int v = std::stoi(item);
        if (v < 0 || v >= n) throw PreconditionError("vertex " + item + " out of range");
        s.insert(v);
    }
    return s;
}

json certificate_json(const RecognitionResult& r) {
    json c;
    c["variant"] = r.certificate.variant;
    if (r.certificate.forcing_set) c["forcing_set"] = set_json(*r.certificate.forcing_set);
    if (!r.certificate.paths.empty()) c["paths"] = r.certificate.paths;
    json parts = json::object();
    for (const auto& [name, set] : r.certificate.parts) parts[name] = set_json(set);
    if (!parts.empty()) c["parts"] = parts;
    return c;
}

std::vector<RecognitionResult> all_recognitions(const Graph& g) {
    std::vector<RecognitionResult> out;
    const bool connected = g.order() > 0 && is_connected(g);
    auto add = [&](RecognitionResult r) {
        if (r) out.push_back(std::move(r));
    };
    add(recognize_path(g));
    add(recognize_two_parallel_paths(g));
    if (connected) add(recognize_zc2(g));
    add(recognize_zc_n_minus_1(g));
    add(recognize_z_n_minus_2(g));
    add(recognize_hmr2_form(g));
    if (connected) add(recognize_zc_n_minus_2(g));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zero forcing and connected forcing toolkit"};
    app.require_subcommand(1);

    std::string input;
    auto* analyze_cmd = app.add_subcommand("analyze", "Print structural data of a graph");
    analyze_cmd->add_option("graph", input, "graph6 string, or - to read lines from stdin")->required();

    bool want_z = false, want_zc = false;
    std::string restrain;
    auto* solve_cmd = app.add_subcommand("solve", "Compute Z or Z_c with a witness");
    solve_cmd->add_option("graph", input, "graph6 string, or - to read lines from stdin")->required();
    auto* zc_flag = solve_cmd->add_flag("--zc", want_zc, "Connected forcing number (default)");
    solve_cmd->add_flag("--z", want_z, "Zero forcing number")->excludes(zc_flag);
    solve_cmd->add_option("--restrain", restrain, "Comma-separated vertices the set must contain");

    bool as_json = false;
    auto* recognize_cmd = app.add_subcommand("recognize", "Print every family the graph belongs to");
    recognize_cmd->add_option("graph", input, "graph6 string, or - to read lines from stdin")->required();
    recognize_cmd->add_flag("--json", as_json, "Emit JSON");

    std::string theorem, corpus, report_path, csv_path;
    int min_n = 1, max_n = 1, workers = 0;
    bool strict = false;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification campaign");
    std::vector<std::string> ids;
    for (Theorem t : all_theorems()) ids.emplace_back(theorem_id(t));
    verify_cmd->add_option("--theorem", theorem, "Theorem id")->required()->check(CLI::IsMember(ids));
    verify_cmd->add_option("--min-n", min_n, "Smallest order")->required();
    verify_cmd->add_option("--max-n", max_n, "Largest order")->required();
    verify_cmd->add_option("--corpus", corpus, "graph6 file instead of the builtin generator");
    verify_cmd->add_option("--workers", workers, "Worker threads (default: FORCINGLAB_WORKERS or all cores)");
    verify_cmd->add_flag("--strict", strict, "Fail on corpus parse errors");
    verify_cmd->add_option("--report", report_path, "Write the JSON report here instead of stdout");
    verify_cmd->add_option("--csv", csv_path, "Also write one CSV row per tested graph");

    int order = 0;
    bool connected_only = false;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "Emit one graph6 line per isomorphism class");
    enumerate_cmd->add_option("--n", order, "Order")->required();
    enumerate_cmd->add_flag("--connected-only", connected_only, "Only connected graphs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze_cmd) {
            for (const Graph& g : read_input(input)) analyze(g);
        } else if (*solve_cmd) {
            for (const Graph& g : read_input(input)) {
                const VertexSet s = parse_vertex_list(restrain, g.order());
                SolveResult r;
                if (want_z) {
                    r = s.empty() ? zero_forcing_number(g) : restrained_z(g, s);
                } else {
                    r = s.empty() ? connected_forcing_number(g) : restrained_zc(g, s);
                }
                std::cout << (want_z ? "Z" : "Z_c") << " = " << r.value << "  witness " << set_text(r.witness) << "\n";
            }
        } else if (*recognize_cmd) {
            for (const Graph& g : read_input(input)) {
                const auto results = all_recognitions(g);
                if (as_json) {
                    json j;
                    j["graph6"] = write_graph6(g);
                    j["families"] = json::array();
                    for (const auto& r : results) {
                        j["families"].push_back({{"label", family_name(r.family)}, {"certificate", certificate_json(r)}});
                    }
                    std::cout << j.dump() << "\n";
                    continue;
                }
                std::cout << write_graph6(g) << ":";
                if (results.empty()) std::cout << " None";
                for (const auto& r : results) std::cout << ' ' << family_name(r.family);
                std::cout << "\n";
                for (const auto& r : results) std::cout << "  " << family_name(r.family) << ' ' << certificate_json(r).dump() << "\n";
            }
        } else if (*verify_cmd) {
            Campaign c;
            c.theorem = *parse_theorem(theorem);
            c.min_n = min_n;
            c.max_n = max_n;
            if (!corpus.empty()) c.corpus = corpus;
            c.workers = workers;
            c.strict = strict;
            c.collect_rows = !csv_path.empty();
            const VerificationReport report = run_campaign(c);
            const std::string text = to_json(report).dump(2) + "\n";
            if (report_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream(report_path) << text;
            }
            if (!csv_path.empty()) {
                std::ofstream csv(csv_path);
                write_csv(csv, report);
            }
            for (const auto& d : report.parse_errors) std::cerr << "line " << d.line << ": " << d.message << "\n";
            std::cerr << report.theorem << ": " << report.tested() << " tested, " << report.disagreements()
                      << " disagreements, " << report.wall_seconds << " s\n";
            return report.passed() ? 0 : 1;
        } else if (*enumerate_cmd) {
            const std::vector<Graph> graphs = connected_only ? enumerate_connected(order) : enumerate_graphs(order);
            for (const Graph& g : graphs) std::cout << write_graph6(g) << "\n";
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
