#include "forcinglab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ostream>
#include <thread>

#include "forcinglab/decomposition.hpp"
#include "forcinglab/enumerate.hpp"
#include "forcinglab/errors.hpp"
#include "forcinglab/recognizers.hpp"
#include "forcinglab/solvers.hpp"
#include "forcinglab/structure_sets.hpp"

namespace forcinglab {

namespace {

struct TheoremName {
    Theorem theorem;
    std::string_view id;
};

constexpr TheoremName kNames[] = {
    {Theorem::ZC1, "ZC1"},
    {Theorem::Z2, "Z2"},
    {Theorem::ZC2, "ZC2"},
    {Theorem::ZC_N1, "ZC_N1"},
    {Theorem::Z_GE_N2, "Z_GE_N2"},
    {Theorem::Z_N2, "Z_N2"},
    {Theorem::HMR2_EQUIV, "HMR2_EQUIV"},
    {Theorem::ZC_N2, "ZC_N2"},
    {Theorem::LEMMA_M, "LEMMA_M"},
    {Theorem::LEMMA_LEAF, "LEMMA_LEAF"},
    {Theorem::LEMMA_RESTRAINED, "LEMMA_RESTRAINED"},
    {Theorem::TREE_FORMULA, "TREE_FORMULA"},
    {Theorem::BLOCK_BOUND, "BLOCK_BOUND"},
    {Theorem::OBS_DELTA, "OBS_DELTA"},
};

constexpr SolveOptions kOracle{false};

enum class Source { AllGraphs, Connected, Trees };

Source generator_for(Theorem t) {
    switch (t) {
        case Theorem::Z_GE_N2:
        case Theorem::Z_N2:
        case Theorem::HMR2_EQUIV: return Source::AllGraphs;
        case Theorem::TREE_FORMULA: return Source::Trees;
        default: return Source::Connected;
    }
}

nlohmann::json label(const RecognitionResult& r) { return std::string(family_name(r.family)); }

// Compares an oracle predicate with a recognizer and re-validates its certificate.
Verdict equivalence(bool oracle_holds, int oracle_value, const Graph& g, const RecognitionResult& r) {
    Verdict v;
    v.applicable = true;
    v.oracle = oracle_value;
    v.recognizer = label(r);
    v.agree = oracle_holds == static_cast<bool>(r);
    if (r) {
        if (auto problem = validate_certificate(g, r)) {
            v.agree = false;
            v.recognizer = std::string(family_name(r.family)) + " (invalid certificate: " + *problem + ")";
        }
    }
    return v;
}

Verdict violations(std::uint64_t bad) {
    Verdict v;
    v.applicable = true;
    v.oracle = bad;
    v.recognizer = 0;
    v.agree = bad == 0;
    return v;
}

bool is_biconnected(const Graph& g) { return g.order() >= 3 && is_connected(g) && vertex_connectivity(g) >= 2; }

}  // namespace

std::string_view theorem_id(Theorem t) {
    for (const auto& [theorem, id] : kNames) {
        if (theorem == t) return id;
    }
    return "?";
}

std::optional<Theorem> parse_theorem(std::string_view id) {
    for (const auto& [theorem, name] : kNames) {
        if (name == id) return theorem;
    }
    return std::nullopt;
}

const std::vector<Theorem>& all_theorems() {
    static const std::vector<Theorem> list = [] {
        std::vector<Theorem> out;
        for (const auto& entry : kNames) out.push_back(entry.theorem);
        return out;
    }();
    return list;
}

Verdict check_graph(Theorem t, const Graph& g) {
    const int n = g.order();
    if (n == 0) return {};
    const bool connected = is_connected(g);
    if (generator_for(t) != Source::AllGraphs && !connected) return {};

    switch (t) {
        case Theorem::ZC1: {
            const int zc = connected_forcing_number(g, kOracle).value;
            return equivalence(zc == 1, zc, g, recognize_path(g));
        }
        case Theorem::Z2: {
            const int z = zero_forcing_number(g, kOracle).value;
            return equivalence(z == 2, z, g, recognize_two_parallel_paths(g));
        }
        case Theorem::ZC2: {
            const int zc = connected_forcing_number(g, kOracle).value;
            return equivalence(zc == 2, zc, g, recognize_zc2(g));
        }
        case Theorem::ZC_N1: {
            const int zc = connected_forcing_number(g, kOracle).value;
            return equivalence(zc == n - 1, zc, g, recognize_zc_n_minus_1(g));
        }
        case Theorem::ZC_N2: {
            const int zc = connected_forcing_number(g, kOracle).value;
            return equivalence(zc == n - 2, zc, g, recognize_zc_n_minus_2(g));
        }
        case Theorem::Z_GE_N2: {
            const int z = zero_forcing_number(g, kOracle).value;
            const bool free = recognize_z_ge_n_minus_2(g);
            Verdict v;
            v.applicable = true;
            v.oracle = z;
            v.recognizer = free ? "F-free" : "contains F";
            v.agree = free == (z >= n - 2);
            return v;
        }
        case Theorem::Z_N2: {
            const int z = zero_forcing_number(g, kOracle).value;
            return equivalence(z == n - 2, z, g, recognize_z_n_minus_2(g));
        }
        case Theorem::HMR2_EQUIV: {
            const int z = zero_forcing_number(g, kOracle).value;
            Verdict v = equivalence(z >= n - 2, z, g, recognize_hmr2_form(g));
            if (v.agree && recognize_z_ge_n_minus_2(g) != (z >= n - 2)) {
                v.agree = false;
                v.recognizer = "forbidden-subgraph test disagrees";
            }
            return v;
        }
        case Theorem::LEMMA_M: {
            if (is_path_graph(g)) return {};
            const MandatoryVertices contract = mandatory_vertices(g);
            std::uint64_t bad = 0;
            for (VertexSet r : all_minimum_connected_forcing_sets(g)) {
                if (!contract.admits(r)) ++bad;
            }
            return violations(bad);
        }
        case Theorem::LEMMA_LEAF: {
            if (is_path_graph(g)) return {};
            const int zc = connected_forcing_number(g, kOracle).value;
            const int leaves = lower_bounds(g).leaf_bound;
            Verdict v;
            v.applicable = true;
            v.oracle = zc;
            v.recognizer = leaves;
            v.agree = zc >= leaves;
            return v;
        }
        case Theorem::LEMMA_RESTRAINED: {
            if (!is_biconnected(g) || is_complete(g)) return {};
            int worst = 0;
            for (Vertex x : g.vertices()) worst = std::max(worst, restrained_zc(g, VertexSet::single(x)).value);
            Verdict v;
            v.applicable = true;
            v.oracle = worst;
            v.recognizer = n - 2;
            v.agree = worst <= n - 2;
            return v;
        }
        case Theorem::TREE_FORMULA: {
            if (!is_tree(g) || is_path_graph(g)) return {};
            const int zc = connected_forcing_number(g, kOracle).value;
            const int formula = tree_connected_forcing(g).value;
            Verdict v;
            v.applicable = true;
            v.oracle = zc;
            v.recognizer = formula;
            v.agree = zc == formula;
            return v;
        }
        case Theorem::BLOCK_BOUND: {
            if (is_path_graph(g)) return {};
            const Bounds bounds = lower_bounds(g);
            std::uint64_t bad = 0;
            for (VertexSet r : all_minimum_connected_forcing_sets(g)) {
                const bool ok = std::all_of(bounds.block_bound.begin(), bounds.block_bound.end(),
                                            [&](const BlockQuota& q) { return (r & q.block).size() >= q.quota; });
                if (!ok || r.size() < bounds.zc_lower) ++bad;
            }
            return violations(bad);
        }
        case Theorem::OBS_DELTA: {
            std::uint64_t bad = 0;
            for (VertexSet r : all_minimum_zero_forcing_sets(g)) bad += has_vertex_with_all_but_one_neighbor(g, r) ? 0 : 1;
            for (VertexSet r : all_minimum_connected_forcing_sets(g)) {
                bad += has_vertex_with_all_but_one_neighbor(g, r) ? 0 : 1;
            }
            return violations(bad);
        }
    }
    return {};
}

int default_worker_count() {
    if (const char* env = std::getenv("FORCINGLAB_WORKERS")) {
        char* end = nullptr;
        const long k = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && k > 0) return static_cast<int>(std::min<long>(k, 256));
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::uint64_t VerificationReport::disagreements() const {
    std::uint64_t total = 0;
    for (const auto& o : orders) total += o.disagreements;
    return total;
}

std::uint64_t VerificationReport::tested() const {
    std::uint64_t total = 0;
    for (const auto& o : orders) total += o.tested;
    return total;
}

bool VerificationReport::passed() const { return disagreements() == 0 && !(strict && !parse_errors.empty()); }

VerificationReport run_campaign(const Campaign& c) {
    const auto start = std::chrono::steady_clock::now();
    if (c.min_n < 1 || c.max_n < c.min_n) throw PreconditionError("run_campaign: empty order range");

    VerificationReport report;
    report.theorem = std::string(theorem_id(c.theorem));
    report.strict = c.strict;
    report.workers = c.workers > 0 ? c.workers : default_worker_count();

    std::vector<Graph> graphs;
    if (c.corpus) {
        Graph6File file = ingest_graph6(*c.corpus, false);
        report.parse_errors = std::move(file.diagnostics);
        for (Graph& g : file.graphs) {
            if (g.order() < c.min_n || g.order() > c.max_n) {
                ++report.skipped;
                continue;
            }
            if (g.order() > kSolverBudgetOrder) {
                throw UnsupportedSize("run_campaign: corpus graph of order " + std::to_string(g.order()) +
                                      " exceeds the solver budget of " + std::to_string(kSolverBudgetOrder));
            }
            graphs.push_back(std::move(g));
        }
    } else {
        const Source source = generator_for(c.theorem);
        for (int n = c.min_n; n <= c.max_n; ++n) {
            std::vector<Graph> batch;
            if (source == Source::Trees) batch = enumerate_trees(n);
            else if (source == Source::Connected) batch = enumerate_connected(n);
            else batch = enumerate_graphs(n);
            for (Graph& g : batch) graphs.push_back(std::move(g));
        }
    }

    std::vector<Verdict> verdicts(graphs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < graphs.size(); i = next++) verdicts[i] = check_graph(c.theorem, graphs[i]);
    };
    const int pool = std::max(1, std::min<int>(report.workers, static_cast<int>(graphs.size())));
    std::vector<std::thread> threads;
    for (int w = 1; w < pool; ++w) threads.emplace_back(work);
    work();
    for (auto& t : threads) t.join();

    for (int n = c.min_n; n <= c.max_n; ++n) report.orders.push_back({n, 0, 0});
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Verdict& v = verdicts[i];
        if (!v.applicable) {
            if (c.corpus) ++report.skipped;
            continue;
        }
        OrderStats& stats = report.orders[static_cast<std::size_t>(graphs[i].order() - c.min_n)];
        ++stats.tested;
        if (!v.agree) {
            ++stats.disagreements;
            ++report.counterexample_total;
            if (report.counterexamples.size() < kCounterexampleCap) {
                report.counterexamples.push_back({write_graph6(graphs[i]), v.oracle, v.recognizer});
            }
        }
        if (c.collect_rows) report.rows.push_back({graphs[i].order(), write_graph6(graphs[i]), v.oracle, v.recognizer, v.agree});
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["theorem"] = r.theorem;
    j["orders"] = nlohmann::json::array();
    for (const auto& o : r.orders) j["orders"].push_back({{"n", o.n}, {"tested", o.tested}, {"disagreements", o.disagreements}});
    j["counterexamples"] = nlohmann::json::array();
    for (const auto& c : r.counterexamples) {
        j["counterexamples"].push_back({{"graph6", c.graph6}, {"oracle", c.oracle}, {"recognizer", c.recognizer}});
    }
    j["counterexample_total"] = r.counterexample_total;
    j["parse_errors"] = nlohmann::json::array();
    for (const auto& d : r.parse_errors) j["parse_errors"].push_back({{"line", d.line}, {"message", d.message}});
    j["skipped"] = r.skipped;
    j["workers"] = r.workers;
    j["passed"] = r.passed();
    j["wall_seconds"] = r.wall_seconds;
    return j;
}

void write_csv(std::ostream& out, const VerificationReport& r) {
    auto cell = [](const nlohmann::json& v) {
        std::string s = v.is_string() ? v.get<std::string>() : v.dump();
        if (s.find_first_of(",\"") == std::string::npos) return s;
        std::string quoted = "\"";
        for (char ch : s) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        return quoted + "\"";
    };
    out << "n,graph6,oracle,recognizer,agree\n";
    for (const auto& row : r.rows) {
        out << row.n << ',' << cell(row.graph6) << ',' << cell(row.oracle) << ',' << cell(row.recognizer) << ','
            << (row.agree ? "true" : "false") << '\n';
    }
}

}  // namespace forcinglab
