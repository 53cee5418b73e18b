#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "forcinglab/graph.hpp"
#include "forcinglab/graph6.hpp"

namespace forcinglab {

enum class Theorem {
    ZC1,
    Z2,
    ZC2,
    ZC_N1,
    Z_GE_N2,
    Z_N2,
    HMR2_EQUIV,
    ZC_N2,
    LEMMA_M,
    LEMMA_LEAF,
    LEMMA_RESTRAINED,
    TREE_FORMULA,
    BLOCK_BOUND,
    OBS_DELTA,
};

std::string_view theorem_id(Theorem t);
std::optional<Theorem> parse_theorem(std::string_view id);
const std::vector<Theorem>& all_theorems();

/// Largest order accepted from a corpus; the oracles are exhaustive.
inline constexpr int kSolverBudgetOrder = 16;

struct Campaign {
    Theorem theorem = Theorem::ZC1;
    int min_n = 1;
    int max_n = 1;
    std::optional<std::string> corpus;  // graph6 file; builtin generator if empty
    int workers = 0;                    // 0: default_worker_count()
    bool strict = false;                // parse errors fail the campaign
    bool collect_rows = false;          // keep one row per tested graph
};

struct OrderStats {
    int n = 0;
    std::uint64_t tested = 0;
    std::uint64_t disagreements = 0;
};

/// Oracle and recognizer answers are integers or strings.
struct Counterexample {
    std::string graph6;
    nlohmann::json oracle;
    nlohmann::json recognizer;
};

struct GraphRow {
    int n = 0;
    std::string graph6;
    nlohmann::json oracle;
    nlohmann::json recognizer;
    bool agree = true;
};

struct VerificationReport {
    std::string theorem;
    std::vector<OrderStats> orders;
    std::vector<Counterexample> counterexamples;  // first kCounterexampleCap
    std::uint64_t counterexample_total = 0;
    std::vector<Graph6Diagnostic> parse_errors;
    std::uint64_t skipped = 0;  // corpus graphs outside the order range or the theorem's class
    int workers = 1;
    double wall_seconds = 0;
    std::vector<GraphRow> rows;
    bool strict = false;

    std::uint64_t disagreements() const;
    std::uint64_t tested() const;
    bool passed() const;
};

inline constexpr std::size_t kCounterexampleCap = 100;

/// Outcome of one theorem on one graph.
struct Verdict {
    bool applicable = false;
    bool agree = true;
    nlohmann::json oracle;
    nlohmann::json recognizer;
};

Verdict check_graph(Theorem t, const Graph& g);

/// FORCINGLAB_WORKERS if set to a positive integer, else hardware concurrency.
int default_worker_count();

/// Throws UnsupportedSize when the builtin generator cannot reach the range
/// or a corpus graph exceeds kSolverBudgetOrder, Error on unreadable corpus.
VerificationReport run_campaign(const Campaign& c);

nlohmann::json to_json(const VerificationReport& r);
void write_csv(std::ostream& out, const VerificationReport& r);

}  // namespace forcinglab
