#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "forcinglab/graph.hpp"

namespace forcinglab {

/// Largest order representable with a single graph6 size byte.
inline constexpr int kGraph6MaxOrder = 62;

/// Decodes one graph6 line (no trailing newline; a single trailing '\n' or
/// "\r\n" is tolerated). Throws ParseError naming the byte offset.
Graph parse_graph6(std::string_view line);

/// Throws UnsupportedSize for order > 62.
std::string write_graph6(const Graph& g);

struct Graph6Diagnostic {
    std::size_t line;  // 1-based
    std::string message;
};

/// Lazily decodes a newline-separated graph6 stream. Blank lines and the
/// optional ">>graph6<<" header are skipped. Malformed lines are recorded
/// as diagnostics and skipped (non-strict) or rethrown (strict).
class Graph6Reader {
public:
    explicit Graph6Reader(std::istream& in, bool strict = false) : in_(in), strict_(strict) {}

    std::optional<Graph> next();
    /// Line number of the graph most recently returned by next().
    std::size_t line_number() const { return line_; }
    const std::vector<Graph6Diagnostic>& diagnostics() const { return diagnostics_; }

private:
    std::istream& in_;
    bool strict_;
    std::size_t line_ = 0;
    std::vector<Graph6Diagnostic> diagnostics_;
};

/// Reads a whole graph6 file. Throws Error if the file cannot be opened.
struct Graph6File {
    std::vector<Graph> graphs;
    std::vector<std::string> lines;  // original text of each decoded graph
    std::vector<Graph6Diagnostic> diagnostics;
};
Graph6File ingest_graph6(const std::string& path, bool strict = false);

}  // namespace forcinglab
