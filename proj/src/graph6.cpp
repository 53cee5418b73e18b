#include "forcinglab/graph6.hpp"

#include <fstream>

#include "forcinglab/errors.hpp"

namespace forcinglab {

namespace {

constexpr int kBias = 63;
constexpr char kMaxDataChar = 126;  // '~', also the multi-byte size marker

std::size_t body_length(int n) {
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0 ? 1 : 0)) / 2;
    return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    if (!line.empty() && line.back() == '\n') line.remove_suffix(1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) throw ParseError("empty graph6 line", 0);

    const char head = line[0];
    if (head == kMaxDataChar) throw UnsupportedSize("graph6 orders above 62 are not supported");
    if (head < kBias || head > kMaxDataChar) throw ParseError("malformed size byte", 0);
    const int n = head - kBias;

    const std::size_t need = body_length(n);
    if (line.size() - 1 < need) throw ParseError("truncated graph6 body", line.size());
    if (line.size() - 1 > need) throw ParseError("trailing garbage after graph6 body", 1 + need);

    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    std::size_t bit = 0;
    auto bit_at = [&](std::size_t k) {
        const std::size_t pos = 1 + k / 6;
        const int value = line[pos] - kBias;
        return (value >> (5 - static_cast<int>(k % 6))) & 1;
    };
    for (std::size_t pos = 1; pos <= need; ++pos) {
        if (line[pos] < kBias || line[pos] > kMaxDataChar) throw ParseError("malformed body byte", pos);
    }
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (bit_at(bit)) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    for (; bit < need * 6; ++bit) {
        if (bit_at(bit)) throw ParseError("nonzero padding bit", 1 + bit / 6);
    }
    return Graph::from_adjacency(std::move(adj));
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder) throw UnsupportedSize("graph6 orders above 62 are not supported");
    std::string out(1 + body_length(n), static_cast<char>(kBias));
    out[0] = static_cast<char>(kBias + n);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.adjacent(i, j)) {
                out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - bit % 6)));
            }
        }
    }
    return out;
}

std::optional<Graph> Graph6Reader::next() {
    std::string text;
    while (std::getline(in_, text)) {
        ++line_;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        if (text.empty()) continue;
        if (text.starts_with(">>graph6<<")) text.erase(0, 10);
        if (text.empty()) continue;
        try {
            return parse_graph6(text);
        } catch (const Error& e) {
            if (strict_) throw;
            diagnostics_.push_back({line_, e.what()});
        }
    }
    return std::nullopt;
}

Graph6File ingest_graph6(const std::string& path, bool strict) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph6 corpus '" + path + "'");
    Graph6File out;
    Graph6Reader reader(in, strict);
    while (auto g = reader.next()) {
        out.lines.push_back(write_graph6(*g));
        out.graphs.push_back(std::move(*g));
    }
    out.diagnostics = reader.diagnostics();
    return out;
}

}  // namespace forcinglab
