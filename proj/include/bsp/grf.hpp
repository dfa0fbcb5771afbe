#ifndef BSP_GRF_HPP
#define BSP_GRF_HPP

#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"

// GRF: '#' comment lines, a line "n m", then m lines "u v" with u < v.
namespace bsp {

struct GrfResult {
    Graph graph;
    std::vector<std::string> warnings;
};

namespace detail {

inline bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    std::size_t i = tok[0] == '-' ? 1 : 0;
    if (i == tok.size()) return false;
    for (std::size_t k = i; k < tok.size(); ++k)
        if (tok[k] < '0' || tok[k] > '9') return false;
    try {
        out = std::stoll(tok);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

}  // namespace detail

inline GrfResult parse_grf(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    GrfResult r;
    long long n = -1, m = -1;
    long long seen = 0;
    int line_no = 0;
    GraphBuilder builder(0);
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty() || toks[0][0] == '#') continue;
        const std::string where = "line " + std::to_string(line_no) + ": ";
        long long x = 0, y = 0;
        if (toks.size() != 2 || !detail::parse_int(toks[0], x) || !detail::parse_int(toks[1], y))
            throw InputError(where + "expected two integers");
        if (n < 0) {
            if (x < 0 || y < 0) throw InputError(where + "negative size");
            if (x > 1000000) throw InputError(where + "vertex count too large");
            n = x;
            m = y;
            builder = GraphBuilder(static_cast<int>(n));
            continue;
        }
        if (x == y) throw InputError(where + "self-loop at vertex " + std::to_string(x));
        if (x < 0 || y < 0 || x >= n || y >= n)
            throw InputError(where + "edge (" + std::to_string(x) + "," + std::to_string(y) + ") out of range");
        if (x > y) r.warnings.push_back(where + "edge written as v u");
        ++seen;
        if (!builder.add_edge(static_cast<int>(x), static_cast<int>(y)))
            r.warnings.push_back(where + "duplicate edge (" + std::to_string(std::min(x, y)) + "," +
                                 std::to_string(std::max(x, y)) + ") ignored");
    }
    if (n < 0) throw InputError("missing header line \"n m\"");
    if (seen != m)
        throw InputError("header announces " + std::to_string(m) + " edges, found " + std::to_string(seen));
    r.graph = std::move(builder).build();
    return r;
}

inline std::string write_grf(const Graph& g, const std::vector<std::string>& comments = {}) {
    std::ostringstream os;
    for (const auto& c : comments) os << "# " << c << '\n';
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

// sidecar: one "index label" line per vertex
inline std::string write_labels(const Graph& g) {
    std::ostringstream os;
    for (int v = 0; v < g.vertex_count(); ++v) os << v << ' ' << g.label(v) << '\n';
    return os.str();
}

inline std::vector<std::string> parse_labels(const std::string& text, int n) {
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    std::vector<bool> set(static_cast<std::size_t>(n), false);
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string idx, label;
        if (!(ls >> idx)) continue;
        long long v = 0;
        if (!detail::parse_int(idx, v) || !(ls >> label) || v < 0 || v >= n)
            throw InputError("labels line " + std::to_string(line_no) + ": expected \"index label\"");
        if (set[v]) throw InputError("labels line " + std::to_string(line_no) + ": vertex labelled twice");
        labels[v] = label;
        set[v] = true;
    }
    for (int v = 0; v < n; ++v)
        if (!set[v]) throw InputError("vertex " + std::to_string(v) + " has no label");
    return labels;
}

}  // namespace bsp

#endif
