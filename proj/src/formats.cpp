#include "treeirr/formats.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace treeirr {

Graph parse_edgelist(const std::string& text) {
    std::vector<Edge> edges;
    int max_label = -1;
    int min_label = std::numeric_limits<int>::max();
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u)) continue;  // blank or comment-only line
        if (!(ls >> v))
            throw ParseError("edge list line " + std::to_string(lineno) +
                             ": expected two integers");
        std::string rest;
        if (ls >> rest)
            throw ParseError("edge list line " + std::to_string(lineno) +
                             ": trailing token '" + rest + "'");
        if (u < 0 || v < 0)
            throw ParseError("edge list line " + std::to_string(lineno) +
                             ": negative vertex label");
        max_label = std::max(max_label, static_cast<int>(std::max(u, v)));
        min_label = std::min(min_label, static_cast<int>(std::min(u, v)));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    // 1-based inputs (smallest label 1) are shifted to the internal 0-based
    // labels at this boundary
    if (!edges.empty() && min_label == 1) {
        for (auto& [u, v] : edges) {
            --u;
            --v;
        }
        --max_label;
    }
    try {
        return Graph(max_label + 1, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid edge list: ") + e.what());
    }
}

std::string write_edgelist(const Graph& g) {
    std::string out;
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

namespace {

constexpr const char* kGraph6Header = ">>graph6<<";

// Appends the 18-bit big-endian groups used by graph6 size encoding.
void append_bits(std::string& out, long long value, int bits) {
    for (int shift = bits - 6; shift >= 0; shift -= 6)
        out += static_cast<char>(((value >> shift) & 0x3f) + 63);
}

}  // namespace

std::string write_graph6(const Graph& g) {
    long long n = g.n();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += '~';
        append_bits(out, n, 18);
    } else {
        throw ParseError("graph too large for this graph6 writer");
    }
    // Upper triangle, column-major: bit (i,j) for j = 1..n-1, i = 0..j-1.
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out += static_cast<char>(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out += static_cast<char>((acc << (6 - nbits)) + 63);
    return out;
}

Graph parse_graph6(const std::string& line) {
    std::string s = line;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.rfind(kGraph6Header, 0) == 0) s.erase(0, std::string(kGraph6Header).size());
    if (s.empty()) throw ParseError("empty graph6 string");
    for (char c : s)
        if (c < 63 || c > 126)
            throw ParseError("malformed graph6 character (code " +
                             std::to_string(static_cast<int>(c)) + ")");
    size_t pos = 0;
    long long n;
    if (s[pos] != '~') {
        n = s[pos] - 63;
        ++pos;
    } else {
        ++pos;
        if (pos + 3 <= s.size() && s[pos] != '~') {
            n = 0;
            for (int k = 0; k < 3; ++k) n = (n << 6) | (s[pos + k] - 63);
            pos += 3;
        } else {
            throw ParseError("graph6 size field too large for this parser");
        }
    }
    long long nbits = n * (n - 1) / 2;
    long long need = (nbits + 5) / 6;
    if (static_cast<long long>(s.size()) - static_cast<long long>(pos) != need)
        throw ParseError("graph6 length mismatch: expected " + std::to_string(need) +
                         " data characters, got " + std::to_string(s.size() - pos));
    std::vector<Edge> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int c = s[pos + bit / 6] - 63;
            if ((c >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    // trailing padding bits must be zero
    for (long long b = nbits; b < need * 6; ++b) {
        int c = s[pos + b / 6] - 63;
        if ((c >> (5 - b % 6)) & 1) throw ParseError("graph6 padding bits must be zero");
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::vector<Graph> parse_graph6_lines(const std::string& text) {
    std::vector<Graph> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

}  // namespace treeirr
