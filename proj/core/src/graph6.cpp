#include "ramsey/graph6.hpp"

namespace ramsey {

namespace {
constexpr int kLo = 63;   // '?'
constexpr int kHi = 126;  // '~'
}  // namespace

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw Graph6Error(Graph6ErrorKind::bad_header, "graph6: empty string");

    std::size_t pos = 0;
    long n;
    unsigned char c0 = text[pos];
    if (c0 == kHi) {
        // '~' introduces the 18-bit (or 36-bit) order form.
        if (text.size() < 2 || static_cast<unsigned char>(text[1]) == kHi)
            throw Graph6Error(Graph6ErrorKind::too_large, "graph6: order beyond 64 vertices");
        if (text.size() < 4)
            throw Graph6Error(Graph6ErrorKind::bad_header, "graph6: truncated order field");
        n = 0;
        for (pos = 1; pos <= 3; ++pos) {
            unsigned char c = text[pos];
            if (c < kLo || c > kHi)
                throw Graph6Error(Graph6ErrorKind::bad_header, "graph6: bad order byte");
            n = (n << 6) | (c - kLo);
        }
    } else {
        if (c0 < kLo || c0 > kHi)
            throw Graph6Error(Graph6ErrorKind::bad_header, "graph6: bad leading byte");
        n = c0 - kLo;
        pos = 1;
    }
    if (n > kMaxVertices)
        throw Graph6Error(Graph6ErrorKind::too_large,
                          "graph6: " + std::to_string(n) + " vertices exceeds engine cap 64");

    Graph g(static_cast<int>(n));
    long nbits = n * (n - 1) / 2;
    long expect_bytes = (nbits + 5) / 6;
    if (static_cast<long>(text.size() - pos) < expect_bytes)
        throw Graph6Error(Graph6ErrorKind::truncated_payload, "graph6: truncated bit payload");
    if (static_cast<long>(text.size() - pos) > expect_bytes)
        throw Graph6Error(Graph6ErrorKind::bad_payload, "graph6: trailing characters");

    int acc = 0, have = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (have == 0) {
                unsigned char c = text[pos++];
                if (c < kLo || c > kHi)
                    throw Graph6Error(Graph6ErrorKind::bad_payload, "graph6: bad payload byte");
                acc = c - kLo;
                have = 6;
            }
            --have;
            if ((acc >> have) & 1) g.add_edge(u, v);
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    int n = g.order();
    if (n > kMaxVertices) throw Graph6Error(Graph6ErrorKind::too_large, "graph6: order above 64");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kLo));
    } else {
        out.push_back(static_cast<char>(kHi));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kLo));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kLo));
        out.push_back(static_cast<char>((n & 0x3f) + kLo));
    }
    int acc = 0, have = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++have == 6) {
                out.push_back(static_cast<char>(acc + kLo));
                acc = 0;
                have = 0;
            }
        }
    }
    if (have > 0) out.push_back(static_cast<char>((acc << (6 - have)) + kLo));
    return out;
}

}  // namespace ramsey
