#include "ramsey/colouring.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace ramsey {

EdgeColouring::EdgeColouring(int n, int r) : n_(n), r_(r) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("EdgeColouring: order must be in [1, 64]");
    if (r < 2 || r > kMaxColours)
        throw std::invalid_argument("EdgeColouring: colour count must be 2 or 3");
    col_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
}

void EdgeColouring::set_colour(int u, int v, int c) {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("set_colour: bad pair");
    if (c < 0 || c >= r_) throw std::invalid_argument("set_colour: colour out of range");
    col_[pair_rank(u, v)] = static_cast<std::uint8_t>(c);
}

EdgeColouring EdgeColouring::constant(int n, int r, int c) {
    EdgeColouring out(n, r);
    if (c < 0 || c >= r) throw std::invalid_argument("constant: colour out of range");
    for (auto& x : out.col_) x = static_cast<std::uint8_t>(c);
    return out;
}

EdgeColouring EdgeColouring::random(int n, int r, std::uint64_t seed) {
    EdgeColouring out(n, r);
    std::mt19937_64 gen(seed);
    // Bias of the mod-r reduction over a 64-bit draw is below 2^-62.
    for (auto& x : out.col_) x = static_cast<std::uint8_t>(gen() % static_cast<unsigned>(r));
    return out;
}

Graph EdgeColouring::colour_class(int i) const {
    if (i < 0 || i >= r_) throw std::out_of_range("colour_class: colour index out of range");
    Graph g(n_);
    for (int v = 1; v < n_; ++v)
        for (int u = 0; u < v; ++u)
            if (col_[pair_rank(u, v)] == i) g.add_edge(u, v);
    return g;
}

EdgeColouring EdgeColouring::restricted(std::span<const int> S) const {
    std::vector<int> verts(S.begin(), S.end());
    std::sort(verts.begin(), verts.end());
    EdgeColouring out(static_cast<int>(verts.size()), r_);
    for (std::size_t j = 1; j < verts.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            out.set_colour(static_cast<int>(i), static_cast<int>(j),
                           colour(verts[i], verts[j]));
    return out;
}

EdgeColouring EdgeColouring::restricted(std::uint64_t mask) const {
    std::vector<int> verts;
    for (int v = 0; v < n_; ++v)
        if (mask & bit(v)) verts.push_back(v);
    return restricted(verts);
}

EdgeColouring EdgeColouring::with_swapped_colours(int a, int b) const {
    EdgeColouring out = *this;
    for (auto& x : out.col_) {
        if (x == a)
            x = static_cast<std::uint8_t>(b);
        else if (x == b)
            x = static_cast<std::uint8_t>(a);
    }
    return out;
}

EdgeColouring parse_colouring(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    auto next_data_line = [&]() -> bool {
        while (std::getline(in, line)) {
            std::size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (line[i] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_data_line()) throw ColouringFormatError("colouring: missing dimension line");
    std::istringstream head(line);
    long n = 0, r = 0;
    if (!(head >> n >> r)) throw ColouringFormatError("colouring: bad dimension line");
    if (n < 1 || n > kMaxVertices) throw ColouringFormatError("colouring: order out of range");
    if (r < 2 || r > kMaxColours) throw ColouringFormatError("colouring: colour count out of range");

    EdgeColouring c(static_cast<int>(n), static_cast<int>(r));
    for (int v = 1; v < n; ++v) {
        if (!next_data_line())
            throw ColouringFormatError("colouring: missing entries for vertex " + std::to_string(v));
        std::istringstream row(line);
        for (int u = 0; u < v; ++u) {
            long val;
            if (!(row >> val))
                throw ColouringFormatError("colouring: missing entries for vertex " +
                                           std::to_string(v));
            if (val < 0 || val >= r)
                throw ColouringFormatError("colouring: colour index " + std::to_string(val) +
                                           " out of range");
            c.set_colour(u, v, static_cast<int>(val));
        }
        long extra;
        if (row >> extra) throw ColouringFormatError("colouring: too many entries on a row");
    }
    return c;
}

std::string write_colouring(const EdgeColouring& c) { return write_colouring(c, {}); }

std::string write_colouring(const EdgeColouring& c,
                            const std::vector<std::string>& header_comments) {
    std::ostringstream out;
    for (const auto& h : header_comments) out << "# " << h << "\n";
    out << c.order() << " " << c.colours() << "\n";
    for (int v = 1; v < c.order(); ++v) {
        for (int u = 0; u < v; ++u) out << (u ? " " : "") << c.colour(u, v);
        out << "\n";
    }
    return out.str();
}

}  // namespace ramsey
