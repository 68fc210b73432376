#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Colour convention used throughout: matches the red/blue(/green) prose of
/// every construction and extraction step.
inline constexpr int kRed = 0;
inline constexpr int kBlue = 1;
inline constexpr int kGreen = 2;

inline constexpr int kMaxColours = 3;

class ColouringFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An r-colouring of the edges of K_N (r = 2 or 3), stored as a flat
/// upper-triangular array in colexicographic pair order:
/// {0,1},{0,2},{1,2},{0,3},...
class EdgeColouring {
public:
    EdgeColouring(int n, int r);

    static constexpr int pair_rank(int u, int v) {
        if (u > v) { int t = u; u = v; v = t; }
        return v * (v - 1) / 2 + u;
    }

    int order() const { return n_; }
    int colours() const { return r_; }
    int pair_count() const { return n_ * (n_ - 1) / 2; }

    int colour(int u, int v) const { return col_[pair_rank(u, v)]; }
    void set_colour(int u, int v, int c);

    /// All pairs the same colour.
    static EdgeColouring constant(int n, int r, int c);

    /// Independent uniform colour per pair, drawn from std::mt19937_64
    /// seeded with `seed`, one draw per pair in colex order, reduced mod r.
    /// Identical (n, r, seed) give identical colourings on every platform.
    static EdgeColouring random(int n, int r, std::uint64_t seed);

    /// Graph on N vertices whose edges are exactly the colour-i pairs.
    Graph colour_class(int i) const;

    /// Induced sub-colouring on the vertex subset S (relabelled in
    /// increasing order of the original indices).
    EdgeColouring restricted(std::span<const int> S) const;
    EdgeColouring restricted(std::uint64_t mask) const;

    /// Colouring with colours a and b renamed into each other.
    EdgeColouring with_swapped_colours(int a, int b) const;

    bool operator==(const EdgeColouring&) const = default;

private:
    int n_;
    int r_;
    std::vector<std::uint8_t> col_;
};

/// Text format: line 1 "N r"; then N-1 lines, line i holding the i colours
/// of pairs {0,i},...,{i-1,i}. Lines starting with '#' are comments.
EdgeColouring parse_colouring(std::string_view text);
std::string write_colouring(const EdgeColouring& c);
std::string write_colouring(const EdgeColouring& c, const std::vector<std::string>& header_comments);

}  // namespace ramsey
