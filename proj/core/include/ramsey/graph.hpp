#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

/// Hard cap of the dense engine: one adjacency row per 64-bit word.
inline constexpr int kMaxVertices = 64;

inline constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

/// Mask with bits 0..n-1 set.
inline constexpr std::uint64_t full_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Simple undirected graph on n <= 64 labelled vertices, stored as a
/// symmetric bit matrix (no loops). Immutable in spirit: all library
/// operations construct new graphs rather than mutating shared ones.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph complete(int n);
    static Graph empty(int n) { return Graph(n); }
    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete_bipartite(int a, int b);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

    int order() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    /// Neighbourhood of v as a bit mask.
    std::uint64_t neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return std::popcount(adj_[v]); }

    std::vector<std::pair<int, int>> edges() const;

    /// Graph on the vertices selected by `mask`, relabelled 0..k-1 in
    /// increasing original order.
    Graph induced(std::uint64_t mask) const;

    /// New graph with vertex i renamed perm[i].
    Graph relabelled(std::span<const int> perm) const;

    /// Graph on n+1 vertices; the new vertex is adjacent to `nbrs`.
    Graph with_vertex(std::uint64_t nbrs) const;

    Graph complement() const;

    bool operator==(const Graph& other) const;

private:
    int n_ = 0;
    std::array<std::uint64_t, kMaxVertices> adj_{};
};

bool is_connected(const Graph& g);
bool has_isolated_vertex(const Graph& g);

/// Size of a maximum clique (exact, bitset branch and bound).
int clique_number(const Graph& g);

/// Exact chromatic number. The bounded variant gives up after
/// `max_nodes` branch-and-bound nodes and returns nullopt.
int chromatic_number(const Graph& g);
std::optional<int> chromatic_number_bounded(const Graph& g, std::uint64_t max_nodes);

}  // namespace ramsey
