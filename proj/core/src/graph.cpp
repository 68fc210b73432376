#include "ramsey/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramsey {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("Graph: order must be in [0, 64]");
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.adj_[v] = full_mask(n) & ~bit(v);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::cycle(int n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph Graph::complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

void Graph::add_edge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("add_edge: bad endpoints");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 1; v < n_; ++v)
        for (int u = 0; u < v; ++u)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(std::uint64_t mask) const {
    std::vector<int> keep;
    for (int v = 0; v < n_; ++v)
        if (mask & bit(v)) keep.push_back(v);
    Graph g(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (has_edge(keep[i], keep[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

Graph Graph::relabelled(std::span<const int> perm) const {
    Graph g(n_);
    for (int v = 1; v < n_; ++v)
        for (int u = 0; u < v; ++u)
            if (has_edge(u, v)) g.add_edge(perm[u], perm[v]);
    return g;
}

Graph Graph::with_vertex(std::uint64_t nbrs) const {
    Graph g(n_ + 1);
    g.adj_ = adj_;
    for (int v = 0; v < n_; ++v)
        if (nbrs & bit(v)) g.add_edge(v, n_);
    return g;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int v = 0; v < n_; ++v) g.adj_[v] = full_mask(n_) & ~adj_[v] & ~bit(v);
    return g;
}

bool Graph::operator==(const Graph& other) const {
    if (n_ != other.n_) return false;
    return std::equal(adj_.begin(), adj_.begin() + n_, other.adj_.begin());
}

bool is_connected(const Graph& g) {
    int n = g.order();
    if (n <= 1) return true;
    std::uint64_t seen = bit(0), frontier = bit(0);
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.neighbours(v);
        }
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen == full_mask(n);
}

bool has_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.neighbours(v) == 0) return true;
    return false;
}

namespace {

void clique_search(const Graph& g, std::uint64_t cand, int size, int& best) {
    if (size + std::popcount(cand) <= best) return;
    if (!cand) {
        best = std::max(best, size);
        return;
    }
    // Branch on candidate vertices, shrinking the candidate set as we go.
    while (cand) {
        if (size + std::popcount(cand) <= best) return;
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        clique_search(g, cand & g.neighbours(v), size + 1, best);
    }
}

struct ColourState {
    const Graph* g;
    std::vector<int> order;          // vertices, high degree first
    std::vector<std::uint64_t> classes;
    int k = 0;
    std::uint64_t nodes = 0, max_nodes = 0;
    bool aborted = false;

    bool assign(std::size_t idx) {
        if (++nodes > max_nodes) {
            aborted = true;
            return false;
        }
        if (idx == order.size()) return true;
        int v = order[idx];
        std::uint64_t nb = g->neighbours(v);
        bool used_fresh = false;
        for (auto& cls : classes) {
            bool fresh = cls == 0;
            if (fresh && used_fresh) break;  // symmetry: one fresh class per level
            if (fresh) used_fresh = true;
            if (cls & nb) continue;
            cls |= bit(v);
            if (assign(idx + 1)) return true;
            cls &= ~bit(v);
            if (aborted) return false;
        }
        return false;
    }
};

bool k_colourable(const Graph& g, int k, std::uint64_t max_nodes, bool& aborted) {
    ColourState st;
    st.g = &g;
    st.k = k;
    st.max_nodes = max_nodes;
    st.classes.assign(k, 0);
    st.order.resize(g.order());
    for (int v = 0; v < g.order(); ++v) st.order[v] = v;
    std::stable_sort(st.order.begin(), st.order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    bool ok = st.assign(0);
    aborted = st.aborted;
    return ok;
}

}  // namespace

int clique_number(const Graph& g) {
    if (g.order() == 0) return 0;
    int best = 0;
    clique_search(g, full_mask(g.order()), 0, best);
    return best;
}

std::optional<int> chromatic_number_bounded(const Graph& g, std::uint64_t max_nodes) {
    if (g.order() == 0) return 0;
    int lo = clique_number(g);
    for (int k = std::max(lo, 1); k <= g.order(); ++k) {
        bool aborted = false;
        if (k_colourable(g, k, max_nodes, aborted)) return k;
        if (aborted) return std::nullopt;
    }
    return g.order();
}

int chromatic_number(const Graph& g) {
    if (g.order() < 1) throw std::invalid_argument("chromatic_number: empty graph");
    auto r = chromatic_number_bounded(g, ~std::uint64_t{0});
    return *r;
}

}  // namespace ramsey
