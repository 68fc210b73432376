#include "ramsey/canonical.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace ramsey {

namespace {

// Ordered-partition refinement search for a canonical labelling.
// Cells are refined to equitability; non-singleton cells are split by
// individualizing each member in turn. Discovered automorphisms prune
// sibling branches that provably repeat earlier subtrees.
struct CanonSearch {
    const Graph* g;
    int n;
    std::string best_key;
    std::vector<int> best_perm;                 // position -> vertex
    std::vector<std::vector<int>> automorphisms;

    static std::string key_under(const Graph& g, const std::vector<int>& perm) {
        int n = g.order();
        std::string key;
        key.reserve(1 + (n * (n - 1) / 2 + 7) / 8);
        key.push_back(static_cast<char>(n));
        int acc = 0, have = 0;
        for (int v = 1; v < n; ++v) {
            for (int u = 0; u < v; ++u) {
                acc = (acc << 1) | (g.has_edge(perm[u], perm[v]) ? 1 : 0);
                if (++have == 8) {
                    key.push_back(static_cast<char>(acc));
                    acc = have = 0;
                }
            }
        }
        if (have) key.push_back(static_cast<char>(acc << (8 - have)));
        return key;
    }

    void refine(std::vector<std::vector<int>>& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t ci = 0; ci < cells.size() && !changed; ++ci) {
                if (cells[ci].size() < 2) continue;
                for (std::size_t dj = 0; dj < cells.size(); ++dj) {
                    std::uint64_t dmask = 0;
                    for (int v : cells[dj]) dmask |= bit(v);
                    auto count = [&](int v) { return std::popcount(g->neighbours(v) & dmask); };
                    auto& cell = cells[ci];
                    bool uniform = true;
                    for (std::size_t i = 1; i < cell.size(); ++i)
                        if (count(cell[i]) != count(cell[0])) uniform = false;
                    if (uniform) continue;
                    std::stable_sort(cell.begin(), cell.end(),
                                     [&](int a, int b) { return count(a) < count(b); });
                    std::vector<std::vector<int>> split;
                    for (int v : cell) {
                        if (split.empty() || count(split.back()[0]) != count(v))
                            split.push_back({v});
                        else
                            split.back().push_back(v);
                    }
                    cells.erase(cells.begin() + ci);
                    cells.insert(cells.begin() + ci, split.begin(), split.end());
                    changed = true;
                    break;
                }
            }
        }
    }

    void record_leaf(const std::vector<int>& perm) {
        std::string key = key_under(*g, perm);
        if (best_key.empty() || key < best_key) {
            best_key = key;
            best_perm = perm;
            automorphisms.clear();
        } else if (key == best_key) {
            // perm and best_perm induce the same labelled graph, so
            // best_perm o perm^{-1} ... expressed on vertices:
            std::vector<int> pos(n);
            for (int i = 0; i < n; ++i) pos[perm[i]] = i;
            std::vector<int> sigma(n);
            for (int v = 0; v < n; ++v) sigma[v] = best_perm[pos[v]];
            automorphisms.push_back(std::move(sigma));
        }
    }

    void search(std::vector<std::vector<int>> cells, std::vector<int>& base) {
        refine(cells);
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                target = i;
                break;
            }
        if (target == cells.size()) {
            std::vector<int> perm;
            perm.reserve(n);
            for (auto& c : cells) perm.push_back(c[0]);
            record_leaf(perm);
            return;
        }
        std::vector<int> members = cells[target];
        std::vector<int> tried;
        for (int x : members) {
            bool skip = false;
            for (const auto& sigma : automorphisms) {
                bool fixes_base = true;
                for (int b : base)
                    if (sigma[b] != b) {
                        fixes_base = false;
                        break;
                    }
                if (!fixes_base) continue;
                for (int y : tried)
                    if (sigma[y] == x) {
                        skip = true;
                        break;
                    }
                if (skip) break;
            }
            tried.push_back(x);
            if (skip) continue;
            std::vector<std::vector<int>> next = cells;
            std::vector<int> rest;
            for (int v : members)
                if (v != x) rest.push_back(v);
            next[target] = {x};
            next.insert(next.begin() + target + 1, rest);
            base.push_back(x);
            search(std::move(next), base);
            base.pop_back();
        }
    }
};

CanonSearch run_canon(const Graph& g) {
    if (g.order() > kMaxCanonicalVertices)
        throw std::invalid_argument("canonical_form: graph above 12 vertices");
    CanonSearch cs;
    cs.g = &g;
    cs.n = g.order();
    if (cs.n == 0) {
        cs.best_key = std::string(1, '\0');
        return cs;
    }
    std::vector<int> all(cs.n);
    for (int v = 0; v < cs.n; ++v) all[v] = v;
    std::vector<int> base;
    cs.search({all}, base);
    return cs;
}

}  // namespace

std::string canonical_form(const Graph& g) { return run_canon(g).best_key; }

std::vector<int> canonical_labelling(const Graph& g) { return run_canon(g).best_perm; }

namespace {

Graph delete_vertex(const Graph& g, int w) {
    return g.induced(full_mask(g.order()) & ~bit(w));
}

bool passes_filter(const Graph& g, EnumFilter f) {
    switch (f) {
        case EnumFilter::all: return true;
        case EnumFilter::connected: return is_connected(g);
        case EnumFilter::no_isolated: return !has_isolated_vertex(g);
    }
    return true;
}

// Canonical augmentation: a child created by appending vertex n-1 is kept
// only when deleting the new vertex reaches the same parent class as
// deleting the child's canonical last vertex, so each class is produced
// from exactly one parent; same-parent duplicates fall to a local key set.
std::vector<Graph> build_level(const std::vector<Graph>& parents) {
    std::vector<std::pair<std::string, Graph>> out;
    for (const Graph& parent : parents) {
        const std::string parent_key = canonical_form(parent);
        std::set<std::string> seen;
        int np = parent.order();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << np); ++mask) {
            Graph child = parent.with_vertex(mask);
            int w = canonical_labelling(child)[child.order() - 1];
            if (w != child.order() - 1 &&
                canonical_form(delete_vertex(child, w)) != parent_key)
                continue;
            std::string key = canonical_form(child);
            if (seen.insert(key).second) out.emplace_back(std::move(key), child);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> graphs;
    graphs.reserve(out.size());
    for (auto& [k, g] : out) graphs.push_back(g);
    return graphs;
}

}  // namespace

const std::vector<Graph>& enumerate_graphs(int n, EnumFilter filter) {
    if (n < 1 || n > 8) throw std::invalid_argument("enumerate_graphs: n must be in [1, 8]");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto key = std::make_pair(n, static_cast<int>(filter));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    // All-classes levels are built once and reused by every filter.
    std::vector<std::vector<Graph>> levels(n + 1);
    levels[1] = {Graph(1)};
    for (int k = 1; k <= n; ++k) {
        auto ck = std::make_pair(k, static_cast<int>(EnumFilter::all));
        if (auto hit = cache.find(ck); hit != cache.end()) {
            levels[k] = hit->second;
            continue;
        }
        if (k > 1) levels[k] = build_level(levels[k - 1]);
        cache[ck] = levels[k];
    }

    std::vector<Graph> filtered;
    for (const Graph& g : levels[n])
        if (passes_filter(g, filter)) filtered.push_back(g);
    return cache[key] = std::move(filtered);
}

}  // namespace ramsey
