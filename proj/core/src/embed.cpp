#include "ramsey/embed.hpp"

namespace ramsey {

bool is_valid_embedding(const Graph& host, const Graph& pattern, const Embedding& e) {
    int p = pattern.order();
    if (static_cast<int>(e.map.size()) != p) return false;
    std::uint64_t used = 0;
    for (int v : e.map) {
        if (v < 0 || v >= host.order() || (used & bit(v))) return false;
        used |= bit(v);
    }
    for (auto [a, b] : pattern.edges())
        if (!host.has_edge(e.map[a], e.map[b])) return false;
    return true;
}

namespace {

// Pattern vertices are assigned in index order so the first embedding found
// is the lexicographically least map.
bool extend(const Graph& host, const Graph& pattern, std::uint64_t allowed,
            std::vector<int>& map, int i, std::uint64_t used) {
    int p = pattern.order();
    if (i == p) return true;
    std::uint64_t cand = allowed & ~used;
    std::uint64_t back = pattern.neighbours(i) & (full_mask(i));
    while (back) {
        int j = std::countr_zero(back);
        back &= back - 1;
        cand &= host.neighbours(map[j]);
    }
    int need = std::popcount(pattern.neighbours(i));
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        if (std::popcount(host.neighbours(v) & allowed) < need) continue;
        map[i] = v;
        if (extend(host, pattern, allowed, map, i + 1, used | bit(v))) return true;
    }
    map[i] = -1;
    return false;
}

}  // namespace

std::optional<Embedding> find_embedding(const Graph& host, const Graph& pattern,
                                        std::uint64_t allowed) {
    allowed &= full_mask(host.order());
    int p = pattern.order();
    if (std::popcount(allowed) < p) return std::nullopt;
    std::vector<int> map(p, -1);
    if (!extend(host, pattern, allowed, map, 0, 0)) return std::nullopt;
    return Embedding{std::move(map)};
}

std::optional<Embedding> find_embedding(const Graph& host, const Graph& pattern) {
    return find_embedding(host, pattern, full_mask(host.order()));
}

}  // namespace ramsey
