#include "ramsey/lower_bounds.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "ramsey/canonical.hpp"
#include "ramsey/engine.hpp"

namespace ramsey {

bool verify_no_mono(const EdgeColouring& c, const Graph& g) {
    return !find_mono_copy(c, g).has_value();
}

std::optional<EdgeColouring> random_biclique_witness(int t, int N, std::uint64_t seed,
                                                     int max_tries) {
    if (t < 1 || N < 1) throw std::invalid_argument("random_biclique_witness: need t, N >= 1");
    Graph pattern = Graph::complete_bipartite(t, t);
    std::mt19937_64 sub(seed);
    for (int k = 0; k < max_tries; ++k) {
        EdgeColouring c = EdgeColouring::random(N, 2, sub());
        if (verify_no_mono(c, pattern)) return c;
    }
    return std::nullopt;
}

namespace {

// Clique-specialized walk: the number of monochromatic K_t's through one
// pair is cheap to maintain, so moves can be scored exactly.
std::optional<EdgeColouring> clique_witness_walk(int t, int N, std::uint64_t seed,
                                                 std::uint64_t max_flips) {
    std::mt19937_64 gen(seed);
    Graph pattern = Graph::complete(t);
    if (N < t) return EdgeColouring::constant(N, 2, 0);

    auto mono_after = [&](const EdgeColouring& c, const std::vector<int>& subset, int u, int v,
                          int flipped_colour) {
        // Is the subset monochromatic if pair (u,v) had flipped_colour?
        int col = -1;
        for (std::size_t i = 0; i < subset.size(); ++i)
            for (std::size_t j = i + 1; j < subset.size(); ++j) {
                int a = subset[i], b = subset[j];
                int cc = (a == u && b == v) || (a == v && b == u) ? flipped_colour
                                                                  : c.colour(a, b);
                if (col < 0)
                    col = cc;
                else if (cc != col)
                    return false;
            }
        return true;
    };

    std::vector<std::vector<int>> subsets;  // all t-subsets, by index
    {
        std::vector<int> sel(t);
        for (int i = 0; i < t; ++i) sel[i] = i;
        for (;;) {
            subsets.push_back(sel);
            int i = t - 1;
            while (i >= 0 && sel[i] == N - t + i) --i;
            if (i < 0) break;
            ++sel[i];
            for (int j = i + 1; j < t; ++j) sel[j] = sel[j - 1] + 1;
        }
    }
    std::vector<std::vector<int>> through_pair(EdgeColouring::pair_rank(N - 2, N - 1) + 1);
    for (std::size_t s = 0; s < subsets.size(); ++s)
        for (std::size_t i = 0; i < subsets[s].size(); ++i)
            for (std::size_t j = i + 1; j < subsets[s].size(); ++j)
                through_pair[EdgeColouring::pair_rank(subsets[s][i], subsets[s][j])].push_back(
                    static_cast<int>(s));

    constexpr std::uint64_t kRestart = 200'000;
    std::uint64_t flips = 0;
    while (flips < max_flips) {
        EdgeColouring c = EdgeColouring::random(N, 2, gen());
        auto is_mono = [&](int s) {
            const auto& sub = subsets[s];
            int col = c.colour(sub[0], sub[1]);
            for (std::size_t i = 0; i < sub.size(); ++i)
                for (std::size_t j = i + 1; j < sub.size(); ++j)
                    if (c.colour(sub[i], sub[j]) != col) return false;
            return true;
        };
        std::vector<int> violating;
        for (std::size_t s = 0; s < subsets.size(); ++s)
            if (is_mono(static_cast<int>(s))) violating.push_back(static_cast<int>(s));

        for (std::uint64_t step = 0; step < kRestart && flips < max_flips; ++step, ++flips) {
            if (violating.empty()) {
                if (verify_no_mono(c, pattern)) return c;
                break;  // bookkeeping drifted (should not happen); restart
            }
            int s = violating[gen() % violating.size()];
            const auto& sub = subsets[s];
            // Score every pair of the violating clique by the change in the
            // number of monochromatic cliques its flip causes.
            int best_u = -1, best_v = -1, best_delta = 1 << 30;
            bool noise = (gen() % 100) < 15;
            std::vector<std::pair<int, int>> cand;
            for (std::size_t i = 0; i < sub.size(); ++i)
                for (std::size_t j = i + 1; j < sub.size(); ++j) cand.emplace_back(sub[i], sub[j]);
            if (noise) {
                auto [u, v] = cand[gen() % cand.size()];
                best_u = u;
                best_v = v;
            } else {
                for (auto [u, v] : cand) {
                    int flipped = 1 - c.colour(u, v);
                    int delta = 0;
                    for (int si : through_pair[EdgeColouring::pair_rank(u, v)]) {
                        bool before = is_mono(si);
                        bool after = mono_after(c, subsets[si], u, v, flipped);
                        delta += static_cast<int>(after) - static_cast<int>(before);
                    }
                    if (delta < best_delta) {
                        best_delta = delta;
                        best_u = u;
                        best_v = v;
                    }
                }
            }
            int flipped = 1 - c.colour(best_u, best_v);
            c.set_colour(best_u, best_v, flipped);
            // Update the violating list over the affected subsets.
            for (int si : through_pair[EdgeColouring::pair_rank(best_u, best_v)]) {
                bool now = is_mono(si);
                auto it = std::find(violating.begin(), violating.end(), si);
                if (now && it == violating.end()) violating.push_back(si);
                if (!now && it != violating.end()) violating.erase(it);
            }
        }
    }
    return std::nullopt;
}

// General min-conflicts walk: repair the first monochromatic copy found.
std::optional<EdgeColouring> general_witness_walk(const Graph& pattern, int N,
                                                  std::uint64_t seed, std::uint64_t max_flips) {
    std::mt19937_64 gen(seed);
    constexpr std::uint64_t kRestart = 20'000;
    std::uint64_t flips = 0;
    while (flips < max_flips) {
        EdgeColouring c = EdgeColouring::random(N, 2, gen());
        for (std::uint64_t step = 0; step < kRestart && flips < max_flips; ++step, ++flips) {
            auto copy = find_mono_copy(c, pattern);
            if (!copy) return c;
            auto [col, emb] = *copy;
            auto edges = pattern.edges();
            auto [pa, pb] = edges[gen() % edges.size()];
            c.set_colour(emb.map[pa], emb.map[pb], 1 - col);
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<EdgeColouring> local_search_witness(const Graph& pattern, int N,
                                                  std::uint64_t seed, std::uint64_t max_flips) {
    if (N < 1) throw std::invalid_argument("local_search_witness: need N >= 1");
    if (N < pattern.order() || pattern.edge_count() == 0) {
        if (pattern.edge_count() == 0 && N >= pattern.order()) return std::nullopt;
        return EdgeColouring::constant(std::max(N, 1), 2, 0);
    }
    int p = pattern.order();
    if (pattern.edge_count() == p * (p - 1) / 2 && p >= 2)
        return clique_witness_walk(p, N, seed, max_flips);
    return general_witness_walk(pattern, N, seed, max_flips);
}

EdgeColouring blocked_3colouring(const EdgeColouring& h_witness, int chi_h) {
    if (chi_h < 2) throw std::invalid_argument("blocked_3colouring: need chi_h >= 2");
    if (h_witness.colours() != 2)
        throw std::invalid_argument("blocked_3colouring: block colouring must be 2-coloured");
    if (chi_h == 2) return h_witness;  // one block, no green edges

    int M = h_witness.order();
    int blocks = chi_h - 1;
    long total = static_cast<long>(blocks) * M;
    if (total > kMaxVertices)
        throw std::invalid_argument("blocked_3colouring: output exceeds 64 vertices");
    EdgeColouring out = EdgeColouring::constant(static_cast<int>(total), 3, kGreen);
    for (int b = 0; b < blocks; ++b)
        for (int v = 1; v < M; ++v)
            for (int u = 0; u < v; ++u)
                out.set_colour(b * M + u, b * M + v, h_witness.colour(u, v));
    return out;
}

namespace {

std::optional<Family> family_of(const Graph& h) {
    int n = h.order();
    if (h.edge_count() == n * (n - 1) / 2 && n >= 1) return Family::clique;
    if (n % 2 == 0 && n >= 2 && n <= kMaxCanonicalVertices) {
        int t = n / 2;
        if (canonical_form(h) == canonical_form(Graph::complete_bipartite(t, t)))
            return Family::biclique;
    }
    return std::nullopt;
}

}  // namespace

R3LowerBound r3_lower_bound(const Graph& g, const Graph& h, RamseyOracle& oracle) {
    if (!is_connected(h)) throw std::invalid_argument("r3_lower_bound: h must be connected");
    if (!find_embedding(g, h)) throw std::invalid_argument("r3_lower_bound: h must embed in g");

    auto fam = family_of(h);
    if (!fam)
        throw std::invalid_argument("r3_lower_bound: oracle only tracks cliques and bicliques");
    int t = fam == Family::clique ? h.order() : h.order() / 2;
    const RamseyResult& r = oracle.get(*fam, t);
    if (!r.exact()) throw OracleInsufficient(*fam, t, r.lo, r.hi);

    int r2 = r.lo;
    EdgeColouring h_witness = [&]() {
        if (r.witness) return *r.witness;
        // Ledger-loaded entries drop the witness text; re-derive it.
        ArrowsReport rep = arrows(r2 - 1, 2, h);
        if (rep.outcome != ArrowsOutcome::witness)
            throw std::logic_error("r3_lower_bound: no witness at R-1 for an exact entry");
        return *rep.witness;
    }();
    if (!verify_no_mono(h_witness, h))
        throw std::logic_error("r3_lower_bound: oracle witness fails verification");

    int chi = chromatic_number(h);
    EdgeColouring blocked = blocked_3colouring(h_witness, chi);
    if (!verify_no_mono(blocked, g))
        throw std::logic_error("r3_lower_bound: blocked colouring contains the target");
    return R3LowerBound{(chi - 1) * (r2 - 1) + 1, std::move(blocked), chi, r2};
}

}  // namespace ramsey
