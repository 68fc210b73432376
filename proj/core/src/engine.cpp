#include "ramsey/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

namespace ramsey {

std::string to_string(UpperCertificate c) {
    switch (c) {
        case UpperCertificate::proved_by_search: return "proved_by_search";
        case UpperCertificate::budget_exhausted: return "budget_exhausted";
        case UpperCertificate::known_bound: return "known_bound";
    }
    return "?";
}

std::optional<std::pair<int, Embedding>> find_mono_copy(const EdgeColouring& c,
                                                        const Graph& pattern) {
    for (int i = 0; i < c.colours(); ++i)
        if (auto e = find_embedding(c.colour_class(i), pattern)) return std::make_pair(i, *e);
    return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

// Static per-pattern tables for the incremental mono-copy test: one
// anchored assignment order per (pattern edge, orientation).
struct AnchoredPlan {
    std::vector<int> order;                 // pattern vertices, anchors first
    std::vector<std::vector<int>> prev;     // prev[k]: positions < k adjacent to order[k]
    int edged_len = 0;                      // positions before the isolated tail
};

struct PatternTables {
    int p = 0;
    int edge_cnt = 0;
    std::vector<AnchoredPlan> plans;

    explicit PatternTables(const Graph& pattern) {
        p = pattern.order();
        auto es = pattern.edges();
        edge_cnt = static_cast<int>(es.size());
        for (auto [a, b] : es) {
            plans.push_back(make_plan(pattern, a, b));
            plans.push_back(make_plan(pattern, b, a));
        }
    }

    static AnchoredPlan make_plan(const Graph& g, int a, int b) {
        AnchoredPlan plan;
        int n = g.order();
        std::vector<bool> seen(n, false);
        auto push = [&](int v) {
            seen[v] = true;
            plan.order.push_back(v);
        };
        push(a);
        push(b);
        // Breadth-first from the anchors, then any other edged component.
        for (std::size_t head = 0; head < plan.order.size(); ++head) {
            std::uint64_t nb = g.neighbours(plan.order[head]);
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                if (!seen[w]) push(w);
            }
            if (head + 1 == plan.order.size()) {
                for (int v = 0; v < n; ++v)
                    if (!seen[v] && g.degree(v) > 0) {
                        push(v);
                        break;
                    }
            }
        }
        plan.edged_len = static_cast<int>(plan.order.size());
        for (int v = 0; v < n; ++v)
            if (!seen[v]) push(v);
        plan.prev.resize(plan.order.size());
        for (std::size_t k = 0; k < plan.order.size(); ++k)
            for (std::size_t j = 0; j < k; ++j)
                if (g.has_edge(plan.order[j], plan.order[k]))
                    plan.prev[k].push_back(static_cast<int>(j));
        return plan;
    }
};

// Canonical-prefix tables: at the rank completing K_v, the induced
// colouring on [0,v) must be lexicographically least under S_v x S_r.
struct IsoTables {
    struct Checkpoint {
        int rank;  // the rank whose assignment completes K_v
        int len;   // C(v,2)
        std::vector<std::vector<int>> pair_maps;
    };
    std::vector<Checkpoint> checkpoints;
    std::vector<std::array<std::uint8_t, kMaxColours>> colour_perms;

    IsoTables(int N, int r, int iso_depth) {
        std::array<std::uint8_t, kMaxColours> idp{};
        std::vector<int> cs(r);
        std::iota(cs.begin(), cs.end(), 0);
        do {
            for (int i = 0; i < r; ++i) idp[i] = static_cast<std::uint8_t>(cs[i]);
            colour_perms.push_back(idp);
        } while (std::next_permutation(cs.begin(), cs.end()));

        for (int v = 2; v <= std::min(N, 6); ++v) {
            int len = v * (v - 1) / 2;
            if (len > iso_depth) break;
            Checkpoint cp;
            cp.rank = len - 1;
            cp.len = len;
            std::vector<int> perm(v);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::vector<int> fmap(len);
                for (int y = 1; y < v; ++y)
                    for (int x = 0; x < y; ++x)
                        fmap[EdgeColouring::pair_rank(x, y)] =
                            EdgeColouring::pair_rank(perm[x], perm[y]);
                cp.pair_maps.push_back(std::move(fmap));
            } while (std::next_permutation(perm.begin(), perm.end()));
            checkpoints.push_back(std::move(cp));
        }
    }
};

enum class DfsResult { witness, exhausted, aborted };

struct Searcher {
    int N, r;
    const PatternTables* pat;
    const IsoTables* iso;
    std::vector<std::pair<int, int>> pairs;
    std::array<std::vector<std::uint64_t>, kMaxColours> cadj;
    std::vector<std::uint8_t> colseq;
    std::vector<int> iso_checkpoint_at;  // rank -> checkpoint index or -1

    std::atomic<std::uint64_t>* node_pool = nullptr;
    std::uint64_t local_lease = 0;
    std::uint64_t nodes = 0;
    Clock::time_point deadline;
    int ticker = 0;
    bool aborted = false;

    Searcher(int N_, int r_, const PatternTables& pt, const IsoTables& it)
        : N(N_), r(r_), pat(&pt), iso(&it) {
        for (int v = 1; v < N; ++v)
            for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
        for (int c = 0; c < r; ++c) cadj[c].assign(N, 0);
        colseq.assign(pairs.size(), 0);
        iso_checkpoint_at.assign(pairs.size() + 1, -1);
        for (std::size_t i = 0; i < iso->checkpoints.size(); ++i) {
            int rk = iso->checkpoints[i].rank;
            if (rk < static_cast<int>(pairs.size())) iso_checkpoint_at[rk] = static_cast<int>(i);
        }
    }

    bool spend_node() {
        ++nodes;
        if (local_lease == 0) {
            constexpr std::uint64_t kLease = 4096;
            std::uint64_t prev = node_pool->load(std::memory_order_relaxed);
            do {
                if (prev == 0) {
                    aborted = true;
                    return false;
                }
            } while (!node_pool->compare_exchange_weak(prev, prev - std::min(prev, kLease),
                                                       std::memory_order_relaxed));
            local_lease = std::min(prev, kLease);
            if (Clock::now() >= deadline) {
                aborted = true;
                return false;
            }
        }
        --local_lease;
        if (++ticker >= 65536) {
            ticker = 0;
            if (Clock::now() >= deadline) {
                aborted = true;
                return false;
            }
        }
        return true;
    }

    void assign(int rank, int c) {
        auto [u, v] = pairs[rank];
        cadj[c][u] |= bit(v);
        cadj[c][v] |= bit(u);
        colseq[rank] = static_cast<std::uint8_t>(c);
    }

    void unassign(int rank, int c) {
        auto [u, v] = pairs[rank];
        cadj[c][u] &= ~bit(v);
        cadj[c][v] &= ~bit(u);
    }

    // Does the colour-c graph now contain the pattern using edge (u,v)?
    bool completes_mono(int c, int u, int v) const {
        std::vector<int> map(pat->p);
        for (const auto& plan : pat->plans) {
            map[0] = u;
            map[1] = v;
            if (!cadj[c][u] || !(cadj[c][u] & bit(v))) return false;  // (u,v) not in class
            if (anchored_extend(plan, c, map, 2, bit(u) | bit(v))) return true;
        }
        return false;
    }

    bool anchored_extend(const AnchoredPlan& plan, int c, std::vector<int>& map, int k,
                         std::uint64_t used) const {
        if (k >= plan.edged_len) return true;  // isolated tail always placeable (N >= p)
        std::uint64_t cand = full_mask(N) & ~used;
        for (int j : plan.prev[k]) cand &= cadj[c][map[j]];
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            map[k] = w;
            if (anchored_extend(plan, c, map, k + 1, used | bit(w))) return true;
        }
        return false;
    }

    bool prefix_canonical(int rank) const {
        const auto& cp = iso->checkpoints[iso_checkpoint_at[rank]];
        for (const auto& fmap : cp.pair_maps) {
            for (const auto& tau : iso->colour_perms) {
                for (int t = 0; t < cp.len; ++t) {
                    int a = colseq[t];
                    int b = tau[colseq[fmap[t]]];
                    if (b < a) return false;
                    if (b > a) break;
                }
            }
        }
        return true;
    }

    DfsResult dfs(int rank) {
        if (rank == static_cast<int>(pairs.size())) return DfsResult::witness;
        auto [u, v] = pairs[rank];
        for (int c = 0; c < r; ++c) {
            if (!spend_node()) return DfsResult::aborted;
            assign(rank, c);
            bool dead = completes_mono(c, u, v);
            if (!dead && iso_checkpoint_at[rank] >= 0) dead = !prefix_canonical(rank);
            if (!dead) {
                DfsResult res = dfs(rank + 1);
                if (res != DfsResult::exhausted) {
                    if (res == DfsResult::aborted) unassign(rank, c);
                    return res;  // witness keeps the assignment in colseq
                }
            }
            unassign(rank, c);
        }
        return DfsResult::exhausted;
    }

    EdgeColouring current_colouring() const {
        EdgeColouring out(N, r);
        for (std::size_t t = 0; t < pairs.size(); ++t)
            out.set_colour(pairs[t].first, pairs[t].second, colseq[t]);
        return out;
    }
};

struct SubtreeResult {
    DfsResult res = DfsResult::exhausted;
    std::optional<EdgeColouring> witness;
    std::uint64_t nodes = 0;
};

}  // namespace

ArrowsReport arrows(int N, int r, const Graph& pattern, const SearchBudget& budget,
                    const EngineOptions& opts) {
    if (N < 1) throw std::invalid_argument("arrows: N must be >= 1");
    if (r < 2 || r > kMaxColours) throw std::invalid_argument("arrows: r must be 2 or 3");
    auto t0 = Clock::now();
    ArrowsReport rep;

    // A copy needs |V(pattern)| host vertices; an edgeless pattern sits in
    // any colouring as soon as it fits.
    if (N < pattern.order()) {
        rep.outcome = ArrowsOutcome::witness;
        rep.witness = EdgeColouring::constant(std::max(N, 1), r, 0);
        return rep;
    }
    if (pattern.edge_count() == 0) {
        rep.outcome = ArrowsOutcome::arrows;
        return rep;
    }
    if (N < 2) {  // N == 1 and pattern has an edge
        rep.outcome = ArrowsOutcome::witness;
        rep.witness = EdgeColouring::constant(1, r, 0);
        return rep;
    }

    PatternTables tables(pattern);
    IsoTables iso(N, r, opts.iso_depth);
    std::atomic<std::uint64_t> pool{budget.max_nodes};
    auto deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(budget.max_seconds));

    auto finish = [&](ArrowsOutcome oc, std::optional<EdgeColouring> w,
                      std::uint64_t nodes) {
        rep.outcome = oc;
        rep.witness = std::move(w);
        rep.nodes = nodes;
        rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (rep.witness && find_mono_copy(*rep.witness, pattern))
            throw std::logic_error("arrows: produced witness failed verification");
        return rep;
    };

    int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        Searcher s(N, r, tables, iso);
        s.node_pool = &pool;
        s.deadline = deadline;
        DfsResult res = s.dfs(0);
        switch (res) {
            case DfsResult::witness:
                return finish(ArrowsOutcome::witness, s.current_colouring(), s.nodes);
            case DfsResult::exhausted: return finish(ArrowsOutcome::arrows, std::nullopt, s.nodes);
            case DfsResult::aborted: return finish(ArrowsOutcome::unknown, std::nullopt, s.nodes);
        }
    }

    // Split the tree at a shallow depth into lexicographically ordered
    // prefixes; workers consume them in order. For completed searches the
    // combined outcome (and the witness, taken from the least-indexed
    // subtree) equals the sequential result.
    std::vector<std::vector<std::uint8_t>> prefixes{{}};
    int depth = 0;
    int npairs = N * (N - 1) / 2;
    std::uint64_t expand_nodes = 0;
    while (static_cast<int>(prefixes.size()) < 4 * jobs && depth < npairs - 1 &&
           !prefixes.empty()) {
        Searcher s(N, r, tables, iso);
        s.node_pool = &pool;
        s.deadline = deadline;
        std::vector<std::vector<std::uint8_t>> next;
        for (const auto& pre : prefixes) {
            for (int t = 0; t < depth; ++t) s.assign(t, pre[t]);
            auto [u, v] = s.pairs[depth];
            for (int c = 0; c < r; ++c) {
                ++expand_nodes;
                s.assign(depth, c);
                bool dead = s.completes_mono(c, u, v);
                if (!dead && s.iso_checkpoint_at[depth] >= 0) dead = !s.prefix_canonical(depth);
                if (!dead) {
                    auto np = pre;
                    np.push_back(static_cast<std::uint8_t>(c));
                    next.push_back(std::move(np));
                }
                s.unassign(depth, c);
            }
            for (int t = depth - 1; t >= 0; --t) s.unassign(t, pre[t]);
        }
        prefixes = std::move(next);
        ++depth;
    }
    if (prefixes.empty()) return finish(ArrowsOutcome::arrows, std::nullopt, expand_nodes);

    std::vector<SubtreeResult> results(prefixes.size());
    std::atomic<std::size_t> next_item{0};
    std::atomic<std::size_t> cutoff{prefixes.size()};  // first witness index

    auto worker = [&]() {
        for (;;) {
            std::size_t i = next_item.fetch_add(1);
            if (i >= prefixes.size()) return;
            if (i > cutoff.load(std::memory_order_relaxed)) continue;
            Searcher s(N, r, tables, iso);
            s.node_pool = &pool;
            s.deadline = deadline;
            for (int t = 0; t < depth; ++t) s.assign(t, prefixes[i][t]);
            DfsResult res = s.dfs(depth);
            results[i].res = res;
            results[i].nodes = s.nodes;
            if (res == DfsResult::witness) {
                results[i].witness = s.current_colouring();
                std::size_t cur = cutoff.load(std::memory_order_relaxed);
                while (i < cur && !cutoff.compare_exchange_weak(cur, i)) {}
            }
        }
    };

    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& th : threads) th.join();

    std::uint64_t total_nodes = expand_nodes;
    for (const auto& sr : results) total_nodes += sr.nodes;
    bool any_aborted = false;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (results[i].res == DfsResult::witness)
            return finish(ArrowsOutcome::witness, results[i].witness, total_nodes);
        if (results[i].res == DfsResult::aborted) any_aborted = true;
    }
    if (any_aborted) return finish(ArrowsOutcome::unknown, std::nullopt, total_nodes);
    return finish(ArrowsOutcome::arrows, std::nullopt, total_nodes);
}

RamseyResult ramsey_number(const Graph& pattern, int r, const SearchBudget& budget,
                           const EngineOptions& opts) {
    if (pattern.order() < 1) throw std::invalid_argument("ramsey_number: empty pattern");
    auto t0 = Clock::now();
    RamseyResult result;
    result.lo = pattern.order();
    result.upper_certificate = UpperCertificate::budget_exhausted;

    for (int N = pattern.order();; ++N) {
        double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
        SearchBudget rem;
        rem.max_nodes = budget.max_nodes > result.nodes ? budget.max_nodes - result.nodes : 0;
        rem.max_seconds = budget.max_seconds - elapsed;
        if (rem.max_nodes == 0 || rem.max_seconds <= 0) break;

        ArrowsReport rep = arrows(N, r, pattern, rem, opts);
        result.nodes += rep.nodes;
        if (rep.outcome == ArrowsOutcome::arrows) {
            result.hi = N;
            result.upper_certificate = UpperCertificate::proved_by_search;
            break;
        }
        if (rep.outcome == ArrowsOutcome::witness) {
            result.lo = N + 1;
            result.witness = std::move(rep.witness);
            continue;
        }
        break;  // unknown: budget exhausted
    }
    result.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return result;
}

int path_ramsey_vertices(int v) {
    if (v < 2) throw std::invalid_argument("path_ramsey_vertices: need v >= 2");
    return v + v / 2 - 1;
}

int path_ramsey_edge_formula(int m) {
    if (m < 1) throw std::invalid_argument("path_ramsey_edge_formula: need m >= 1");
    return (3 * m + 2) / 2;
}

}  // namespace ramsey
