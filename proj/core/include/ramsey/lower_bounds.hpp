#pragma once

#include <cstdint>
#include <optional>

#include "ramsey/colouring.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

/// True iff the colouring contains no monochromatic copy of g.
bool verify_no_mono(const EdgeColouring& c, const Graph& g);

/// Seeded random 2-colourings of K_N, tried in deterministic order until one
/// is verified K_{t,t}-free; nullopt if none of max_tries passes.
std::optional<EdgeColouring> random_biclique_witness(int t, int N, std::uint64_t seed,
                                                     int max_tries = 64);

/// Seeded local search for a pattern-free 2-colouring of K_N: random start,
/// then flips of pairs on monochromatic copies, greedily reducing the number
/// of copies with an occasional random walk step; restarts until the flip
/// budget runs out. Every returned witness is verified.
std::optional<EdgeColouring> local_search_witness(const Graph& pattern, int N,
                                                  std::uint64_t seed,
                                                  std::uint64_t max_flips = 2'000'000);

/// The blocked 3-colouring: chi_h - 1 blocks each carrying a copy of the
/// H-free 2-colouring h_witness, all cross-block pairs green. For chi_h == 2
/// the output is h_witness itself.
EdgeColouring blocked_3colouring(const EdgeColouring& h_witness, int chi_h);

struct R3LowerBound {
    int bound;  // (chi(h)-1) * (R_2(h)-1) + 1
    EdgeColouring witness;
    int chi_h;
    int r2_h;
};

/// Lemma-style 3-colour lower bound for g via a connected subgraph h with an
/// exact oracle entry for R_2(h); the attached witness is verified to contain
/// no monochromatic g. Throws OracleInsufficient when R_2(h) is not exact.
R3LowerBound r3_lower_bound(const Graph& g, const Graph& h, RamseyOracle& oracle);

}  // namespace ramsey
