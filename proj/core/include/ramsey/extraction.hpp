#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ramsey/colouring.hpp"
#include "ramsey/embed.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

/// A monochromatic copy of the extraction target inside the coloured host.
struct MonoEmbedding {
    int colour = -1;
    Embedding embedding;
};

/// Ordered vertex-disjoint cliques of one colour, consecutive ones joined by
/// links of the same colour; the links are pairwise vertex-disjoint.
/// links[i] = (x, y) with x in cliques[i] and y in cliques[i+1].
struct CliquePath {
    std::vector<std::vector<int>> cliques;
    std::vector<std::pair<int, int>> links;

    int span() const {
        int total = 0;
        for (const auto& q : cliques) total += static_cast<int>(q.size());
        return total;
    }
};

/// Check all four structural invariants directly against the colouring:
/// per-clique completeness in `colour`, clique disjointness, link colour and
/// endpoint membership, link vertex-disjointness.
bool verify_clique_path(const EdgeColouring& c, const CliquePath& p, int t, int colour);

enum class StepKind {
    mono_path_too_short,
    red_biclique_present,
    tile_shortfall,
    connector_missing,
    clique_cover_fail,
    assembly_shortfall,
};

std::string to_string(StepKind k);
std::optional<StepKind> step_kind_from_string(const std::string& s);

/// A certified failure of one proof step. The payload carries the offending
/// structure in the host's original colours so it can be re-verified.
struct StepFailure {
    StepKind kind;
    std::string detail;

    std::vector<int> path;  // the long mono path, when relevant
    int path_colour = -1;

    std::optional<Embedding> mono_witness;  // e.g. the red K_{t,t} / red K_t
    int mono_witness_colour = -1;

    std::vector<std::vector<int>> tiles;  // raw embedding maps of the tiles
    int tiles_colour = -1;

    std::optional<CliquePath> clique_path;
};

/// Re-check a failure certificate against the colouring it came from.
bool verify_step_failure(const EdgeColouring& c, const StepFailure& f, int t, int n,
                         int case_kind);

using ExtractOutcome = std::variant<MonoEmbedding, StepFailure>;

/// Optional step-by-step record of a pipeline run, for emission and replay.
struct TraceStep {
    std::string name;
    int colour = -1;
    std::vector<int> vertices;
    std::vector<std::vector<int>> sets;
    std::optional<Embedding> embedding;
};

struct ExtractionTrace {
    int case_kind = 0;
    int t = 0;
    int n = 0;
    std::vector<TraceStep> steps;
};

/// Monochromatic path on at least ceil(2N/3) vertices in a 2-colouring,
/// as (colour, vertex sequence). Built constructively: a red and a blue path
/// sharing an endpoint and covering every vertex are grown by single-vertex
/// insertions, then improved by rotation-extension inside each colour class;
/// an exhaustive target-length search backs the guarantee on the rare hosts
/// the constructive phase leaves short.
std::pair<int, std::vector<int>> find_long_mono_path(const EdgeColouring& c);

/// Greedy maximal sequence of vertex-disjoint copies of `pattern` in the
/// given colour inside S: repeatedly take the lexicographically least
/// embedding among uncovered vertices.
std::vector<Embedding> greedy_mono_tiling(const EdgeColouring& c, std::uint64_t S,
                                          const Graph& pattern, int colour);

/// Assemble a blue copy of biclique_path_graph(t, n) from disjoint blue
/// K_{t,t} tiles: the last tile is reserved as the biclique, a blue spanning
/// path is threaded through as many preceding tiles as the pendant path
/// needs, entering each tile through a blue connector edge.
ExtractOutcome stitch_case1(const EdgeColouring& c, const std::vector<Embedding>& tiles,
                            int t, int n);

/// Partition disjoint blue K_t's into at most t-1 clique-paths by repeated
/// merge on blue representative pairs; an all-red representative set is a
/// red K_t and is returned as the failure certificate.
std::variant<std::vector<CliquePath>, StepFailure> cover_by_clique_paths(
    const EdgeColouring& c, const std::vector<std::vector<int>>& cliques, int t);

ExtractOutcome extract_case1(const EdgeColouring& c, int t, int n,
                             ExtractionTrace* trace = nullptr);
ExtractOutcome extract_case2(const EdgeColouring& c, int t, int n,
                             ExtractionTrace* trace = nullptr);

}  // namespace ramsey
