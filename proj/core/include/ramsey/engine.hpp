#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "ramsey/colouring.hpp"
#include "ramsey/embed.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

struct SearchBudget {
    std::uint64_t max_nodes = 100'000'000;
    double max_seconds = 600.0;
};

enum class UpperCertificate { proved_by_search, budget_exhausted, known_bound };

std::string to_string(UpperCertificate c);

/// Exact value or certified interval for a Ramsey number. `witness` is a
/// verified pattern-free colouring on lo-1 vertices (absent only when
/// lo-1 < 1 or the bound came from elsewhere).
struct RamseyResult {
    int lo = 1;
    std::optional<int> hi;  // nullopt = unbounded so far
    std::optional<EdgeColouring> witness;
    UpperCertificate upper_certificate = UpperCertificate::budget_exhausted;
    std::string bound_name;  // set when upper_certificate == known_bound
    std::uint64_t nodes = 0;
    double seconds = 0.0;

    bool exact() const { return hi.has_value() && *hi == lo; }
};

enum class ArrowsOutcome { arrows, witness, unknown };

struct ArrowsReport {
    ArrowsOutcome outcome = ArrowsOutcome::unknown;
    std::optional<EdgeColouring> witness;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

struct EngineOptions {
    /// Canonical-prefix isomorph rejection is applied to the first
    /// `iso_depth` pairs in colex order.
    int iso_depth = 10;
    /// Worker count for the split-tree search; 1 = sequential. Completed
    /// searches return the same outcome for any worker count.
    int jobs = 1;
};

/// Least colour, then lexicographically least embedding, of a
/// monochromatic copy of `pattern` in `c`; nullopt if none.
std::optional<std::pair<int, Embedding>> find_mono_copy(const EdgeColouring& c,
                                                        const Graph& pattern);

/// Decide whether every r-colouring of K_N contains a monochromatic copy of
/// `pattern`, by complete symmetry-reduced backtracking over pair colours in
/// colex order. ARROWS is only reported after exhausting the reduced tree;
/// WITNESS carries a verified pattern-free colouring; UNKNOWN only on budget
/// exhaustion.
ArrowsReport arrows(int N, int r, const Graph& pattern, const SearchBudget& budget = {},
                    const EngineOptions& opts = {});

/// Increment N from |V(pattern)| upward, running `arrows` at each order with
/// the remaining budget; stops at the first ARROWS (exact) or at budget end
/// (interval with the last witness attached).
RamseyResult ramsey_number(const Graph& pattern, int r = 2, const SearchBudget& budget = {},
                           const EngineOptions& opts = {});

/// Two-colour Ramsey number of the path on v >= 2 vertices in the vertex
/// convention: v + floor(v/2) - 1.
int path_ramsey_vertices(int v);

/// The same quantity written for a path with m edges as ceil((3m+1)/2);
/// agrees with the vertex convention only for odd m.
int path_ramsey_edge_formula(int m);

}  // namespace ramsey
