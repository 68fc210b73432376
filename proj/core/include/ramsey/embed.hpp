#pragma once

#include <optional>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Injective map pattern vertex -> host vertex carrying every pattern edge
/// onto a host edge (subgraph containment, not induced).
struct Embedding {
    std::vector<int> map;

    bool operator==(const Embedding&) const = default;
};

bool is_valid_embedding(const Graph& host, const Graph& pattern, const Embedding& e);

/// Lexicographically least embedding of pattern into host, or nullopt.
std::optional<Embedding> find_embedding(const Graph& host, const Graph& pattern);

/// Same, with the image restricted to the vertices of `allowed`.
std::optional<Embedding> find_embedding(const Graph& host, const Graph& pattern,
                                        std::uint64_t allowed);

}  // namespace ramsey
