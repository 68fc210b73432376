#pragma once

#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// The exhaustive refiner is only run on graphs this small.
inline constexpr int kMaxCanonicalVertices = 12;

/// Isomorphism-invariant byte key: canonical_form(g1) == canonical_form(g2)
/// iff g1 and g2 are isomorphic. Throws std::invalid_argument above 12 vertices.
std::string canonical_form(const Graph& g);

/// Canonical relabelling as position -> original vertex; relabelling g so
/// that vertex labelling[i] becomes i produces the canonical representative.
std::vector<int> canonical_labelling(const Graph& g);

enum class EnumFilter { all, connected, no_isolated };

/// Exactly one representative per isomorphism class on n vertices
/// (1 <= n <= 8) passing the filter, in canonical-key order. Results are
/// cached process-wide; the returned reference stays valid.
const std::vector<Graph>& enumerate_graphs(int n, EnumFilter filter);

}  // namespace ramsey
