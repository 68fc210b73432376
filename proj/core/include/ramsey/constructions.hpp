#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

#include "ramsey/engine.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

/// K_{t,t} with a pendant path on n-2t new vertices attached by a single
/// edge from biclique vertex 0 (class A) to the path's first vertex.
/// Vertices: A = [0,t), B = [t,2t), path = [2t,n).
Graph biclique_path_graph(int t, int n);

/// K_t with a pendant path on n-t new vertices attached at clique vertex 0.
Graph clique_path_graph(int t, int n);

/// Complete k-partite K_{t,...,t} with a pendant path on n-kt new vertices
/// attached at vertex 0.
Graph multipartite_path_graph(int k, int t, int n);

/// Disjoint union of stars K_{1,a} and K_{1,b}.
Graph double_star(int a, int b);

/// K_t plus n-t isolated vertices.
Graph clique_plus_isolated(int t, int n);

enum class Family { clique, biclique };

std::string to_string(Family f);
Graph family_graph(Family f, int t);

/// Raised by the t-selection rules when the oracle entry at the candidate t
/// is not exact; carries the interval it holds instead.
class OracleInsufficient : public std::runtime_error {
public:
    OracleInsufficient(Family family, int t, int lo, std::optional<int> hi);
    Family family;
    int t;
    int lo;
    std::optional<int> hi;
};

/// Table of engine-certified Ramsey numbers for the clique and biclique
/// families. Entries are computed on demand under a per-entry budget and
/// may be persisted to / preloaded from a text ledger (one line per entry:
/// family, parameter, lo, hi, certificate kind, engine version). Lookups of
/// cached entries are cheap; computation happens under a single writer lock.
class RamseyOracle {
public:
    explicit RamseyOracle(SearchBudget per_entry_budget = {}, EngineOptions opts = {});

    /// Load previously certified entries and append new ones to `path`.
    void attach_ledger(const std::filesystem::path& path);

    const RamseyResult& get(Family f, int t);

    /// Insert an externally computed result (e.g. a long offline run).
    void put(Family f, int t, RamseyResult result);

private:
    void append_to_ledger(Family f, int t, const RamseyResult& r);

    SearchBudget budget_;
    EngineOptions opts_;
    std::map<std::pair<Family, int>, RamseyResult> table_;
    std::optional<std::filesystem::path> ledger_;
    std::mutex mu_;
};

/// Minimal t with R(K_{t,t}) > fn_value. Requires exact oracle entries for
/// every t inspected; throws OracleInsufficient otherwise.
int select_t_case1(std::uint64_t fn_value, RamseyOracle& oracle);

/// Minimal t with R(K_t) >= fn_value, same exactness contract.
int select_t_case2(std::uint64_t fn_value, RamseyOracle& oracle);

enum class CaseKind { case1, case2 };
enum class Regime { in_case1, in_case2, out_of_regime };

std::string to_string(CaseKind c);
std::string to_string(Regime r);

struct Construction {
    Graph graph;
    CaseKind used;
    Regime regime;
    int t;
    std::uint64_t fn;
};

class OutOfRegime : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// True iff f <= 2^{n/8}, decided as f^8 <= 2^n in exact integer arithmetic.
bool within_case1_range(std::uint64_t f, int n);

/// ceil(2 n log2 n), exact for powers of two; elsewhere the value is
/// irrational and a long-double ceiling is safe at this scale.
std::uint64_t case2_lower_threshold(int n);

/// Build the n-vertex graph for the target growth value f(n): Case 1
/// (biclique + path) when f(n) <= 2^{n/8}, Case 2 (clique + path) when
/// f(n) >= ceil(2n log2 n), with Case 1 preferred on overlap. Outside both
/// ranges (tiny n only) the cases are attempted in that order and the result
/// is tagged Regime::out_of_regime; OutOfRegime is thrown when neither
/// construction goes through. `forced` bypasses the range dispatch.
Construction build_G(const std::map<int, std::uint64_t>& f_values, int n, RamseyOracle& oracle,
                     std::optional<CaseKind> forced = std::nullopt);

}  // namespace ramsey
