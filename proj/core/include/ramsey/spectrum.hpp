#pragma once

#include <set>
#include <string>
#include <vector>

#include "ramsey/engine.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

struct SpectrumEntry {
    std::string key;  // canonical form
    std::string g6;
    Graph graph;
    bool connected = false;
    bool no_isolated = false;
    RamseyResult result;
};

/// Per-class Ramsey results on n vertices plus the derived value sets.
/// Set members come only from exact results; interval entries are listed
/// under `unresolved` instead.
struct SpectrumReport {
    int n = 0;
    std::vector<SpectrumEntry> entries;  // ordered by canonical key
    std::set<int> values_all;            // R_n
    std::set<int> values_no_isolated;    // R_n with no isolated vertices
    std::set<int> values_connected;      // R_n restricted to connected classes
    std::vector<std::string> unresolved;  // graph6 of interval entries
};

struct SpectrumOptions {
    SearchBudget per_graph;
    EngineOptions engine;
    /// After an inexact engine run, push the lower bound up with seeded
    /// local-search witnesses (each verified) until a level fails.
    bool witness_ladder = true;
    std::uint64_t ladder_flips = 1'500'000;
};

SpectrumReport spectrum(int n, const SpectrumOptions& opts = {});

/// Text table (one row per class: graph6, flags, lo, hi, certificate) plus
/// the set summary; stable column order for golden files.
std::string to_table(const SpectrumReport& report);

enum class FloorStatus { pass, fail, inconclusive };

struct FloorCheck {
    FloorStatus status = FloorStatus::inconclusive;
    int floor = 0;  // ceil(4n/3) - 1
    std::vector<std::string> extremal_g6;  // exact connected classes attaining the minimum
};

/// Connected-class floor R(G) >= ceil(4n/3) - 1: pass iff every connected
/// class has lower bound >= floor; inconclusive if an unresolved class sits
/// below it, fail if an exact value does.
FloorCheck check_burr_erdos_floor(const SpectrumReport& report);

struct IntervalValueStatus {
    int value = 0;
    bool verified = false;
    int a = 0, i = 0;     // the padded double star used, when verified
    std::string g6;
    RamseyResult result;
};

/// For each v in [n, floor(3(n-2)/2) - 3], exhibit a padded double star
/// whose engine-verified Ramsey number equals v, or mark it UNVERIFIED
/// under the budget. Empty interval: empty vector (vacuous pass).
std::vector<IntervalValueStatus> check_interval_inclusion(int n, const SearchBudget& budget);

/// All a in [lo, hi] with [a, ceil(c a)] disjoint from `values`, the ratio
/// c given as c_num/c_den > 1.
std::vector<int> find_c_gaps(const std::set<int>& values, long long c_num, long long c_den,
                             int lo, int hi);

}  // namespace ramsey
