#include "ramsey/spectrum.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ramsey/canonical.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/lower_bounds.hpp"

namespace ramsey {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

SpectrumReport spectrum(int n, const SpectrumOptions& opts) {
    if (n < 1 || n > 6) throw std::invalid_argument("spectrum: n must be in [1, 6]");
    SpectrumReport report;
    report.n = n;

    for (const Graph& g : enumerate_graphs(n, EnumFilter::all)) {
        SpectrumEntry e;
        e.key = canonical_form(g);
        e.g6 = write_graph6(g);
        e.graph = g;
        e.connected = is_connected(g);
        e.no_isolated = !has_isolated_vertex(g);
        e.result = ramsey_number(g, 2, opts.per_graph, opts.engine);

        if (!e.result.exact() && opts.witness_ladder) {
            // Raise lo with verified seeded witnesses; stop at the first
            // order where the search comes back empty.
            for (int N = e.result.lo; N < kMaxVertices; ++N) {
                std::uint64_t seed = fnv1a(e.g6 + ":" + std::to_string(N));
                auto w = local_search_witness(g, N, seed, opts.ladder_flips);
                if (!w) break;
                if (!verify_no_mono(*w, g))
                    throw std::logic_error("spectrum: unverified ladder witness");
                e.result.lo = N + 1;
                e.result.witness = std::move(*w);
            }
        }
        report.entries.push_back(std::move(e));
    }
    std::sort(report.entries.begin(), report.entries.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.key < b.key; });

    for (const auto& e : report.entries) {
        if (!e.result.exact()) {
            report.unresolved.push_back(e.g6);
            continue;
        }
        report.values_all.insert(e.result.lo);
        if (e.no_isolated) report.values_no_isolated.insert(e.result.lo);
        if (e.connected) report.values_connected.insert(e.result.lo);
    }

    // R(empty graph on n vertices) = n, so n always belongs to the set.
    if (!report.values_all.count(n))
        throw std::logic_error("spectrum: n missing from R_n (engine bug)");
    return report;
}

namespace {

std::string set_to_string(const std::set<int>& s) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int v : s) {
        if (!first) out << ", ";
        out << v;
        first = false;
    }
    out << "}";
    return out.str();
}

}  // namespace

std::string to_table(const SpectrumReport& report) {
    std::ostringstream out;
    out << "graph6 connected no_isolated lo hi certificate\n";
    for (const auto& e : report.entries) {
        std::string cert = e.result.upper_certificate == UpperCertificate::known_bound
                               ? e.result.bound_name
                               : to_string(e.result.upper_certificate);
        out << e.g6 << " " << (e.connected ? 1 : 0) << " " << (e.no_isolated ? 1 : 0) << " "
            << e.result.lo << " " << (e.result.hi ? std::to_string(*e.result.hi) : "-") << " "
            << cert << "\n";
    }
    out << "R_" << report.n << " = " << set_to_string(report.values_all) << "\n";
    out << "R_" << report.n << "_no_isolated = " << set_to_string(report.values_no_isolated)
        << "\n";
    out << "R_" << report.n << "_connected = " << set_to_string(report.values_connected) << "\n";
    out << "unresolved =";
    for (const auto& g6 : report.unresolved) out << " " << g6;
    out << "\n";
    return out.str();
}

FloorCheck check_burr_erdos_floor(const SpectrumReport& report) {
    FloorCheck check;
    check.floor = (4 * report.n + 2) / 3 - 1;  // ceil(4n/3) - 1
    bool any_exact = false;
    int min_exact = 0;
    FloorStatus status = FloorStatus::pass;
    for (const auto& e : report.entries) {
        if (!e.connected) continue;
        if (e.result.exact()) {
            if (!any_exact || e.result.lo < min_exact) min_exact = e.result.lo;
            any_exact = true;
            if (e.result.lo < check.floor) status = FloorStatus::fail;
        } else if (e.result.lo < check.floor) {
            if (status == FloorStatus::pass) status = FloorStatus::inconclusive;
        }
    }
    check.status = status;
    if (any_exact)
        for (const auto& e : report.entries)
            if (e.connected && e.result.exact() && e.result.lo == min_exact)
                check.extremal_g6.push_back(e.g6);
    return check;
}

std::vector<IntervalValueStatus> check_interval_inclusion(int n, const SearchBudget& budget) {
    std::vector<IntervalValueStatus> out;
    if (n < 2) return out;
    int hi = (3 * (n - 2)) / 2 - 3;
    for (int v = n; v <= hi; ++v) {
        IntervalValueStatus st;
        st.value = v;
        for (int i = 0; i <= 2 && !st.verified; ++i) {
            if ((v + 2 * i) % 3 != 0) continue;
            int a = (v + 2 * i) / 3;
            if (a < i + 1 || a < 1) continue;
            int order = 2 * a - i + 2;  // |V(Sigma_{a,a-i})|
            if (order > n) continue;
            Graph star = double_star(a, a - i);
            Graph padded(n);
            for (auto [x, y] : star.edges()) padded.add_edge(x, y);
            RamseyResult r = ramsey_number(padded, 2, budget);
            if (r.exact() && r.lo == v) {
                st.verified = true;
                st.a = a;
                st.i = i;
                st.g6 = write_graph6(padded);
                st.result = std::move(r);
            }
        }
        out.push_back(std::move(st));
    }
    return out;
}

std::vector<int> find_c_gaps(const std::set<int>& values, long long c_num, long long c_den,
                             int lo, int hi) {
    if (c_den <= 0 || c_num <= c_den) throw std::invalid_argument("find_c_gaps: need c > 1");
    std::vector<int> gaps;
    for (int a = lo; a <= hi; ++a) {
        long long top = (static_cast<long long>(a) * c_num + c_den - 1) / c_den;  // ceil(ca)
        bool hit = false;
        for (auto it = values.lower_bound(a); it != values.end() && *it <= top; ++it) {
            hit = true;
            break;
        }
        if (!hit) gaps.push_back(a);
    }
    return gaps;
}

}  // namespace ramsey
