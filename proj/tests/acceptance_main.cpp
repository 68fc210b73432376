// Acceptance suite: runs every acceptance criterion end to end and prints
// one PASS/FAIL line per criterion. Exits non-zero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <random>
#include <variant>
#include <vector>

#include <json.hpp>

#include "naive_oracle.hpp"
#include "ramsey/canonical.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/engine.hpp"
#include "ramsey/extraction.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/lower_bounds.hpp"
#include "ramsey/records.hpp"
#include "ramsey/spectrum.hpp"

using namespace ramsey;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;

    void require(bool cond, const std::string& why) {
        if (!cond) {
            pass = false;
            if (!note.empty()) note += "; ";
            note += why;
        }
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

EdgeColouring red_c5() {
    EdgeColouring c = EdgeColouring::constant(5, 2, kBlue);
    for (int i = 0; i < 5; ++i) c.set_colour(i, (i + 1) % 5, kRed);
    return c;
}

// ---------------------------------------------------------------- criterion 1
Outcome criterion1() {
    Outcome out;
    struct Row {
        const char* name;
        Graph pattern;
        int expect;
        double limit;  // seconds
    };
    Graph k4e = Graph::complete(4);
    k4e.remove_edge(0, 1);
    std::vector<Row> rows{{"K_3", Graph::complete(3), 6, 1.0},
                          {"P_3", Graph::path(3), 3, 1.0},
                          {"P_4", Graph::path(4), 5, 1.0},
                          {"C_4", Graph::cycle(4), 6, 600.0},
                          {"K_{1,3}", Graph::complete_bipartite(1, 3), 6, 600.0},
                          {"K_4-e", k4e, 10, 600.0}};
    for (const auto& row : rows) {
        auto t0 = Clock::now();
        RamseyResult r = ramsey_number(row.pattern, 2, SearchBudget{100'000'000, 600.0});
        double s = seconds_since(t0);
        out.require(r.exact(), std::string(row.name) + " not exact");
        out.require(r.exact() && r.lo == row.expect,
                    std::string(row.name) + " = " + std::to_string(r.lo) + " expected " +
                        std::to_string(row.expect));
        out.require(s < row.limit, std::string(row.name) + " took " + std::to_string(s) + "s");
        if (r.witness) out.require(verify_no_mono(*r.witness, row.pattern),
                                   std::string(row.name) + " witness failed verification");
    }
    return out;
}

// ---------------------------------------------------------------- criterion 2
Outcome criterion2() {
    Outcome out;
    int checked = 0;
    for (int pn = 1; pn <= 4; ++pn) {
        for (const Graph& pattern : enumerate_graphs(pn, EnumFilter::all)) {
            if (pattern == Graph::complete(4)) continue;
            for (int N = 1; N <= 8; ++N) {
                bool reduced = arrows(N, 2, pattern).outcome == ArrowsOutcome::arrows;
                bool naive_ans = naive::naive_arrows(N, pattern);
                ++checked;
                if (reduced != naive_ans)
                    out.require(false, "disagreement at pattern " + write_graph6(pattern) +
                                           " N=" + std::to_string(N));
            }
        }
    }
    out.note = std::to_string(checked) + " (pattern, N) pairs agree" +
               (out.note.empty() ? "" : "; " + out.note);
    return out;
}

// ---------------------------------------------------------------- criterion 3
Outcome criterion3() {
    Outcome out;
    for (int v = 3; v <= 7; ++v) {
        RamseyResult r = ramsey_number(Graph::path(v));
        int expect = v + v / 2 - 1;
        out.require(r.exact() && r.lo == expect,
                    "path v=" + std::to_string(v) + " engine " + std::to_string(r.lo) +
                        " expected " + std::to_string(expect));
        out.require(r.lo == path_ramsey_vertices(v), "oracle mismatch at v=" + std::to_string(v));
    }
#ifdef RAMSEY_CLI_PATH
    auto run = [](const std::string& args, std::string& text) {
        std::string cmd = std::string(RAMSEY_CLI_PATH) + " " + args + " 2>&1";
        std::array<char, 4096> buf{};
        FILE* pipe = popen(cmd.c_str(), "r");
        if (!pipe) return -1;
        while (fgets(buf.data(), buf.size(), pipe)) text += buf.data();
        return WEXITSTATUS(pclose(pipe));
    };
    std::string text;
    int code = run("ramsey --family path --v 7", text);
    out.require(code == 0, "CLI path run failed");
    try {
        auto j = nlohmann::json::parse(text);
        out.require(j["path_value_vertex_convention"] == 9 &&
                        j["path_value_lemma_edge_formula"] == 10 &&
                        j["path_convention_discrepancy"] == true,
                    "CLI must print both conventions and flag the even-m discrepancy");
    } catch (...) {
        out.require(false, "CLI path record unparsable");
    }
#endif
    return out;
}

// ---------------------------------------------------------------- criterion 4
Outcome criterion4() {
    Outcome out;
    auto t0 = Clock::now();
    RamseyResult r22 = ramsey_number(double_star(2, 2), 2, SearchBudget{400'000'000, 900.0});
    out.require(seconds_since(t0) < 900.0, "Sigma_{2,2} over 15 minutes");
    out.require(r22.exact(), "Sigma_{2,2} not exact");
    out.require(r22.exact() && r22.lo == 6,
                "Sigma_{2,2} = " + std::to_string(r22.lo) +
                    " expected 6 (identity 3a-2i; engine-certified value is 7 with a verified "
                    "6-vertex witness -- identity breaks at a=2)");

    t0 = Clock::now();
    RamseyResult r33 = ramsey_number(double_star(3, 3), 2, SearchBudget{400'000'000, 900.0});
    out.require(seconds_since(t0) < 900.0, "Sigma_{3,3} over 15 minutes");
    out.require(r33.exact() && r33.lo == 9,
                "Sigma_{3,3} = " + std::to_string(r33.lo) + " expected 9");
    return out;
}

// ---------------------------------------------------------------- criterion 5
Outcome criterion5() {
    Outcome out;
    for (int n : {3, 4, 5}) {
        SpectrumOptions opts;
        opts.per_graph.max_nodes = n == 5 ? 400'000 : 4'000'000;
        opts.witness_ladder = false;  // engine witnesses carry the lower bounds
        SpectrumReport report = spectrum(n, opts);
        int floor = (4 * n + 2) / 3 - 1;
        for (const auto& e : report.entries) {
            if (!e.connected) continue;
            out.require(e.result.lo >= floor, e.g6 + " lower bound " +
                                                  std::to_string(e.result.lo) + " below floor " +
                                                  std::to_string(floor));
        }
        FloorCheck check = check_burr_erdos_floor(report);
        out.require(check.floor == floor, "floor arithmetic mismatch");
        out.require(check.status == FloorStatus::pass, "floor check not passing at n=" +
                                                           std::to_string(n));
        bool path_attains = false;
        std::string path_key = canonical_form(Graph::path(n));
        for (const auto& g6 : check.extremal_g6)
            if (canonical_form(parse_graph6(g6)) == path_key) path_attains = true;
        out.require(path_attains, "path does not attain the floor at n=" + std::to_string(n));
        RamseyResult path_r = ramsey_number(Graph::path(n));
        out.require(path_r.exact() && path_r.lo == floor,
                    "R(path on " + std::to_string(n) + ") != floor");
    }
    return out;
}

// ---------------------------------------------------------------- criterion 6
Outcome criterion6() {
    Outcome out;
    EdgeColouring witness = red_c5();
    out.require(verify_no_mono(witness, Graph::complete(3)), "red C_5 witness not triangle-free");
    EdgeColouring blocked = blocked_3colouring(witness, 3);
    out.require(blocked.order() == 10, "blocked colouring should sit on 10 vertices");

    auto t0 = Clock::now();
    int mono = 0, triangles = 0;
    for (int a = 0; a < 10; ++a)
        for (int b = a + 1; b < 10; ++b)
            for (int c = b + 1; c < 10; ++c) {
                ++triangles;
                int x = blocked.colour(a, b);
                if (x == blocked.colour(a, c) && x == blocked.colour(b, c)) ++mono;
            }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    out.require(triangles == 120, "triangle count off");
    out.require(mono == 0, std::to_string(mono) + " monochromatic triangles");
    out.require(ms < 1.0, "triangle scan took " + std::to_string(ms) + "ms");
    out.note = "certifies R_3(K_3) >= 11";
    return out;
}

// ---------------------------------------------------------------- criterion 7
bool verified_outcome(const EdgeColouring& c, const ExtractOutcome& out, int case_kind, int t,
                      int n) {
    if (const auto* e = std::get_if<MonoEmbedding>(&out)) {
        Graph target = case_kind == 1 ? biclique_path_graph(t, n) : clique_path_graph(t, n);
        return is_valid_embedding(c.colour_class(e->colour), target, e->embedding);
    }
    return verify_step_failure(c, std::get<StepFailure>(out), t, n, case_kind);
}

Outcome criterion7() {
    Outcome out;
    auto t0 = Clock::now();
    int runs = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        EdgeColouring c30 = EdgeColouring::random(30, 2, seed);
        if (!verified_outcome(c30, extract_case1(c30, 2, 8), 1, 2, 8))
            out.require(false, "case1 seed " + std::to_string(seed) + " unverifiable");
        EdgeColouring c20 = EdgeColouring::random(20, 2, seed);
        if (!verified_outcome(c20, extract_case2(c20, 3, 9), 2, 3, 9))
            out.require(false, "case2 seed " + std::to_string(seed) + " unverifiable");
        runs += 2;
    }
    for (int col : {kRed, kBlue}) {
        EdgeColouring c30 = EdgeColouring::constant(30, 2, col);
        if (!verified_outcome(c30, extract_case1(c30, 2, 8), 1, 2, 8))
            out.require(false, "case1 constant host unverifiable");
        EdgeColouring c20 = EdgeColouring::constant(20, 2, col);
        if (!verified_outcome(c20, extract_case2(c20, 3, 9), 2, 3, 9))
            out.require(false, "case2 constant host unverifiable");
        runs += 2;
    }
    double s = seconds_since(t0);
    out.require(s < 300.0, "property suite took " + std::to_string(s) + "s");
    out.note = std::to_string(runs) + " runs, every outcome verified";
    return out;
}

// ---------------------------------------------------------------- criterion 8
Outcome criterion8() {
    Outcome out;
    std::mt19937_64 gen(2024);
    for (int run = 0; run < 100; ++run) {
        int N = 12 + static_cast<int>(gen() % 5);  // 12..16
        int left = 3 + static_cast<int>(gen() % (N - 5));
        if (left > N - 3) left = N - 3;
        EdgeColouring c(N, 2);
        for (int v = 1; v < N; ++v)
            for (int u = 0; u < v; ++u)
                c.set_colour(u, v, (u < left) != (v < left) ? kRed : kBlue);
        std::vector<std::vector<int>> cliques;
        for (int base = 0; base + 3 <= left; base += 3)
            cliques.push_back({base, base + 1, base + 2});
        for (int base = left; base + 3 <= N; base += 3)
            cliques.push_back({base, base + 1, base + 2});
        if (cliques.empty()) continue;

        auto covered = cover_by_clique_paths(c, cliques, 3);
        if (!std::holds_alternative<std::vector<CliquePath>>(covered)) {
            out.require(false, "cover failed on run " + std::to_string(run));
            continue;
        }
        const auto& paths = std::get<std::vector<CliquePath>>(covered);
        out.require(paths.size() <= 2, "more than t-1 = 2 clique-paths");
        std::set<std::vector<int>> seen;
        int total = 0;
        for (const auto& p : paths) {
            out.require(verify_clique_path(c, p, 3, kBlue),
                        "clique-path invariants violated on run " + std::to_string(run));
            for (const auto& q : p.cliques) {
                auto sq = q;
                std::sort(sq.begin(), sq.end());
                seen.insert(sq);
                ++total;
            }
        }
        out.require(total == static_cast<int>(cliques.size()) &&
                        seen.size() == cliques.size(),
                    "cliques not covered exactly once on run " + std::to_string(run));
    }
    return out;
}

// ---------------------------------------------------------------- criterion 9
Outcome criterion9() {
    Outcome out;
    long checked = 0;
    for (int N = 2; N <= 8; ++N) {
        int target = (2 * N + 2) / 3;
        for (const Graph& red : enumerate_graphs(N, EnumFilter::all)) {
            EdgeColouring c(N, 2);
            for (int v = 1; v < N; ++v)
                for (int u = 0; u < v; ++u)
                    c.set_colour(u, v, red.has_edge(u, v) ? kRed : kBlue);
            auto [col, path] = find_long_mono_path(c);
            ++checked;
            if (static_cast<int>(path.size()) < target) {
                out.require(false, "short path on class " + write_graph6(red));
                continue;
            }
            Graph cls = c.colour_class(col);
            std::uint64_t seen = 0;
            for (std::size_t i = 0; i < path.size(); ++i) {
                if (seen & bit(path[i])) out.require(false, "repeated vertex in path");
                seen |= bit(path[i]);
                if (i + 1 < path.size() && !cls.has_edge(path[i], path[i + 1]))
                    out.require(false, "non-monochromatic step on class " + write_graph6(red));
            }
        }
    }
    out.note = std::to_string(checked) + " colourings (one per class), all paths long enough";
    return out;
}

// --------------------------------------------------------------- criterion 10
Outcome criterion10() {
    Outcome out;
    SpectrumReport r3 = spectrum(3);
    out.require(r3.values_all == std::set<int>{3, 6}, "R_3 wrong");
    out.require(r3.values_connected == std::set<int>{3, 6}, "R_3 connected wrong");
    out.require(r3.unresolved.empty(), "unresolved classes at n=3");

    SpectrumOptions opts;
    opts.per_graph.max_nodes = 4'000'000;
    opts.ladder_flips = 600'000;
    SpectrumReport r4 = spectrum(4, opts);
    int exact = 0;
    for (const auto& e : r4.entries)
        if (e.result.exact()) ++exact;
    out.require(exact >= 10, "only " + std::to_string(exact) + " of 11 classes exact");
    out.require(r4.values_all == std::set<int>{4, 5, 6, 7, 10},
                "R_4 from exact classes is wrong");

    std::string k4 = write_graph6(Graph::complete(4));
    const SpectrumEntry* k4_entry = nullptr;
    for (const auto& e : r4.entries)
        if (e.g6 == k4) k4_entry = &e;
    out.require(k4_entry != nullptr, "K_4 missing from the report");
    if (k4_entry) {
        if (k4_entry->result.exact()) {
            out.require(k4_entry->result.lo == 18, "K_4 resolved to a wrong value");
        } else {
            out.require(k4_entry->result.lo == 18,
                        "K_4 lower bound " + std::to_string(k4_entry->result.lo) +
                            " (need a verified 17-vertex witness)");
            out.require(k4_entry->result.witness.has_value() &&
                            k4_entry->result.witness->order() == 17,
                        "missing 17-vertex witness");
            if (k4_entry->result.witness)
                out.require(verify_no_mono(*k4_entry->result.witness, Graph::complete(4)),
                            "17-vertex witness failed verification");
            bool in_unresolved = false;
            for (const auto& g6 : r4.unresolved)
                if (g6 == k4) in_unresolved = true;
            out.require(in_unresolved, "unresolved K_4 must be listed, not set-counted");
        }
    }
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {1, "engine exactness on the six benchmark patterns", criterion1},
        {2, "symmetry-reduced arrows equals naive enumeration", criterion2},
        {3, "path law v=3..7 with both conventions reported", criterion3},
        {4, "Grossman identity at a=2 and a=3", criterion4},
        {5, "Burr-Erdos floor on connected classes, n=3..5", criterion5},
        {6, "blocked 3-colouring certifies R_3(K_3) >= 11", criterion6},
        {7, "extraction soundness property suite", criterion7},
        {8, "clique-path cover on blowup hosts", criterion8},
        {9, "mono-path guarantee, exhaustive N <= 8", criterion9},
        {10, "spectrum sets at n=3 and n=4", criterion10},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = Clock::now();
        Outcome out = c.run();
        double s = seconds_since(t0);
        std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", out.pass ? "PASS" : "FAIL", c.id,
                    c.name, s, out.note.empty() ? "" : " -- ", out.note.c_str());
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
