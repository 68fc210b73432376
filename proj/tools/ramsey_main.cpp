#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsey/canonical.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/engine.hpp"
#include "ramsey/extraction.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/lower_bounds.hpp"
#include "ramsey/records.hpp"
#include "ramsey/spectrum.hpp"
#include "ramsey/version.hpp"

using nlohmann::json;
using namespace ramsey;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitValidation = 2;  // interval result / failed verification / step failure
constexpr int kExitOracle = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

struct PatternArgs {
    std::string g6;
    std::string family;
    int v = 0, t = 0, a = 0, b = 0;

    Graph resolve(std::string* shown_g6) const {
        Graph g;
        if (!g6.empty()) {
            g = parse_graph6(g6);
        } else if (family == "path") {
            g = Graph::path(v);
        } else if (family == "cycle") {
            g = Graph::cycle(v);
        } else if (family == "clique") {
            g = Graph::complete(t);
        } else if (family == "biclique") {
            g = Graph::complete_bipartite(t, t);
        } else if (family == "double_star") {
            g = double_star(a, b);
        } else if (family == "empty") {
            g = Graph(v);
        } else {
            throw std::runtime_error("no pattern given (use --pattern or --family)");
        }
        if (shown_g6) *shown_g6 = write_graph6(g);
        return g;
    }
};

void attach_cache(RamseyOracle& oracle) {
    if (const char* dir = std::getenv("RAMSEY_CACHE"))
        oracle.attach_ledger(std::filesystem::path(dir) / "oracle.txt");
}

std::pair<long long, long long> parse_ratio(const std::string& s) {
    if (auto slash = s.find('/'); slash != std::string::npos)
        return {std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        long long den = 1;
        for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
        return {std::stoll(digits), den};
    }
    return {std::stoll(s), 1};
}

int cmd_ramsey(const PatternArgs& pat, int colours, const SearchBudget& budget,
               const EngineOptions& opts, const std::string& witness_out) {
    std::string g6;
    Graph pattern = pat.resolve(&g6);
    RamseyResult result = ramsey_number(pattern, colours, budget, opts);

    json j = json::parse(result_record_json(g6, colours, result));
    if (pat.family == "path") {
        int v = pat.v, m = v - 1;
        j["family"] = "path";
        j["path_vertices"] = v;
        j["path_edges"] = m;
        j["path_value_vertex_convention"] = path_ramsey_vertices(v);
        j["path_value_lemma_edge_formula"] = path_ramsey_edge_formula(m);
        j["path_convention_discrepancy"] =
            path_ramsey_vertices(v) != path_ramsey_edge_formula(m);
    }
    std::cout << j.dump() << "\n";

    if (!witness_out.empty() && result.witness) {
        write_file(witness_out,
                   write_colouring(*result.witness,
                                   {"pattern-free witness: pattern=" + g6 +
                                        " r=" + std::to_string(colours),
                                    "implies R_" + std::to_string(colours) + "(" + g6 +
                                        ") >= " + std::to_string(result.witness->order() + 1)}));
    }
    return result.exact() ? kExitOk : kExitValidation;
}

int cmd_construct(const std::string& preset, const std::string& f_file, int n,
                  const std::string& variant, int k, int t_arg, SearchBudget oracle_budget) {
    if (variant == "multipartite") {
        Graph g = multipartite_path_graph(k, t_arg, n);
        json j;
        j["kind"] = "construction";
        j["graph6"] = write_graph6(g);
        j["variant"] = "multipartite";
        j["k"] = k;
        j["t"] = t_arg;
        j["n"] = n;
        j["chromatic_number"] = chromatic_number(g);
        std::cout << j.dump() << "\n";
        return kExitOk;
    }

    std::map<int, std::uint64_t> f;
    if (!f_file.empty()) {
        std::istringstream in(read_file(f_file));
        int key;
        std::uint64_t val;
        while (in >> key >> val) f[key] = val;
    } else if (preset == "f=n") {
        f[n] = static_cast<std::uint64_t>(n);
    } else if (preset == "f=2nlog2n") {
        f[n] = case2_lower_threshold(n);
    } else if (preset == "f=2^n/8") {
        f[n] = static_cast<std::uint64_t>(std::max<long double>(
            1.0L, std::floor(std::pow(2.0L, n / 8.0L))));
    } else {
        throw std::runtime_error("unknown preset " + preset);
    }

    RamseyOracle oracle(oracle_budget);
    attach_cache(oracle);
    std::optional<CaseKind> forced;
    if (variant == "case1") forced = CaseKind::case1;
    if (variant == "case2") forced = CaseKind::case2;

    try {
        Construction made = build_G(f, n, oracle, forced);
        json j;
        j["kind"] = "construction";
        j["graph6"] = write_graph6(made.graph);
        j["case"] = to_string(made.used);
        j["regime"] = to_string(made.regime);
        j["t"] = made.t;
        j["n"] = n;
        j["fn"] = made.fn;
        json certs = json::array();
        Family fam = made.used == CaseKind::case1 ? Family::biclique : Family::clique;
        for (int t = 1; t <= made.t; ++t) {
            const RamseyResult& r = oracle.get(fam, t);
            certs.push_back({{"family", to_string(fam)},
                             {"t", t},
                             {"lo", r.lo},
                             {"hi", r.hi ? json(*r.hi) : json(nullptr)},
                             {"certificate", to_string(r.upper_certificate)}});
        }
        j["oracle"] = certs;
        std::cout << j.dump() << "\n";
        return kExitOk;
    } catch (const OracleInsufficient& e) {
        json j;
        j["kind"] = "oracle_insufficient";
        j["family"] = to_string(e.family);
        j["t"] = e.t;
        j["lo"] = e.lo;
        j["hi"] = e.hi ? json(*e.hi) : json(nullptr);
        j["error"] = e.what();
        std::cout << j.dump() << "\n";
        return kExitOracle;
    } catch (const OutOfRegime& e) {
        json j;
        j["kind"] = "out_of_regime";
        j["error"] = e.what();
        std::cout << j.dump() << "\n";
        return kExitOracle;
    }
}

int cmd_extract(const std::string& col_file, int random_n, std::uint64_t seed, bool seed_set,
                int case_kind, int t, int n, const std::string& trace_out) {
    EdgeColouring host = [&]() {
        if (!col_file.empty()) return parse_colouring(read_file(col_file));
        if (random_n <= 0) throw std::runtime_error("need --colouring or --random");
        if (!seed_set) throw std::runtime_error("--random requires --seed");
        return EdgeColouring::random(random_n, 2, seed);
    }();

    ExtractionTrace trace;
    ExtractOutcome out = case_kind == 1 ? extract_case1(host, t, n, &trace)
                                        : extract_case2(host, t, n, &trace);
    std::string text = trace_to_json(trace, host, out);
    std::cout << text;
    if (!trace_out.empty()) write_file(trace_out, text);
    return std::holds_alternative<MonoEmbedding>(out) ? kExitOk : kExitValidation;
}

int cmd_witness(const std::string& mode, int t, int N, std::uint64_t seed, bool seed_set,
                int tries, std::uint64_t flips, const std::string& pattern_g6,
                const std::string& h_witness_file, int chi, const std::string& out_file) {
    std::optional<EdgeColouring> found;
    std::string pattern_name;
    int r = 2;

    if (mode == "random-biclique") {
        if (!seed_set) throw std::runtime_error("random-biclique requires --seed");
        pattern_name = write_graph6(Graph::complete_bipartite(t, t));
        found = random_biclique_witness(t, N, seed, tries);
    } else if (mode == "anneal") {
        if (!seed_set) throw std::runtime_error("anneal requires --seed");
        Graph pattern = parse_graph6(pattern_g6);
        pattern_name = write_graph6(pattern);
        found = local_search_witness(pattern, N, seed, flips);
    } else if (mode == "blocked") {
        EdgeColouring h_witness = parse_colouring(read_file(h_witness_file));
        EdgeColouring blocked = blocked_3colouring(h_witness, chi);
        r = blocked.colours();
        if (!pattern_g6.empty()) {
            pattern_name = write_graph6(parse_graph6(pattern_g6));
            if (!verify_no_mono(blocked, parse_graph6(pattern_g6))) {
                std::cerr << "blocked colouring contains a monochromatic " << pattern_name
                          << "\n";
                return kExitValidation;
            }
        }
        found = std::move(blocked);
    } else {
        throw std::runtime_error("unknown mode " + mode);
    }

    if (!found) {
        std::cout << "no witness found\n";
        return kExitValidation;
    }
    std::vector<std::string> header;
    if (!pattern_name.empty()) {
        header.push_back("pattern-free witness: pattern=" + pattern_name +
                         " r=" + std::to_string(r));
        header.push_back("implies R_" + std::to_string(r) + "(" + pattern_name +
                         ") >= " + std::to_string(found->order() + 1));
    }
    std::string text = write_colouring(*found, header);
    if (out_file.empty())
        std::cout << text;
    else
        write_file(out_file, text);
    return kExitOk;
}

int cmd_spectrum(int n, const SpectrumOptions& opts, const std::string& ratio, int gap_lo,
                 int gap_hi) {
    SpectrumReport report = spectrum(n, opts);
    std::cout << to_table(report);

    FloorCheck floor = check_burr_erdos_floor(report);
    std::cout << "burr_erdos_floor = " << floor.floor << " status = "
              << (floor.status == FloorStatus::pass
                      ? "pass"
                      : floor.status == FloorStatus::fail ? "fail" : "inconclusive");
    std::cout << " attained_by =";
    for (const auto& g6 : floor.extremal_g6) std::cout << " " << g6;
    std::cout << "\n";

    if (!ratio.empty()) {
        auto [num, den] = parse_ratio(ratio);
        int lo = gap_lo > 0 ? gap_lo : n;
        int hi = gap_hi > 0 ? gap_hi
                            : (report.values_connected.empty() ? n
                                                               : *report.values_connected.rbegin());
        auto gaps = find_c_gaps(report.values_connected, num, den, lo, hi);
        std::cout << "c_gaps(" << ratio << ", [" << lo << ", " << hi << "]) =";
        for (int a : gaps) std::cout << " " << a;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& file, const std::string& pattern_g6) {
    std::string text = read_file(file);
    std::string message;
    std::optional<std::string> pat;
    if (!pattern_g6.empty()) pat = pattern_g6;
    VerifyStatus st = verify_artifact(text, pat, &message);
    std::cout << message << "\n";
    switch (st) {
        case VerifyStatus::valid: return kExitOk;
        case VerifyStatus::invalid: return kExitValidation;
        case VerifyStatus::parse_error: return kExitParse;
    }
    return kExitParse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact small-scale Ramsey numbers: search engine, constructions, witnesses"};
    app.set_version_flag("--version", std::string(kEngineVersion));
    app.require_subcommand(1);

    SearchBudget budget;
    EngineOptions eopts;
    PatternArgs pat;
    int colours = 2;
    std::string witness_out;

    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget-nodes", budget.max_nodes, "backtracking node limit");
        sub->add_option("--budget-seconds", budget.max_seconds, "wall-clock limit");
        sub->add_option("--jobs", eopts.jobs, "engine worker count");
        sub->add_option("--iso-depth", eopts.iso_depth, "isomorph-rejection pair depth");
    };

    CLI::App* c_ramsey = app.add_subcommand("ramsey", "compute R_r(pattern) with certificates");
    c_ramsey->add_option("--pattern", pat.g6, "pattern as graph6");
    c_ramsey->add_option("--family", pat.family, "path|cycle|clique|biclique|double_star|empty");
    c_ramsey->add_option("--v", pat.v, "vertex count for path/cycle/empty");
    c_ramsey->add_option("--t", pat.t, "parameter for clique/biclique");
    c_ramsey->add_option("--a", pat.a, "first star size");
    c_ramsey->add_option("--b", pat.b, "second star size");
    c_ramsey->add_option("--colours", colours, "number of colours (2 or 3)");
    c_ramsey->add_option("--emit-witness", witness_out, "write the lo-1 witness colouring here");
    add_budget(c_ramsey);

    std::string preset, f_file, variant = "auto";
    int n_arg = 0, k_arg = 0, t_arg = 0;
    CLI::App* c_construct = app.add_subcommand("construct", "build G_n for a growth target f");
    c_construct->add_option("--preset", preset, "f=n | f=2nlog2n | f=2^n/8");
    c_construct->add_option("--f", f_file, "table file of lines: n f(n)");
    c_construct->add_option("--n", n_arg, "number of vertices")->required();
    c_construct->add_option("--variant", variant, "auto|case1|case2|multipartite");
    c_construct->add_option("--k", k_arg, "parts for multipartite");
    c_construct->add_option("--t", t_arg, "part size for multipartite");
    // per-oracle-entry defaults: hopeless probes (K_4, K_{3,3}) fail fast
    auto* cb_nodes = c_construct->add_option("--budget-nodes", budget.max_nodes,
                                             "per-oracle-entry node limit");
    auto* cb_secs = c_construct->add_option("--budget-seconds", budget.max_seconds,
                                            "per-oracle-entry wall limit");

    std::string col_file, trace_out;
    int random_n = 0, case_kind = 1, ex_t = 2, ex_n = 0;
    std::uint64_t seed = 0;
    CLI::App* c_extract = app.add_subcommand("extract", "run a proof-extraction pipeline");
    c_extract->add_option("--colouring", col_file, "host colouring file");
    c_extract->add_option("--random", random_n, "use random_colouring(N, 2, seed) as host");
    auto* seed_opt_e = c_extract->add_option("--seed", seed, "seed for --random");
    c_extract->add_option("--case", case_kind, "1 (biclique) or 2 (clique)")->required();
    c_extract->add_option("--t", ex_t, "clique/biclique parameter")->required();
    c_extract->add_option("--n", ex_n, "target order")->required();
    c_extract->add_option("--trace-out", trace_out, "write the trace JSON here");

    std::string w_mode, w_pattern, h_witness_file, out_file;
    int w_t = 2, w_N = 5, w_tries = 64, w_chi = 3;
    std::uint64_t w_flips = 2'000'000;
    CLI::App* c_witness = app.add_subcommand("witness", "lower-bound witness generators");
    c_witness->add_option("--mode", w_mode, "random-biclique|anneal|blocked")->required();
    c_witness->add_option("--t", w_t, "biclique parameter");
    c_witness->add_option("--N", w_N, "host order");
    auto* seed_opt_w = c_witness->add_option("--seed", seed, "search seed");
    c_witness->add_option("--tries", w_tries, "random tries");
    c_witness->add_option("--flips", w_flips, "local-search flip budget");
    c_witness->add_option("--pattern", w_pattern, "pattern graph6 (anneal/blocked check)");
    c_witness->add_option("--h-witness", h_witness_file, "2-colour witness file for blocked mode");
    c_witness->add_option("--chi", w_chi, "chromatic number of H for blocked mode");
    c_witness->add_option("--out", out_file, "output file (default stdout)");

    int sp_n = 3, gap_lo = 0, gap_hi = 0;
    std::string ratio;
    SpectrumOptions sp_opts;
    CLI::App* c_spectrum = app.add_subcommand("spectrum", "Ramsey spectrum sets for small n");
    c_spectrum->add_option("--n", sp_n, "vertex count (1..6)")->required();
    c_spectrum->add_option("--budget-nodes", sp_opts.per_graph.max_nodes, "per-class node limit");
    c_spectrum->add_option("--budget-seconds", sp_opts.per_graph.max_seconds,
                           "per-class wall limit");
    c_spectrum->add_option("--jobs", sp_opts.engine.jobs, "engine worker count");
    c_spectrum->add_option("--ladder-flips", sp_opts.ladder_flips,
                           "witness-search flips per order");
    c_spectrum->add_flag_callback("--no-ladder", [&] { sp_opts.witness_ladder = false; },
                                  "skip the witness ladder for unresolved classes");
    c_spectrum->add_option("--c", ratio, "report c-gaps for this ratio (e.g. 3/2 or 1.1)");
    c_spectrum->add_option("--gap-lo", gap_lo, "gap scan lower end (default n)");
    c_spectrum->add_option("--gap-hi", gap_hi, "gap scan upper end (default max of the set)");

    std::string v_file, v_pattern;
    CLI::App* c_verify = app.add_subcommand("verify", "replay an emitted certificate");
    c_verify->add_option("--file", v_file, "artifact file")->required();
    c_verify->add_option("--pattern", v_pattern, "pattern graph6 for bare colourings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (c_ramsey->parsed()) return cmd_ramsey(pat, colours, budget, eopts, witness_out);
        if (c_construct->parsed()) {
            if (cb_nodes->count() == 0) budget.max_nodes = 5'000'000;
            if (cb_secs->count() == 0) budget.max_seconds = 30.0;
            return cmd_construct(preset, f_file, n_arg, variant, k_arg, t_arg, budget);
        }
        if (c_extract->parsed())
            return cmd_extract(col_file, random_n, seed, seed_opt_e->count() > 0, case_kind,
                               ex_t, ex_n, trace_out);
        if (c_witness->parsed())
            return cmd_witness(w_mode, w_t, w_N, seed, seed_opt_w->count() > 0, w_tries, w_flips,
                               w_pattern, h_witness_file, w_chi, out_file);
        if (c_spectrum->parsed()) return cmd_spectrum(sp_n, sp_opts, ratio, gap_lo, gap_hi);
        if (c_verify->parsed()) return cmd_verify(v_file, v_pattern);
    } catch (const Graph6Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ColouringFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}
