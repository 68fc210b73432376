#include "ramsey/constructions.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "ramsey/version.hpp"

namespace ramsey {

Graph biclique_path_graph(int t, int n) {
    if (t < 1 || n < 2 * t)
        throw std::invalid_argument("biclique_path_graph: need n >= 2t >= 2");
    Graph g(n);
    for (int u = 0; u < t; ++u)
        for (int v = t; v < 2 * t; ++v) g.add_edge(u, v);
    if (n > 2 * t) g.add_edge(0, 2 * t);
    for (int v = 2 * t; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph clique_path_graph(int t, int n) {
    if (t < 1 || n < t) throw std::invalid_argument("clique_path_graph: need n >= t >= 1");
    Graph g(n);
    for (int u = 0; u < t; ++u)
        for (int v = u + 1; v < t; ++v) g.add_edge(u, v);
    if (n > t) g.add_edge(0, t);
    for (int v = t; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph multipartite_path_graph(int k, int t, int n) {
    if (k < 2 || t < 1 || n < k * t)
        throw std::invalid_argument("multipartite_path_graph: need n >= k*t, k >= 2, t >= 1");
    Graph g(n);
    for (int u = 0; u < k * t; ++u)
        for (int v = u + 1; v < k * t; ++v)
            if (u / t != v / t) g.add_edge(u, v);
    if (n > k * t) g.add_edge(0, k * t);
    for (int v = k * t; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph double_star(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("double_star: need a, b >= 1");
    Graph g(a + b + 2);
    for (int i = 1; i <= a; ++i) g.add_edge(0, i);
    for (int i = 1; i <= b; ++i) g.add_edge(a + 1, a + 1 + i);
    return g;
}

Graph clique_plus_isolated(int t, int n) {
    if (t < 1 || n < t) throw std::invalid_argument("clique_plus_isolated: need n >= t >= 1");
    Graph g(n);
    for (int u = 0; u < t; ++u)
        for (int v = u + 1; v < t; ++v) g.add_edge(u, v);
    return g;
}

std::string to_string(Family f) { return f == Family::clique ? "clique" : "biclique"; }

Graph family_graph(Family f, int t) {
    if (t < 1) throw std::invalid_argument("family_graph: need t >= 1");
    return f == Family::clique ? Graph::complete(t) : Graph::complete_bipartite(t, t);
}

OracleInsufficient::OracleInsufficient(Family family_, int t_, int lo_, std::optional<int> hi_)
    : std::runtime_error("oracle holds only the interval [" + std::to_string(lo_) + ", " +
                         (hi_ ? std::to_string(*hi_) : std::string("?")) + "] for R(" +
                         to_string(family_) + ", t=" + std::to_string(t_) + ")"),
      family(family_), t(t_), lo(lo_), hi(hi_) {}

RamseyOracle::RamseyOracle(SearchBudget per_entry_budget, EngineOptions opts)
    : budget_(per_entry_budget), opts_(opts) {}

namespace {

std::optional<int> known_lower(Family f, int t) {
    // sqrt(2)^t for cliques, 2^{t/2} for bicliques; both round up.
    long double v = std::pow(2.0L, t / 2.0L);
    if (v > 1e18L) return std::nullopt;
    return static_cast<int>(std::min<long double>(v < 1 ? 1 : std::ceil(v), 1e9L));
}

std::optional<int> known_upper(Family f, int t) {
    if (f != Family::clique || t > 15) return std::nullopt;  // 4^t in int range
    long long v = 1;
    for (int i = 0; i < t; ++i) v *= 4;
    return static_cast<int>(v);
}

const char* known_bound_name(Family f) {
    return f == Family::clique ? "clique_exponential_bounds" : "biclique_probabilistic_lower";
}

}  // namespace

void RamseyOracle::attach_ledger(const std::filesystem::path& path) {
    std::lock_guard<std::mutex> lk(mu_);
    ledger_ = path;
    std::ifstream in(path);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::string fam, hi_tok, cert, version;
        int t, lo;
        if (!(row >> fam >> t >> lo >> hi_tok >> cert >> version)) continue;
        Family f;
        if (fam == "clique")
            f = Family::clique;
        else if (fam == "biclique")
            f = Family::biclique;
        else
            continue;
        RamseyResult r;
        r.lo = lo;
        if (hi_tok != "-") r.hi = std::stoi(hi_tok);
        if (cert == "proved_by_search")
            r.upper_certificate = UpperCertificate::proved_by_search;
        else if (cert == "budget_exhausted")
            r.upper_certificate = UpperCertificate::budget_exhausted;
        else {
            r.upper_certificate = UpperCertificate::known_bound;
            r.bound_name = cert;
        }
        auto key = std::make_pair(f, t);
        auto it = table_.find(key);
        // Keep the better-resolved entry on duplicates.
        if (it == table_.end() || (!it->second.exact() && r.exact())) table_[key] = std::move(r);
    }
}

void RamseyOracle::append_to_ledger(Family f, int t, const RamseyResult& r) {
    if (!ledger_) return;
    std::ofstream out(*ledger_, std::ios::app);
    std::string cert = r.upper_certificate == UpperCertificate::known_bound
                           ? r.bound_name
                           : to_string(r.upper_certificate);
    out << to_string(f) << " " << t << " " << r.lo << " " << (r.hi ? std::to_string(*r.hi) : "-")
        << " " << cert << " " << kEngineVersion << "\n";
}

const RamseyResult& RamseyOracle::get(Family f, int t) {
    std::lock_guard<std::mutex> lk(mu_);
    auto key = std::make_pair(f, t);
    if (auto it = table_.find(key); it != table_.end()) return it->second;

    RamseyResult r = ramsey_number(family_graph(f, t), 2, budget_, opts_);
    if (!r.exact()) {
        // Literature bounds may seed the interval, never an exact value.
        if (auto kl = known_lower(f, t); kl && *kl > r.lo) {
            r.lo = *kl;
            r.witness.reset();  // witness certifies the engine's lo only
            r.upper_certificate = UpperCertificate::known_bound;
            r.bound_name = known_bound_name(f);
        }
        if (auto ku = known_upper(f, t); ku && (!r.hi || *ku < *r.hi)) {
            r.hi = *ku;
            r.upper_certificate = UpperCertificate::known_bound;
            r.bound_name = known_bound_name(f);
        }
    }
    append_to_ledger(f, t, r);
    return table_[key] = std::move(r);
}

void RamseyOracle::put(Family f, int t, RamseyResult result) {
    std::lock_guard<std::mutex> lk(mu_);
    append_to_ledger(f, t, result);
    table_[std::make_pair(f, t)] = std::move(result);
}

namespace {

int select_t(Family family, std::uint64_t fn_value, RamseyOracle& oracle,
             bool strictly_greater) {
    int t_cap = family == Family::biclique ? kMaxVertices / 2 : kMaxVertices;
    for (int t = 1; t <= t_cap; ++t) {
        const RamseyResult& e = oracle.get(family, t);
        if (!e.exact()) throw OracleInsufficient(family, t, e.lo, e.hi);
        std::uint64_t value = static_cast<std::uint64_t>(e.lo);
        if (strictly_greater ? value > fn_value : value >= fn_value) return t;
    }
    throw std::domain_error("select_t: target beyond the dense engine's family range");
}

}  // namespace

int select_t_case1(std::uint64_t fn_value, RamseyOracle& oracle) {
    if (fn_value < 1) throw std::invalid_argument("select_t_case1: need fn_value >= 1");
    return select_t(Family::biclique, fn_value, oracle, /*strictly_greater=*/true);
}

int select_t_case2(std::uint64_t fn_value, RamseyOracle& oracle) {
    if (fn_value < 1) throw std::invalid_argument("select_t_case2: need fn_value >= 1");
    return select_t(Family::clique, fn_value, oracle, /*strictly_greater=*/false);
}

std::string to_string(CaseKind c) { return c == CaseKind::case1 ? "case1" : "case2"; }

std::string to_string(Regime r) {
    switch (r) {
        case Regime::in_case1: return "in_case1";
        case Regime::in_case2: return "in_case2";
        case Regime::out_of_regime: return "out_of_regime";
    }
    return "?";
}

bool within_case1_range(std::uint64_t f, int n) {
    if (f == 0) return false;
    if (n >= 127) return true;  // 2^n beyond any uint64 f to the 8th power
    if (f > 65535) return false;  // f^8 >= 2^128 > 2^n for n <= 126
    unsigned __int128 f8 = 1;
    for (int i = 0; i < 8; ++i) f8 *= f;
    return f8 <= (static_cast<unsigned __int128>(1) << n);
}

std::uint64_t case2_lower_threshold(int n) {
    if (n < 2) return 1;
    if ((n & (n - 1)) == 0) {
        int k = std::countr_zero(static_cast<unsigned>(n));
        return static_cast<std::uint64_t>(2) * n * k;
    }
    // 2 n log2 n is irrational for non-powers; long double has ~1e-18
    // relative error, far below the distance to the nearest integer here.
    return static_cast<std::uint64_t>(ceill(2.0L * n * log2l(static_cast<long double>(n))));
}

namespace {

Construction attempt_case(CaseKind kind, std::uint64_t fn, int n, RamseyOracle& oracle,
                          Regime regime) {
    if (kind == CaseKind::case1) {
        int t = select_t_case1(fn, oracle);
        return Construction{biclique_path_graph(t, n), CaseKind::case1, regime, t, fn};
    }
    int t = select_t_case2(fn, oracle);
    return Construction{clique_path_graph(t, n), CaseKind::case2, regime, t, fn};
}

}  // namespace

Construction build_G(const std::map<int, std::uint64_t>& f_values, int n, RamseyOracle& oracle,
                     std::optional<CaseKind> forced) {
    auto it = f_values.find(n);
    if (it == f_values.end()) throw std::invalid_argument("build_G: f(n) not provided");
    std::uint64_t prev = 0;
    for (const auto& [k, v] : f_values) {
        if (v < prev) throw std::invalid_argument("build_G: f must be non-decreasing");
        prev = v;
    }
    std::uint64_t fn = it->second;
    if (fn < static_cast<std::uint64_t>(n))
        throw std::invalid_argument("build_G: need n <= f(n)");

    Regime regime = within_case1_range(fn, n)  ? Regime::in_case1
                    : fn >= case2_lower_threshold(n) ? Regime::in_case2
                                                     : Regime::out_of_regime;
    if (forced) return attempt_case(*forced, fn, n, oracle, regime);

    switch (regime) {
        case Regime::in_case1: return attempt_case(CaseKind::case1, fn, n, oracle, regime);
        case Regime::in_case2: return attempt_case(CaseKind::case2, fn, n, oracle, regime);
        case Regime::out_of_regime: break;
    }
    // Tiny n can fall between the asymptotic ranges; try the paper's cases
    // in order and report the regime rather than guessing a new rule.
    std::string why;
    for (CaseKind kind : {CaseKind::case1, CaseKind::case2}) {
        try {
            return attempt_case(kind, fn, n, oracle, Regime::out_of_regime);
        } catch (const std::exception& e) {
            why += to_string(kind) + ": " + e.what() + "; ";
        }
    }
    throw OutOfRegime("build_G: f(" + std::to_string(n) + ") = " + std::to_string(fn) +
                      " lies in neither range and both constructions failed (" + why + ")");
}

}  // namespace ramsey
