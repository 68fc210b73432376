#include <doctest.h>

#include <array>

#include "naive_oracle.hpp"
#include "ramsey/canonical.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/engine.hpp"
#include "ramsey/lower_bounds.hpp"

using namespace ramsey;

namespace {

EdgeColouring c5_witness() {
    EdgeColouring c = EdgeColouring::constant(5, 2, kBlue);
    for (int i = 0; i < 5; ++i) c.set_colour(i, (i + 1) % 5, kRed);
    return c;
}

}  // namespace

TEST_CASE("find_mono_copy examples") {
    auto hit = find_mono_copy(EdgeColouring::constant(4, 2, kRed), Graph::complete(3));
    REQUIRE(hit.has_value());
    CHECK(hit->first == kRed);
    CHECK(is_valid_embedding(Graph::complete(4), Graph::complete(3), hit->second));

    CHECK_FALSE(find_mono_copy(c5_witness(), Graph::complete(3)).has_value());

    // R(K_3) = 6: every 2-colouring of K_6 has a monochromatic triangle.
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        CHECK(find_mono_copy(EdgeColouring::random(6, 2, seed), Graph::complete(3)).has_value());
}

TEST_CASE("find_mono_copy is deterministic: least colour then least embedding") {
    EdgeColouring c = EdgeColouring::constant(5, 2, kBlue);
    auto hit = find_mono_copy(c, Graph::complete(3));
    REQUIRE(hit.has_value());
    CHECK(hit->first == kBlue);
    CHECK(hit->second.map == std::vector<int>{0, 1, 2});
}

TEST_CASE("arrows examples") {
    CHECK(arrows(6, 2, Graph::complete(3)).outcome == ArrowsOutcome::arrows);

    auto at5 = arrows(5, 2, Graph::complete(3));
    CHECK(at5.outcome == ArrowsOutcome::witness);
    REQUIRE(at5.witness.has_value());
    CHECK(verify_no_mono(*at5.witness, Graph::complete(3)));
    // the only triangle-free 2-colouring of K_5 is the red/blue C_5 pair
    CHECK(at5.witness->colour_class(0).edge_count() == 5);
    CHECK(canonical_form(at5.witness->colour_class(0)) == canonical_form(Graph::cycle(5)));

    auto tiny = arrows(2, 2, Graph::complete(3));
    CHECK(tiny.outcome == ArrowsOutcome::witness);  // host smaller than pattern

    SearchBudget starved;
    starved.max_nodes = 4;
    CHECK(arrows(6, 2, Graph::complete(3), starved).outcome == ArrowsOutcome::unknown);
}

TEST_CASE("ramsey_number examples") {
    CHECK(ramsey_number(Graph::complete(3)).lo == 6);
    CHECK(ramsey_number(Graph::complete(3)).exact());
    CHECK(ramsey_number(Graph::path(4)).lo == 5);
    CHECK(ramsey_number(Graph::complete(1)).lo == 1);
    CHECK(ramsey_number(Graph(4)).lo == 4);  // empty pattern: R = |V|

    RamseyResult r = ramsey_number(Graph::complete(3));
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->order() == 5);
    CHECK(verify_no_mono(*r.witness, Graph::complete(3)));
    CHECK(r.upper_certificate == UpperCertificate::proved_by_search);
}

TEST_CASE("budget exhaustion yields an interval, never a guess") {
    SearchBudget small;
    small.max_nodes = 20'000;
    RamseyResult r = ramsey_number(Graph::complete(4), 2, small);
    CHECK_FALSE(r.exact());
    CHECK_FALSE(r.hi.has_value());
    CHECK(r.upper_certificate == UpperCertificate::budget_exhausted);
    CHECK(r.lo >= 5);
    if (r.witness) CHECK(verify_no_mono(*r.witness, Graph::complete(4)));
}

TEST_CASE("path oracle values and the edge-convention formula") {
    CHECK(path_ramsey_vertices(4) == 5);
    CHECK(path_ramsey_vertices(3) == 3);
    CHECK(path_ramsey_vertices(7) == 9);
    CHECK(path_ramsey_edge_formula(3) == 5);  // odd edge count agrees
    CHECK(path_ramsey_edge_formula(6) == 10); // even edge count disagrees with 9
    CHECK_THROWS_AS(path_ramsey_vertices(1), std::invalid_argument);

    for (int v = 3; v <= 5; ++v)
        CHECK(ramsey_number(Graph::path(v)).lo == path_ramsey_vertices(v));
}

TEST_CASE("three-colour arrowing: R_3(K_3) is between 11 and 17") {
    auto at10 = arrows(10, 3, Graph::complete(3), SearchBudget{2'000'000, 60.0});
    if (at10.outcome == ArrowsOutcome::witness)
        CHECK(verify_no_mono(*at10.witness, Graph::complete(3)));
    CHECK(at10.outcome != ArrowsOutcome::arrows);
}

TEST_CASE("symmetry-reduced arrows equals naive enumeration on a small slice") {
    // patterns on <= 3 vertices, all N <= 6 (the full sweep runs in the
    // acceptance suite)
    for (int pn = 1; pn <= 3; ++pn)
        for (const Graph& pattern : enumerate_graphs(pn, EnumFilter::all))
            for (int N = 1; N <= 6; ++N) {
                bool mine = arrows(N, 2, pattern).outcome == ArrowsOutcome::arrows;
                CHECK(mine == naive::naive_arrows(N, pattern));
            }
}

TEST_CASE("monotone under subgraph containment") {
    struct Pair {
        Graph small, large;
    };
    Graph diamond = Graph::complete(4);
    diamond.remove_edge(0, 1);
    std::vector<Pair> pairs{{Graph::path(3), Graph::path(4)},
                            {Graph::path(4), Graph::cycle(4)},
                            {Graph::path(4), Graph::complete(3).with_vertex(0b001)},
                            {Graph::cycle(4), diamond},
                            {Graph::complete(3), clique_path_graph(3, 4)}};
    for (const auto& [small, large] : pairs) {
        REQUIRE(find_embedding(large, small).has_value());
        RamseyResult rs = ramsey_number(small);
        RamseyResult rl = ramsey_number(large);
        REQUIRE(rs.exact());
        REQUIRE(rl.exact());
        CHECK(rs.lo <= rl.lo);
    }
}

TEST_CASE("isomorphism invariance of the computed number") {
    for (int n = 2; n <= 4; ++n) {
        for (const Graph& g : enumerate_graphs(n, EnumFilter::all)) {
            if (g == Graph::complete(4)) continue;  // long run lives elsewhere
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = (i + 1) % n;
            RamseyResult a = ramsey_number(g);
            RamseyResult b = ramsey_number(g.relabelled(perm));
            CHECK(a.lo == b.lo);
            CHECK(a.hi == b.hi);
        }
    }
}

TEST_CASE("R(G) is at least the vertex count") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n, EnumFilter::all)) {
            SearchBudget tight;
            tight.max_nodes = 200'000;
            CHECK(ramsey_number(g, 2, tight).lo >= n);
        }
}

TEST_CASE("worker count does not change completed outcomes") {
    EngineOptions par;
    par.jobs = 4;
    for (int N = 4; N <= 7; ++N) {
        auto seq = arrows(N, 2, Graph::complete(3));
        auto par_rep = arrows(N, 2, Graph::complete(3), {}, par);
        CHECK(seq.outcome == par_rep.outcome);
        if (seq.witness && par_rep.witness) CHECK(*seq.witness == *par_rep.witness);
    }
    RamseyResult seq = ramsey_number(double_star(2, 2));
    RamseyResult par_r = ramsey_number(double_star(2, 2), 2, {}, par);
    CHECK(seq.lo == par_r.lo);
    CHECK(seq.hi == par_r.hi);
}
