#include <doctest.h>

#include <variant>

#include "ramsey/canonical.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/extraction.hpp"
#include "ramsey/lower_bounds.hpp"

using namespace ramsey;

namespace {

EdgeColouring from_red_graph(const Graph& red) {
    EdgeColouring c(red.order(), 2);
    for (int v = 1; v < red.order(); ++v)
        for (int u = 0; u < v; ++u) c.set_colour(u, v, red.has_edge(u, v) ? kRed : kBlue);
    return c;
}

bool outcome_verified(const EdgeColouring& c, const ExtractOutcome& out, int case_kind, int t,
                      int n) {
    if (const auto* e = std::get_if<MonoEmbedding>(&out)) {
        Graph target = case_kind == 1 ? biclique_path_graph(t, n) : clique_path_graph(t, n);
        return is_valid_embedding(c.colour_class(e->colour), target, e->embedding);
    }
    return verify_step_failure(c, std::get<StepFailure>(out), t, n, case_kind);
}

}  // namespace

TEST_CASE("long mono path on the all-red host is the full vertex set") {
    auto [col, path] = find_long_mono_path(EdgeColouring::constant(6, 2, kRed));
    CHECK(col == kRed);
    CHECK(path.size() == 6);
}

TEST_CASE("long mono path on the bipartition colouring of K_6") {
    // red = K_{3,3} edges, blue = two disjoint triangles
    EdgeColouring c = from_red_graph(Graph::complete_bipartite(3, 3));
    auto [col, path] = find_long_mono_path(c);
    CHECK(path.size() >= 4);  // >= ceil(2*6/3)
    // a red path through all six vertices exists (alternating the classes)
    Graph red = c.colour_class(kRed);
    bool consecutive_red = true;
    if (col == kRed && path.size() == 6)
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (!red.has_edge(path[i], path[i + 1])) consecutive_red = false;
    CHECK(consecutive_red);
}

TEST_CASE("long mono path guarantee holds exhaustively through K_6") {
    for (int N = 2; N <= 6; ++N) {
        int target = (2 * N + 2) / 3;
        for (const Graph& red : enumerate_graphs(N, EnumFilter::all)) {
            EdgeColouring c = from_red_graph(red);
            auto [col, path] = find_long_mono_path(c);
            CHECK(static_cast<int>(path.size()) >= target);
            Graph cls = c.colour_class(col);
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
                CHECK(cls.has_edge(path[i], path[i + 1]));
        }
    }
}

TEST_CASE("greedy tiling") {
    Graph b22 = Graph::complete_bipartite(2, 2);
    auto tiles = greedy_mono_tiling(EdgeColouring::constant(8, 2, kBlue), full_mask(8), b22,
                                    kBlue);
    CHECK(tiles.size() == 2);  // 8 vertices split into two disjoint blue tiles
    std::uint64_t seen = 0;
    for (const auto& e : tiles)
        for (int v : e.map) {
            CHECK((seen & bit(v)) == 0);
            seen |= bit(v);
        }

    CHECK(greedy_mono_tiling(EdgeColouring::constant(8, 2, kRed), full_mask(8), b22, kBlue)
              .empty());

    // red C_5 is triangle-free
    EdgeColouring c5 = [&] {
        EdgeColouring c = EdgeColouring::constant(5, 2, kBlue);
        for (int i = 0; i < 5; ++i) c.set_colour(i, (i + 1) % 5, kRed);
        return c;
    }();
    CHECK(greedy_mono_tiling(c5, full_mask(5), Graph::complete(3), kRed).empty());
}

TEST_CASE("stitch assembles the all-blue host") {
    EdgeColouring c = EdgeColouring::constant(10, 2, kBlue);
    auto tiles = greedy_mono_tiling(c, full_mask(10), Graph::complete_bipartite(2, 2), kBlue);
    auto out = stitch_case1(c, tiles, 2, 8);
    REQUIRE(std::holds_alternative<MonoEmbedding>(out));
    const auto& e = std::get<MonoEmbedding>(out);
    CHECK(e.colour == kBlue);
    CHECK(is_valid_embedding(c.colour_class(kBlue), biclique_path_graph(2, 8), e.embedding));
}

TEST_CASE("stitch reports a tile shortfall with the tiles attached") {
    EdgeColouring c = EdgeColouring::constant(10, 2, kBlue);
    auto tiles = greedy_mono_tiling(c, 0b1111, Graph::complete_bipartite(2, 2), kBlue);
    CHECK(tiles.size() == 1);
    auto out = stitch_case1(c, tiles, 2, 8);
    REQUIRE(std::holds_alternative<StepFailure>(out));
    const auto& f = std::get<StepFailure>(out);
    CHECK(f.kind == StepKind::tile_shortfall);
    CHECK(verify_step_failure(c, f, 2, 8, 1));
}

TEST_CASE("stitch reports a missing connector with a red biclique certificate") {
    // Two blue K_{2,2} tiles {0,1|2,3} and {4,5|6,7} with the whole gap
    // B_1 x A_2 = {2,3} x {4,5} red.
    EdgeColouring c = EdgeColouring::constant(8, 2, kBlue);
    for (int b : {2, 3})
        for (int a : {4, 5}) c.set_colour(b, a, kRed);
    std::vector<Embedding> tiles{Embedding{{0, 1, 2, 3}}, Embedding{{4, 5, 6, 7}}};
    auto out = stitch_case1(c, tiles, 2, 8);
    REQUIRE(std::holds_alternative<StepFailure>(out));
    const auto& f = std::get<StepFailure>(out);
    CHECK(f.kind == StepKind::connector_missing);
    REQUIRE(f.mono_witness.has_value());
    CHECK(f.mono_witness_colour == kRed);
    CHECK(is_valid_embedding(c.colour_class(kRed), Graph::complete_bipartite(2, 2),
                             *f.mono_witness));
    CHECK(verify_step_failure(c, f, 2, 8, 1));
    CHECK(find_mono_copy(c, Graph::complete_bipartite(2, 2)).has_value());
}

TEST_CASE("stitch rejects invalid tiles") {
    EdgeColouring c = EdgeColouring::constant(8, 2, kRed);
    std::vector<Embedding> tiles{Embedding{{0, 1, 2, 3}}};
    CHECK_THROWS_AS(stitch_case1(c, tiles, 2, 8), std::invalid_argument);
}

TEST_CASE("cover: single clique is a single path") {
    EdgeColouring c = EdgeColouring::constant(6, 2, kBlue);
    auto out = cover_by_clique_paths(c, {{0, 1, 2}}, 3);
    REQUIRE(std::holds_alternative<std::vector<CliquePath>>(out));
    const auto& paths = std::get<std::vector<CliquePath>>(out);
    CHECK(paths.size() == 1);
    CHECK(paths[0].links.empty());
    CHECK(verify_clique_path(c, paths[0], 3, kBlue));
}

TEST_CASE("cover: all-blue host merges four triangles into one path") {
    EdgeColouring c = EdgeColouring::constant(12, 2, kBlue);
    std::vector<std::vector<int>> cliques{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}};
    auto out = cover_by_clique_paths(c, cliques, 3);
    REQUIRE(std::holds_alternative<std::vector<CliquePath>>(out));
    const auto& paths = std::get<std::vector<CliquePath>>(out);
    CHECK(paths.size() <= 2);
    int covered = 0;
    for (const auto& p : paths) {
        CHECK(verify_clique_path(c, p, 3, kBlue));
        covered += static_cast<int>(p.cliques.size());
    }
    CHECK(covered == 4);
}

TEST_CASE("cover fails with a red clique certificate when every link is red") {
    // three disjoint blue triangles, every cross pair red: no blue merge link
    EdgeColouring c = EdgeColouring::constant(9, 2, kRed);
    std::vector<std::vector<int>> cliques{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}};
    for (const auto& q : cliques)
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = i + 1; j < q.size(); ++j) c.set_colour(q[i], q[j], kBlue);
    auto out = cover_by_clique_paths(c, cliques, 3);
    REQUIRE(std::holds_alternative<StepFailure>(out));
    const auto& f = std::get<StepFailure>(out);
    CHECK(f.kind == StepKind::clique_cover_fail);
    REQUIRE(f.mono_witness.has_value());
    CHECK(is_valid_embedding(c.colour_class(kRed), Graph::complete(3), *f.mono_witness));
    CHECK(verify_step_failure(c, f, 3, 9, 2));
}

TEST_CASE("cover on bipartite-blowup red hosts stays within t-1 paths") {
    // red = complete bipartite between two parts (no red K_3), triangles
    // planted inside the blue parts
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        int left = 3 + static_cast<int>(seed % 4);  // 3..6
        int right = 12 - left;
        EdgeColouring c(12, 2);
        for (int v = 1; v < 12; ++v)
            for (int u = 0; u < v; ++u)
                c.set_colour(u, v, (u < left) != (v < left) ? kRed : kBlue);
        std::vector<std::vector<int>> cliques;
        for (int base = 0; base + 3 <= left; base += 3) cliques.push_back({base, base + 1, base + 2});
        for (int base = left; base + 3 <= 12; base += 3)
            cliques.push_back({base, base + 1, base + 2});
        REQUIRE(!cliques.empty());
        auto out = cover_by_clique_paths(c, cliques, 3);
        REQUIRE(std::holds_alternative<std::vector<CliquePath>>(out));
        const auto& paths = std::get<std::vector<CliquePath>>(out);
        CHECK(paths.size() <= 2);
        std::uint64_t covered = 0;
        int total = 0;
        for (const auto& p : paths) {
            CHECK(verify_clique_path(c, p, 3, kBlue));
            total += static_cast<int>(p.cliques.size());
            for (const auto& q : p.cliques)
                for (int v : q) covered |= bit(v);
        }
        CHECK(total == static_cast<int>(cliques.size()));
    }
}

TEST_CASE("cover validates its preconditions") {
    EdgeColouring c = EdgeColouring::constant(6, 2, kBlue);
    CHECK_THROWS_AS(cover_by_clique_paths(c, {{0, 1, 2}, {2, 3, 4}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(cover_by_clique_paths(c, {{0, 1}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(cover_by_clique_paths(c, {{0, 1, 2}}, 1), std::invalid_argument);
    EdgeColouring red = EdgeColouring::constant(6, 2, kRed);
    CHECK_THROWS_AS(cover_by_clique_paths(red, {{0, 1, 2}}, 3), std::invalid_argument);
}

TEST_CASE("extract_case1 adversarial hosts") {
    auto all_red = EdgeColouring::constant(12, 2, kRed);
    auto out_red = extract_case1(all_red, 2, 8);
    REQUIRE(std::holds_alternative<MonoEmbedding>(out_red));
    CHECK(std::get<MonoEmbedding>(out_red).colour == kRed);
    CHECK(outcome_verified(all_red, out_red, 1, 2, 8));

    auto all_blue = EdgeColouring::constant(12, 2, kBlue);
    auto out_blue = extract_case1(all_blue, 2, 8);
    REQUIRE(std::holds_alternative<MonoEmbedding>(out_blue));
    CHECK(std::get<MonoEmbedding>(out_blue).colour == kBlue);
    CHECK(outcome_verified(all_blue, out_blue, 1, 2, 8));
}

TEST_CASE("extract_case2 adversarial hosts") {
    auto all_blue = EdgeColouring::constant(20, 2, kBlue);
    auto out_blue = extract_case2(all_blue, 3, 9);
    REQUIRE(std::holds_alternative<MonoEmbedding>(out_blue));
    CHECK(outcome_verified(all_blue, out_blue, 2, 3, 9));

    auto all_red = EdgeColouring::constant(20, 2, kRed);
    auto out_red = extract_case2(all_red, 3, 9);
    REQUIRE(std::holds_alternative<MonoEmbedding>(out_red));
    CHECK(std::get<MonoEmbedding>(out_red).colour == kRed);
    CHECK(outcome_verified(all_red, out_red, 2, 3, 9));
}

TEST_CASE("extraction soundness over seeded hosts") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        EdgeColouring c30 = EdgeColouring::random(30, 2, seed);
        CHECK(outcome_verified(c30, extract_case1(c30, 2, 8), 1, 2, 8));
        EdgeColouring c20 = EdgeColouring::random(20, 2, seed);
        CHECK(outcome_verified(c20, extract_case2(c20, 3, 9), 2, 3, 9));
        // tighter hosts exercise the failure certificates
        EdgeColouring c12 = EdgeColouring::random(12, 2, seed);
        CHECK(outcome_verified(c12, extract_case1(c12, 2, 8), 1, 2, 8));
        EdgeColouring c10 = EdgeColouring::random(10, 2, seed);
        CHECK(outcome_verified(c10, extract_case2(c10, 3, 9), 2, 3, 9));
    }
}

TEST_CASE("colour-swap equivariance of the outcome") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        EdgeColouring c = EdgeColouring::random(16, 2, seed);
        EdgeColouring s = c.with_swapped_colours(0, 1);
        auto a = extract_case1(c, 2, 8);
        auto b = extract_case1(s, 2, 8);
        CHECK(a.index() == b.index());
        if (const auto* ea = std::get_if<MonoEmbedding>(&a)) {
            const auto& eb = std::get<MonoEmbedding>(b);
            CHECK(ea->colour == (eb.colour ^ 1));
            CHECK(ea->embedding == eb.embedding);
        }
        auto a2 = extract_case2(c, 3, 9);
        auto b2 = extract_case2(s, 3, 9);
        CHECK(a2.index() == b2.index());
        if (const auto* ea2 = std::get_if<MonoEmbedding>(&a2)) {
            const auto& eb2 = std::get<MonoEmbedding>(b2);
            CHECK(ea2->colour == (eb2.colour ^ 1));
            CHECK(ea2->embedding == eb2.embedding);
        }
    }
}

TEST_CASE("extraction records a replayable trace") {
    ExtractionTrace trace;
    EdgeColouring c = EdgeColouring::random(20, 2, 7);
    auto out = extract_case2(c, 3, 9, &trace);
    CHECK(trace.case_kind == 2);
    CHECK(trace.t == 3);
    CHECK(trace.n == 9);
    CHECK(trace.steps.size() >= 2);
    CHECK(trace.steps[0].name == "long_mono_path");
    CHECK(outcome_verified(c, out, 2, 3, 9));
}

TEST_CASE("mono path too short is certified") {
    // K_4 host cannot supply a path of n + t = 12 vertices
    EdgeColouring c = EdgeColouring::constant(4, 2, kRed);
    auto out = extract_case2(c, 3, 9);
    REQUIRE(std::holds_alternative<StepFailure>(out));
    const auto& f = std::get<StepFailure>(out);
    CHECK(f.kind == StepKind::mono_path_too_short);
    CHECK(verify_step_failure(c, f, 3, 9, 2));
}

TEST_CASE("extraction rejects bad parameters") {
    EdgeColouring c = EdgeColouring::constant(10, 2, kRed);
    CHECK_THROWS_AS(extract_case1(c, 3, 5), std::invalid_argument);  // n < 2t
    CHECK_THROWS_AS(extract_case2(c, 1, 5), std::invalid_argument);  // t < 2
    EdgeColouring three = EdgeColouring::constant(10, 3, kGreen);
    CHECK_THROWS_AS(extract_case1(three, 2, 6), std::invalid_argument);
}
