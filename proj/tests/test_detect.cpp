#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "turanlab/construct.hpp"
#include "turanlab/detect.hpp"
#include "turanlab/errors.hpp"
#include "turanlab/pyramids.hpp"

using namespace turanlab;

namespace {

bool tp3_witness_ok(const Graph& g, const TP3Witness& w) {
    return is_valid_tp3(g, w) && is_valid_embedding(g, triangular_pyramid(3).graph, to_embedding(w));
}

}  // namespace

TEST_CASE("generic engine basics") {
    const Graph tp3 = triangular_pyramid(3).graph;
    auto e = contains_subgraph(complete_graph(10), tp3);
    REQUIRE(e);
    CHECK(is_valid_embedding(complete_graph(10), tp3, *e));
    CHECK_FALSE(contains_subgraph(complete_bipartite(5, 5), triangular_pyramid(1).graph));
    auto f = contains_subgraph(tp3, triangular_pyramid(2).graph);
    REQUIRE(f);
    CHECK(is_valid_embedding(tp3, triangular_pyramid(2).graph, *f));
    CHECK_FALSE(contains_subgraph(complete_graph(9), tp3));
    CHECK(contains_subgraph(graph_new(3), graph_new(0)));
}

TEST_CASE("generic engine agrees with plain backtracking") {
    Rng rng(77);
    const std::vector<Graph> patterns{complete_graph(3), cycle(4), cycle(5), claw(), triangular_pyramid(2).graph,
                                      complete_graph(4), spider(), cycle(6)};
    for (int trial = 0; trial < 600; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(6));
        const Graph g = oracle::random_graph(rng, n, 1 + static_cast<int>(rng.below(8)), 10);
        for (const auto& p : patterns) {
            const auto e = contains_subgraph(g, p);
            REQUIRE(e.has_value() == oracle::contains(g, p));
            if (e) REQUIRE(is_valid_embedding(g, p, *e));
        }
    }
}

TEST_CASE("through-edge search finds exactly the new copies") {
    Rng rng(91);
    const Graph tp2 = triangular_pyramid(2).graph;
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = oracle::random_graph(rng, 8, 6, 10);
        if (g.edge_count() == 0) continue;
        for (auto [u, v] : g.edges()) {
            GraphBuilder b(g);
            b.remove_edge(u, v);
            const bool before = contains_subgraph(b.view(), tp2).has_value();
            const bool after = contains_subgraph(g, tp2).has_value();
            if (!before) REQUIRE(contains_subgraph_through_edge(g, tp2, u, v).has_value() == after);
        }
    }
}

TEST_CASE("find_tp3 examples") {
    const auto p = triangular_pyramid(3);
    auto w = find_tp3(p.graph);
    REQUIRE(w);
    CHECK(tp3_witness_ok(p.graph, *w));
    CHECK(w->wheel.hub == pyramid_center_wheel().hub);
    CHECK(p.labels[w->wheel.hub] == PyramidLabel{3, 2});

    CHECK_FALSE(find_tp3(construction_div6(12)));
    CHECK_FALSE(find_tp3(complete_graph(9)));
    auto k10 = find_tp3(complete_graph(10));
    REQUIRE(k10);
    CHECK(tp3_witness_ok(complete_graph(10), *k10));
}

TEST_CASE("find_tp3 agrees with the generic engine on random graphs") {
    Rng rng(5150);
    const Graph tp3 = triangular_pyramid(3).graph;
    const int probs[] = {3, 5, 7};
    int hits = 0;
    for (int i = 0; i < 1500; ++i) {
        const int n = 10 + static_cast<int>(rng.below(6));
        const Graph g = oracle::random_graph(rng, n, probs[i % 3], 10);
        const auto fast = find_tp3(g);
        const auto slow = contains_subgraph(g, tp3);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) {
            ++hits;
            REQUIRE(tp3_witness_ok(g, *fast));
        }
    }
    CHECK(hits > 100);
    CHECK(hits < 1500);
}

TEST_CASE("find_tp3 agrees with the generic engine on graphs rich in twins") {
    // Blow-ups: each base vertex becomes a clique or an independent set.
    Rng rng(2718);
    const Graph tp3 = triangular_pyramid(3).graph;
    int hits = 0, misses = 0;
    for (int i = 0; i < 800; ++i) {
        const int base = 4 + static_cast<int>(rng.below(4));
        const Graph b = oracle::random_graph(rng, base, 5, 10);
        std::vector<int> owner;
        std::vector<bool> clique(base);
        for (int v = 0; v < base; ++v) {
            clique[v] = rng.chance(1, 2);
            const int copies = 1 + static_cast<int>(rng.below(4));
            for (int c = 0; c < copies; ++c) owner.push_back(v);
        }
        const int n = static_cast<int>(owner.size());
        GraphBuilder gb(n);
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
                const int a = owner[x], c = owner[y];
                if (a == c ? clique[a] : b.has_edge(a, c)) gb.add_edge(x, y);
            }
        // A few random perturbations break some twin classes.
        for (int k = static_cast<int>(rng.below(3)); k > 0 && n > 1; --k) {
            const int x = static_cast<int>(rng.below(n)), y = static_cast<int>(rng.below(n));
            if (x != y) gb.add_edge(x, y);
        }
        const Graph g = gb.build();
        const auto fast = find_tp3(g);
        REQUIRE(fast.has_value() == contains_subgraph(g, tp3).has_value());
        if (fast) REQUIRE(tp3_witness_ok(g, *fast));
        fast ? ++hits : ++misses;
    }
    CHECK(hits > 50);
    CHECK(misses > 50);
}

TEST_CASE("find_tp3 is monotone under edge addition") {
    Rng rng(8);
    for (int i = 0; i < 200; ++i) {
        const Graph g = oracle::random_graph(rng, 12, 6, 10);
        if (!find_tp3(g)) continue;
        for (auto [u, v] : g.non_edges()) REQUIRE(find_tp3(g.with_edge(u, v)).has_value());
    }
}

TEST_CASE("find_tp3 fallback for huge neighborhoods") {
    // Hub of degree 70 > kMaxHubNeighborhood; TP_3 is planted around it.
    const int n = 80;
    GraphBuilder b(n);
    for (int v = 1; v <= 70; ++v) b.add_edge(0, v);
    const auto ref = pyramid_center_wheel();
    const auto tp3 = triangular_pyramid(3).graph;
    // Map TP_3 hub -> 0, others -> 1..6 (rim) and 71..73 (apexes).
    std::vector<int> map(10, -1);
    map[ref.hub] = 0;
    for (int i = 0; i < 6; ++i) map[ref.rim[i]] = 1 + i;
    for (int j = 0; j < 3; ++j) map[ref.apexes[j]] = 71 + j;
    for (auto [a, c] : tp3.edges()) b.add_edge(map[a], map[c]);
    const Graph g = b.build();
    auto w = find_tp3(g);
    REQUIRE(w);
    CHECK(tp3_witness_ok(g, *w));
    GraphBuilder nb(g);
    nb.remove_edge(map[ref.apexes[0]], map[ref.rim[0]]);
    CHECK_FALSE(find_tp3(nb.view()));
}

TEST_CASE("wheels and sparsity") {
    const Graph w7 = wheel(7);
    auto ws = find_wheels7(w7);
    REQUIRE(ws.size() == 1);
    CHECK(is_sparse_wheel(w7, ws[0]));
    CHECK(ws[0] == canonical_wheel(ws[0]));

    const Graph k7 = complete_graph(7);
    auto wk = find_wheels7(k7, 20);
    REQUIRE(wk.size() == 20);
    for (const auto& w : wk) CHECK_FALSE(is_sparse_wheel(k7, w));
    // 7 hubs * 60 distinct 6-cycles on 6 labelled vertices.
    CHECK(find_wheels7(k7).size() == 7 * 60);

    // A sparse wheel: rim x1..x6, all six distance-2 chords absent.
    const Graph fig = wheel(7);
    WheelWitness given{0, {1, 2, 3, 4, 5, 6}};
    CHECK(is_sparse_wheel(fig, given));
    CHECK_THROWS_AS(is_sparse_wheel(fig, WheelWitness{0, {1, 3, 2, 4, 5, 6}}), ArgumentError);

    WheelWitness raw{0, {4, 3, 2, 1, 6, 5}};
    const auto c = canonical_wheel(raw);
    CHECK(c.rim == std::array<int, 6>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("extend_wheel_to_tp3") {
    const auto p = triangular_pyramid(3);
    const auto ref = pyramid_center_wheel();
    auto w = extend_wheel_to_tp3(p.graph, WheelWitness{ref.hub, ref.rim});
    REQUIRE(w);
    CHECK(tp3_witness_ok(p.graph, *w));
    std::array<int, 3> apexes = w->apexes;
    std::sort(apexes.begin(), apexes.end());
    std::array<int, 3> expect = ref.apexes;
    std::sort(expect.begin(), expect.end());
    CHECK(apexes == expect);

    // Odd-offset triple: rotate the rim by one and the same apexes are found.
    WheelWitness rotated{ref.hub, {ref.rim[5], ref.rim[0], ref.rim[1], ref.rim[2], ref.rim[3], ref.rim[4]}};
    auto r = extend_wheel_to_tp3(p.graph, rotated);
    REQUIRE(r);
    CHECK(tp3_witness_ok(p.graph, *r));

    CHECK_FALSE(extend_wheel_to_tp3(wheel(7), WheelWitness{0, {1, 2, 3, 4, 5, 6}}));

    GraphBuilder b(8);
    for (auto [u, v] : wheel(7).edges()) b.add_edge(u, v);
    for (int v = 1; v <= 6; ++v) b.add_edge(7, v);
    CHECK_FALSE(extend_wheel_to_tp3(b.view(), WheelWitness{0, {1, 2, 3, 4, 5, 6}}));
}

TEST_CASE("extension never reuses wheel vertices; free graphs never extend") {
    Rng rng(4);
    for (int i = 0; i < 150; ++i) {
        const Graph g = oracle::random_graph(rng, 12, 6, 10);
        const bool free = !contains_subgraph(g, triangular_pyramid(3).graph);
        for (const auto& w : find_wheels7(g, 50)) {
            auto t = extend_wheel_to_tp3(g, w);
            if (free) REQUIRE_FALSE(t);
            if (t) {
                REQUIRE(is_valid_tp3(g, *t));
                for (int a : t->apexes) {
                    REQUIRE(a != t->wheel.hub);
                    for (int r : t->wheel.rim) REQUIRE(a != r);
                }
            }
        }
    }
}

TEST_CASE("find_cycle") {
    CHECK(find_cycle(complete_graph(4), 3));
    auto c6 = find_cycle(cycle(6), 6);
    REQUIRE(c6);
    CHECK(is_valid_embedding(cycle(6), cycle(6), *c6));
    CHECK_FALSE(find_cycle(claw(), 3));
    CHECK_FALSE(find_cycle(cycle(5), 6));
    CHECK_FALSE(find_cycle(cycle(7), 6));
    CHECK_THROWS_AS((void)find_cycle(cycle(5), 5), ArgumentError);

    Rng rng(19);
    for (int i = 0; i < 500; ++i) {
        const Graph g = oracle::random_graph(rng, 3 + static_cast<int>(rng.below(7)), 3, 10);
        auto t = find_cycle(g, 3);
        auto s = find_cycle(g, 6);
        REQUIRE(t.has_value() == oracle::contains(g, cycle(3)));
        REQUIRE(s.has_value() == oracle::contains(g, cycle(6)));
        if (s) REQUIRE(is_valid_embedding(g, cycle(6), *s));
    }
}

TEST_CASE("distinct representatives") {
    CHECK_FALSE(distinct_representatives({VertexSet{1}, VertexSet{1}}));
    auto three = distinct_representatives({VertexSet{1, 2}, VertexSet{2, 3}, VertexSet{3, 1}});
    REQUIRE(three);
    CHECK(VertexSet::of(*three).count() == 3);
    auto one = distinct_representatives({VertexSet{1, 2, 3}});
    REQUIRE(one);
    CHECK(VertexSet{1, 2, 3}.contains((*one)[0]));

    Rng rng(12);
    for (int i = 0; i < 2000; ++i) {
        const int k = 1 + static_cast<int>(rng.below(6));
        std::vector<VertexSet> sets(k);
        std::vector<std::vector<int>> plain(k);
        for (int j = 0; j < k; ++j)
            for (int x = 0; x < 7; ++x)
                if (rng.chance(1, 4)) {
                    sets[j].insert(x);
                    plain[j].push_back(x);
                }
        auto reps = distinct_representatives(sets);
        REQUIRE(reps.has_value() == oracle::hall_holds(plain));
        if (reps) {
            REQUIRE(VertexSet::of(*reps).count() == k);
            for (int j = 0; j < k; ++j) REQUIRE(sets[j].contains((*reps)[j]));
        }
    }
}

TEST_CASE("min triangles per edge") {
    CHECK(min_triangles_per_edge(complete_graph(5)) == 3);
    CHECK(min_triangles_per_edge(cycle(6)) == 0);
    CHECK(min_triangles_per_edge(triangular_pyramid(2).graph) == 1);
    CHECK_THROWS_AS(min_triangles_per_edge(graph_new(4)), DomainError);
}

TEST_CASE("TP_4 coloring claim") {
    const Graph tp4 = triangular_pyramid(4).graph;
    CHECK(color2_has_c3_or_c6(tp4, VertexSet{}));
    CHECK(color2_has_c3_or_c6(tp4, VertexSet{0}));
    // An interior vertex in color 1 leaves its hexagonal neighborhood in color 2.
    const int interior = LayeredPyramid::id(3, 2);
    CHECK(tp4.degree(interior) == 6);
    auto [hex, back] = tp4.induced(tp4.neighbors(interior));
    CHECK(find_cycle(hex, 6));

    // Independent count of color-1-independent colorings.
    long independent = 0;
    const auto edges = tp4.edges();
    for (long mask = 0; mask < (1L << 15); ++mask) {
        bool ok = true;
        for (auto [u, v] : edges)
            if (((mask >> u) & 1) && ((mask >> v) & 1)) ok = false;
        independent += ok;
    }
    const auto report = verify_tp4_coloring_claim();
    CHECK(report.total_colorings == 32768);
    CHECK(report.colorings_checked == independent);
    CHECK(report.all_pass);
    CHECK_FALSE(report.counterexample);
}

TEST_CASE("forbidden dispatch") {
    CHECK(parse_forbidden("tp3") == Forbidden::tp3);
    CHECK(parse_forbidden("tp1") == Forbidden::k3);
    CHECK_THROWS_AS(parse_forbidden("tp9"), ArgumentError);
    for (auto f : {Forbidden::k3, Forbidden::tp2, Forbidden::tp3, Forbidden::tp4, Forbidden::w7, Forbidden::c6}) {
        const Graph& p = forbidden_pattern(f);
        auto e = find_forbidden(p, f);
        REQUIRE(e);
        CHECK(is_valid_embedding(p, p, *e));
        CHECK(parse_forbidden(to_string(f)) == f);
    }
    CHECK_FALSE(find_forbidden(complete_bipartite(6, 6), Forbidden::k3));
    CHECK(find_forbidden(complete_bipartite(6, 6), Forbidden::c6));
}
