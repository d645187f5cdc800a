#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "turanlab/construct.hpp"
#include "turanlab/detect.hpp"
#include "turanlab/errors.hpp"
#include "turanlab/prooflab.hpp"
#include "turanlab/pyramids.hpp"

using namespace turanlab;

namespace {

// Direct scan of both fixed-point conditions, written against the adjacency
// matrix so it shares nothing with the library check.
bool good_by_scan(const Graph& h) {
    const auto m = oracle::matrix_of(h);
    const int v = static_cast<int>(m.size());
    std::vector<int> d(v, 0);
    for (int x = 0; x < v; ++x)
        for (int y = 0; y < v; ++y) d[x] += m[x][y];
    for (int x = 0; x < v; ++x) {
        if (!(d[x] > v / 2 + 1)) return false;
        for (int y = x + 1; y < v; ++y)
            if (m[x][y] && d[x] + d[y] - 1 < v + 2) return false;
    }
    return true;
}

bool single_swap_optimal(const Graph& g, const Partition& p) {
    const int base = cut_size(g, p.a);
    for (int x : p.a)
        for (int y : p.b) {
            VertexSet a = p.a;
            a.erase(x);
            a.insert(y);
            if (cut_size(g, a) > base) return false;
        }
    return true;
}

bool independent(const Graph& g, const VertexSet& s) {
    for (int x : s)
        if (g.neighbors(x).intersects(s)) return false;
    return true;
}

Graph plus_pendant(const Graph& g) {
    GraphBuilder b(g.order() + 1);
    for (auto [x, y] : g.edges()) b.add_edge(x, y);
    b.add_edge(0, g.order());
    return b.build();
}

Params half() {
    Params p;
    p.delta = Rational(1, 2);
    p.beta = Rational(1, 18592);
    p.gamma = Rational(7, 100000);
    return p;
}

}  // namespace

TEST_CASE("good subgraph examples") {
    const auto k5 = extract_good_subgraph(plus_pendant(complete_graph(5)), Rational(1, 2));
    CHECK(k5.graph.order() == 5);
    CHECK(k5.graph.edge_count() == 10);
    CHECK(k5.removed == std::vector<int>{5});
    CHECK(k5.kept == std::vector<int>{0, 1, 2, 3, 4});

    const auto bip = extract_good_subgraph(complete_bipartite(5, 5), Rational(1, 2));
    CHECK(bip.graph.order() == 0);
    CHECK(bip.removed.size() == 10);
    CHECK_FALSE(bip.dense);

    CHECK(extract_good_subgraph(graph_new(0), Rational(1)).graph.order() == 0);
    CHECK(extract_good_subgraph(graph_new(6), Rational(1)).graph.order() == 0);
    CHECK_THROWS_AS(extract_good_subgraph(complete_graph(4), Rational(0)), DomainError);
}

TEST_CASE("good subgraph is a fixed point") {
    Rng rng(3);
    int nonempty = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 4 + static_cast<int>(rng.below(30));
        const Graph g = oracle::random_graph(rng, n, 5 + static_cast<int>(rng.below(5)), 10);
        const auto r = extract_good_subgraph(g, Rational(1, 2));
        CHECK(good_by_scan(r.graph));
        CHECK(satisfies_good_conditions(r.graph) == good_by_scan(r.graph));
        CHECK(r.kept.size() + r.removed.size() == static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < r.kept.size(); ++i)
            for (std::size_t j = i + 1; j < r.kept.size(); ++j)
                CHECK(r.graph.has_edge(static_cast<int>(i), static_cast<int>(j)) == g.has_edge(r.kept[i], r.kept[j]));
        nonempty += r.graph.order() > 0;
    }
    CHECK(nonempty > 50);
}

TEST_CASE("balanced max cut") {
    const auto kb = balanced_max_cut(complete_bipartite(5, 5), -1, 0);
    CHECK(kb.cut_edges == 25);
    CHECK((kb.a == VertexSet::range(5) || kb.b == VertexSet::range(5)));

    const auto k4 = balanced_max_cut(complete_graph(4), -1, 9);
    CHECK(k4.cut_edges == 4);
    CHECK(k4.a.count() == 2);

    CHECK(balanced_max_cut(construction_div6(12), -1, 0).cut_edges >= 36);

    Rng rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(20));
        const Graph g = oracle::random_graph(rng, n, 1 + static_cast<int>(rng.below(9)), 10);
        const std::uint64_t seed = rng.next();
        const auto p = balanced_max_cut(g, -1, seed);
        CHECK((p.a & p.b).empty());
        CHECK((p.a | p.b) == g.vertices());
        CHECK(std::abs(p.a.count() - p.b.count()) <= 1);
        CHECK(p.cut_edges == cut_size(g, p.a));
        CHECK(single_swap_optimal(g, p));
        const auto again = balanced_max_cut(g, -1, seed);
        CHECK(again.a == p.a);
    }
    const auto none = balanced_max_cut(complete_bipartite(4, 4), 0, 5);
    CHECK(none.cut_edges == cut_size(complete_bipartite(4, 4), none.a));
}

TEST_CASE("greedy independent set") {
    CHECK(greedy_independent_set(graph_new(7)).count() == 7);
    CHECK(greedy_independent_set(complete_graph(11)).count() == 1);
    CHECK(greedy_independent_set(complete_graph(12)).count() == 0);

    Rng rng(55);
    const Graph g55 = oracle::random_graph_m(rng, 55, 110);
    CHECK(greedy_independent_set(g55).count() >= 3);

    for (int trial = 0; trial < 1000; ++trial) {
        const int v = 5 + static_cast<int>(rng.below(60));
        const Graph g = oracle::random_graph_m(rng, v, 2 * v);
        const VertexSet s = greedy_independent_set(g);
        CHECK(independent(g, s));
        CHECK(55 * s.count() >= 3 * v);
    }
}

TEST_CASE("k13 triples") {
    GraphBuilder b(40);
    for (int s = 0; s < 10; ++s)
        for (int l = 1; l <= 3; ++l) b.add_edge(4 * s, 4 * s + l);
    const Graph stars = b.build();
    const auto claws = find_k13_triples(stars, stars.vertices(), half());
    CHECK(claws.size() >= 10);
    VertexSet seen;
    for (const auto& t : claws) {
        CHECK(t.kind == TripleKind::disjoint_claw);
        CHECK_FALSE(seen.contains(t.center));
        seen.insert(t.center);
        for (int l : t.leaves) {
            CHECK(stars.has_edge(t.center, l));
            CHECK_FALSE(seen.contains(l));
            seen.insert(l);
        }
    }

    const Graph big = complete_bipartite(1, 100);
    const auto ts = find_k13_triples(big, big.vertices(), half());
    const int expected = greedy_independent_set(big.induced(big.neighbors(0)).first).count() / 3;
    CHECK(static_cast<int>(ts.size()) == expected);
    for (const auto& t : ts) {
        CHECK(t.kind == TripleKind::induced_in_star);
        CHECK(t.center == 0);
        CHECK_FALSE(big.has_edge(t.leaves[0], t.leaves[1]));
        CHECK_FALSE(big.has_edge(t.leaves[1], t.leaves[2]));
        CHECK_FALSE(big.has_edge(t.leaves[0], t.leaves[2]));
    }

    CHECK(find_k13_triples(graph_new(20), VertexSet::range(20), half()).empty());
    // Restricting A to part of the graph hides edges leaving A.
    CHECK(find_k13_triples(stars, VertexSet::range(3), half()).empty());
}

TEST_CASE("parameter inequalities") {
    Params p = half();
    p.beta = p.delta / kBetaDen;
    for (const Rational& gamma : {Rational(1, 1000), Rational(1, 40), Rational(3, 7)}) {
        p.gamma = gamma;
        const auto r = check_parameter_inequalities(p, 1000);
        CHECK(r.b2);
        CHECK(r.b2_lhs == r.b2_rhs);
        CHECK(r.beta_def);
    }
    p.gamma = Rational(1, 1000000000000LL);
    CHECK_FALSE(check_parameter_inequalities(p, 1000).b1);

    const Params feasible = Params::derive(Rational(1, 2));
    CHECK(feasible.beta == Rational(1, 18592));
    CHECK(feasible.gamma == Rational(7, 100000));
    CHECK(check_parameter_inequalities(feasible, 1000).all);
    Params tighter = feasible;
    tighter.gamma = Rational(6, 100000);
    CHECK_FALSE(check_parameter_inequalities(tighter, 1000).all);

    Params zero = half();
    zero.beta = 0;
    CHECK_THROWS_AS(check_parameter_inequalities(zero, 100), DomainError);
    CHECK_THROWS_AS(check_parameter_inequalities(half(), 0), ArgumentError);
}

TEST_CASE("inequalities are monotone in gamma below 1/32") {
    Rng rng(8);
    for (int trial = 0; trial < 300; ++trial) {
        Params p;
        p.delta = Rational(1 + static_cast<long long>(rng.below(99)), 100);
        p.beta = p.delta / (kBetaDen - static_cast<long long>(rng.below(5000)));
        const long long n = 1 + static_cast<long long>(rng.below(100000));
        const long long j1 = 1 + static_cast<long long>(rng.below(3124));
        const long long j2 = j1 + static_cast<long long>(rng.below(3125 - j1));
        p.gamma = Rational(j1, 100000);
        const auto lo = check_parameter_inequalities(p, n);
        p.gamma = Rational(j2, 100000);
        const auto hi = check_parameter_inequalities(p, n);
        if (lo.b1) CHECK(hi.b1);
        if (lo.b3) CHECK(hi.b3);
    }
}

TEST_CASE("pipeline agrees with find_tp3") {
    const Params p = Params::derive(Rational(1, 2));
    const Graph base = construction_div6(12);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        // Every non-edge of the construction lies inside a class.
        auto extra = base.non_edges();
        Rng rng(seed);
        rng.shuffle(extra);
        extra.resize(std::min<std::size_t>(extra.size(), 1 + seed % 18));
        GraphBuilder b(base);
        for (auto [x, y] : extra) b.add_edge(x, y);
        const Graph g = b.build();
        PipelineOptions opts;
        opts.seed = seed;
        const auto r = witness_pipeline(g, p, opts);
        CHECK(r.witness.has_value() == find_tp3(g).has_value());
        if (r.witness) CHECK(is_valid_tp3(g, *r.witness));
        for (const auto& w : r.wheel_candidates) CHECK(is_sparse_wheel(g, w));
        REQUIRE_FALSE(r.trace.steps.empty());
        CHECK(r.trace.steps.front().kind == "good_subgraph");
    }

    const auto bip = witness_pipeline(complete_bipartite(5, 5), p, {});
    CHECK_FALSE(bip.witness);
    CHECK(bip.via_fallback);

    GraphBuilder b(15);
    for (auto [x, y] : triangular_pyramid(3).graph.edges()) b.add_edge(x, y);
    const Graph padded = b.build();
    const auto r = witness_pipeline(padded, p, {});
    REQUIRE(r.witness);
    CHECK(is_valid_tp3(padded, *r.witness));
}

TEST_CASE("pipeline on random dense graphs") {
    const Params p = Params::derive(Rational(1, 2));
    Rng rng(21);
    int chased = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 10 + static_cast<int>(rng.below(14));
        const Graph g = oracle::random_graph(rng, n, 6 + static_cast<int>(rng.below(4)), 10);
        PipelineOptions opts;
        opts.seed = trial;
        const auto r = witness_pipeline(g, p, opts);
        CHECK(r.witness.has_value() == find_tp3(g).has_value());
        if (r.witness) CHECK(is_valid_tp3(g, *r.witness));
        for (const auto& w : r.wheel_candidates) CHECK(is_sparse_wheel(g, w));
        chased += r.witness && !r.via_fallback;
    }
    MESSAGE("witnesses from the chase: " << chased);
}
