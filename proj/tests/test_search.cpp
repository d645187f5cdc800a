#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "oracles.hpp"
#include "turanlab/bounds.hpp"
#include "turanlab/canonical.hpp"
#include "turanlab/construct.hpp"
#include "turanlab/errors.hpp"
#include "turanlab/pyramids.hpp"
#include "turanlab/search.hpp"

using namespace turanlab;
using namespace std::chrono_literals;

namespace {

// Every listed graph has `value` edges, is H-free by the plain oracle and is
// saturated: each absent edge creates H.
void certify(const SearchResult& r) {
    const Graph& h = forbidden_pattern(r.forbidden);
    REQUIRE_FALSE(r.extremal_graphs.empty());
    for (const auto& s : r.extremal_graphs) {
        const Graph g = parse_graph6(s);
        CHECK(g.order() == r.n);
        CHECK(g.edge_count() == r.value);
        CHECK_FALSE(oracle::contains(g, h));
        if (r.status != SearchStatus::exact) continue;
        for (auto [u, v] : g.non_edges()) {
            GraphBuilder b(g);
            b.add_edge(u, v);
            CHECK(oracle::contains(b.view(), h));
        }
    }
}

SearchOptions plain(BranchOrder order = BranchOrder::row_major) {
    SearchOptions o;
    o.hook = trivial_hook();
    o.order = order;
    return o;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
    return b.build();
}

}  // namespace

TEST_CASE("small exact values") {
    const auto k3 = exact_ex(5, Forbidden::k3);
    CHECK(k3.value == 6);
    CHECK(k3.status == SearchStatus::exact);
    REQUIRE(k3.extremal_graphs.size() == 1);
    CHECK(k3.extremal_graphs[0] == canonical_graph6(complete_bipartite(2, 3)));
    CHECK(k3.extremal_complete);
    certify(k3);

    const auto tp2 = exact_ex(7, Forbidden::tp2);
    CHECK(tp2.value == 15);
    certify(tp2);

    CHECK(exact_ex(4, Forbidden::k3).value == 4);
    CHECK(exact_ex(8, Forbidden::k3).value == 16);
    CHECK(exact_ex(6, Forbidden::tp2).value == 11);
    CHECK(exact_ex(0, Forbidden::k3).value == 0);
    CHECK(exact_ex(1, Forbidden::k3).value == 0);

    const auto tiny = exact_ex(5, Forbidden::tp3);
    CHECK(tiny.value == 10);
    CHECK(tiny.upper_bound_used == "trivial: n < v(H)");
}

TEST_CASE("agrees with brute force on tiny orders") {
    for (Forbidden f : {Forbidden::k3, Forbidden::tp2, Forbidden::c6}) {
        for (int n = 2; n <= 7; ++n) {
            const int brute = oracle::brute_force_ex(n, forbidden_pattern(f));
            for (BranchOrder o : {BranchOrder::row_major, BranchOrder::column_major}) {
                const auto r = exact_ex(n, f, plain(o));
                CHECK_MESSAGE(r.value == brute, to_string(f) << " n=" << n << " " << to_string(o));
                certify(r);
            }
        }
    }
}

TEST_CASE("cross check formulas") {
    const auto rows = cross_check_formulas(8);
    CHECK(rows.size() == 8 + 3);
    for (const auto& r : rows) CHECK(r.computed == r.expected);
    CHECK_THROWS_AS(cross_check_formulas(9), ArgumentError);
}

TEST_CASE("TP_3 up to nine vertices is complete") {
    for (int n = 6; n <= 9; ++n) {
        const auto r = exact_ex(n, Forbidden::tp3);
        CHECK(r.value == binomial2(n));
        CHECK(r.status == SearchStatus::exact);
    }
}

TEST_CASE("ex(10, TP_3) fixture") {
    const auto r = exact_ex(10, Forbidden::tp3);
    CHECK(r.status == SearchStatus::exact);
    CHECK(r.value == 37);
    CHECK(r.extremal_complete);
    std::vector<std::string> got = r.extremal_graphs;
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<std::string>{"IJ\\zz|~~w", "Ir\\zz|~^w"});
    certify(r);
    CHECK(r.value >= best_known_tp3_free(10).lower_bound);
    CHECK(r.value <= lemma1_bound(10));
}

TEST_CASE("both branch orders agree") {
    for (Forbidden f : {Forbidden::k3, Forbidden::tp2, Forbidden::tp3, Forbidden::w7}) {
        for (int n = 5; n <= 8; ++n) {
            const auto a = exact_ex(n, f, plain(BranchOrder::row_major));
            const auto b = exact_ex(n, f, plain(BranchOrder::column_major));
            CHECK(a.value == b.value);
            auto ga = a.extremal_graphs, gb = b.extremal_graphs;
            std::sort(ga.begin(), ga.end());
            std::sort(gb.begin(), gb.end());
            CHECK(ga == gb);
        }
    }
}

TEST_CASE("monotone in n") {
    for (Forbidden f : {Forbidden::k3, Forbidden::tp2, Forbidden::c6, Forbidden::w7}) {
        long long prev = 0;
        for (int n = 1; n <= 8; ++n) {
            const auto r = exact_ex(n, f);
            CHECK(r.value >= prev);
            prev = r.value;
        }
    }
}

TEST_CASE("results do not depend on worker count") {
    for (Forbidden f : {Forbidden::k3, Forbidden::tp2, Forbidden::w7}) {
        SearchOptions one = plain(), two = plain();
        two.jobs = 2;
        const auto a = exact_ex(8, f, one);
        const auto b = exact_ex(8, f, two);
        CHECK(a.value == b.value);
        CHECK(a.extremal_graphs == b.extremal_graphs);
        CHECK(a.status == b.status);
    }
}

TEST_CASE("timeout keeps the incumbent") {
    SearchOptions o;
    o.time_budget = 1ms;
    const auto r = exact_ex(13, Forbidden::tp3, o);
    CHECK(r.status == SearchStatus::timeout);
    CHECK(r.value >= 54);
    REQUIRE_FALSE(r.extremal_graphs.empty());
    const Graph g = parse_graph6(r.extremal_graphs.front());
    CHECK(g.edge_count() == r.value);
    CHECK_FALSE(find_tp3(g));
}

TEST_CASE("lower bounds by local search") {
    const auto tp3 = lower_bound_ex(12, Forbidden::tp3, 400, 1);
    CHECK(tp3.edges >= 48);
    CHECK(tp3.graph.edge_count() == tp3.edges);
    CHECK_FALSE(find_tp3(tp3.graph));
    for (int n = 1; n <= 20; ++n) {
        const auto k3 = lower_bound_ex(n, Forbidden::k3, 50, 3);
        CHECK(k3.edges >= mantel_bound(n));
        CHECK_FALSE(oracle::contains(k3.graph, complete_graph(3)));
    }
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto a = lower_bound_ex(14, Forbidden::tp3, 200, seed);
        const auto b = lower_bound_ex(14, Forbidden::tp3, 200, seed);
        CHECK(a.graph == b.graph);
        CHECK_FALSE(find_tp3(a.graph));
    }
}

TEST_CASE("conjecture rows") {
    CHECK(conjecture_verdict(Rational(49), 48, std::nullopt) == Verdict::open);
    CHECK(conjecture_verdict(Rational(49), 50, std::nullopt) == Verdict::violated);
    CHECK(conjecture_verdict(Rational(49), 48, 49) == Verdict::consistent);
    CHECK(conjecture_verdict(Rational(49), 48, 50) == Verdict::open);

    ConjectureOptions o;
    o.exact_max_n = 9;
    o.local_search_iterations = 200;
    const auto rows = verify_conjecture_tp3(8, 12, o);
    REQUIRE(rows.size() == 5);
    CHECK(rows[1].n == 9);
    CHECK(rows[1].conjectured == 30);
    CHECK(rows[1].computed_lower == 36);
    CHECK(rows[1].verdict == Verdict::violated);
    CHECK(rows[4].conjectured == 49);
    CHECK(rows[4].computed_lower >= 48);
    CHECK_FALSE(rows[4].computed_upper);
    for (const auto& r : rows) {
        if (r.verdict == Verdict::violated) CHECK(Rational(r.computed_lower) > r.conjectured);
        CHECK(r.conjectured == conjectured_tp3(r.n));
    }
    CHECK_THROWS_AS(verify_conjecture_tp3(5, 7), ArgumentError);
}

TEST_CASE("canonical form") {
    Rng rng(4);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(kCanonicalMaxOrder));
        const Graph g = oracle::random_graph(rng, n, 1 + static_cast<int>(rng.below(9)), 10);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        rng.shuffle(perm);
        const Graph h = relabel(g, perm);
        CHECK(canonical_graph6(g) == canonical_graph6(h));
        const Graph c = canonical_form(g);
        CHECK(c.edge_count() == g.edge_count());
        // Flipping one pair changes the edge count, so the class must differ.
        if (n >= 2) {
            GraphBuilder b(g);
            if (!b.add_edge(0, 1)) b.remove_edge(0, 1);
            CHECK(canonical_graph6(b.view()) != canonical_graph6(g));
        }
    }
    // Same degree sequence, not isomorphic.
    CHECK(canonical_graph6(cycle(6)) != canonical_graph6(disjoint_union(cycle(3), cycle(3))));
    const auto kept = dedup_isomorphic({cycle(5), relabel(cycle(5), {2, 0, 4, 1, 3}), complete_graph(5), cycle(5)});
    CHECK(kept.size() == 2);
}
