#include "turanlab/construct.hpp"

#include <algorithm>

#include "turanlab/errors.hpp"
#include "turanlab/rng.hpp"

namespace turanlab {

namespace {

void add_clique(GraphBuilder& b, int first, int size) {
    for (int u = first; u < first + size; ++u)
        for (int v = u + 1; v < first + size; ++v) b.add_edge(u, v);
}

// Top class 0..top-1 tiled by cliques of `clique` vertices, bottom class
// top..n-1 tiled by cliques of `bottom_clique` (1 = independent).
Graph join_of_cliques(int n, int top, int clique, int bottom_clique) {
    GraphBuilder b(n);
    for (int s = 0; s < top; s += clique) add_clique(b, s, clique);
    for (int s = top; s < n; s += bottom_clique) add_clique(b, s, bottom_clique);
    for (int u = 0; u < top; ++u)
        for (int v = top; v < n; ++v) b.add_edge(u, v);
    return std::move(b).build();
}

void check_size(int n) {
    if (n < 0 || n > kMaxVertices) throw SizeError("n=" + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
}

}  // namespace

std::string to_string(ConstructionFamily f) {
    switch (f) {
        case ConstructionFamily::even_k5: return "even_k5";
        case ConstructionFamily::odd_k5: return "odd_k5";
        case ConstructionFamily::div6_triangles: return "div6";
        case ConstructionFamily::tp4_lower: return "tp4_lower";
    }
    return "?";
}

ConstructionFamily parse_family(std::string_view name) {
    if (name == "even_k5") return ConstructionFamily::even_k5;
    if (name == "odd_k5") return ConstructionFamily::odd_k5;
    if (name == "div6" || name == "div6_triangles") return ConstructionFamily::div6_triangles;
    if (name == "tp4_lower") return ConstructionFamily::tp4_lower;
    throw ArgumentError("unknown construction family '" + std::string(name) + "'");
}

bool family_applies(ConstructionFamily f, int n) {
    if (n < 1) return false;
    switch (f) {
        case ConstructionFamily::even_k5: return n % 2 == 0 && (n / 2 + 1) % 5 == 0;
        case ConstructionFamily::odd_k5: return n % 2 == 1 && ((n + 1) / 2) % 5 == 0;
        case ConstructionFamily::div6_triangles: return n % 6 == 0;
        case ConstructionFamily::tp4_lower: return n % 2 == 0 && n >= 4;
    }
    return false;
}

std::optional<Rational> claimed_edge_count(ConstructionFamily f, int n) {
    const Rational q = Rational(n) * n / 4;
    switch (f) {
        case ConstructionFamily::even_k5: return q + n + 1;
        case ConstructionFamily::odd_k5: return q + n + Rational(3, 4);
        case ConstructionFamily::div6_triangles: return q + n;
        case ConstructionFamily::tp4_lower: return std::nullopt;
    }
    return std::nullopt;
}

Graph construction_even_k5(int n) {
    check_size(n);
    if (!family_applies(ConstructionFamily::even_k5, n))
        throw SpecError("even_k5 needs n even with n/2+1 divisible by 5 (n = 8 mod 10); got n=" + std::to_string(n));
    return join_of_cliques(n, n / 2 + 1, 5, 1);
}

Graph construction_odd_k5(int n) {
    check_size(n);
    if (!family_applies(ConstructionFamily::odd_k5, n))
        throw SpecError("odd_k5 needs n odd with (n+1)/2 divisible by 5 (n = 9 mod 10); got n=" + std::to_string(n));
    return join_of_cliques(n, (n + 1) / 2, 5, 1);
}

Graph construction_div6(int n) {
    check_size(n);
    if (!family_applies(ConstructionFamily::div6_triangles, n))
        throw SpecError("div6 needs n divisible by 6; got n=" + std::to_string(n));
    return join_of_cliques(n, n / 2, 3, 3);
}

BestKnown best_known_tp3_free(int n) {
    check_size(n);
    if (n < 6) throw ArgumentError("best_known_tp3_free needs n >= 6");
    const ConstructionFamily families[] = {ConstructionFamily::even_k5, ConstructionFamily::odd_k5,
                                           ConstructionFamily::div6_triangles};
    for (int base = n; base >= 6; --base) {
        std::optional<ConstructionFamily> pick;
        Rational best;
        for (auto f : families) {
            if (!family_applies(f, base)) continue;
            const Rational c = *claimed_edge_count(f, base);
            if (!pick || c > best) {
                pick = f;
                best = c;
            }
        }
        if (!pick) continue;
        const Graph g = build_construction({*pick, base, 0});
        const int top = *pick == ConstructionFamily::div6_triangles ? base / 2
                        : *pick == ConstructionFamily::even_k5     ? base / 2 + 1
                                                                   : (base + 1) / 2;
        GraphBuilder b(n);
        for (auto [u, v] : g.edges()) b.add_edge(u, v);
        for (int extra = base; extra < n; ++extra)
            for (int t = 0; t < top; ++t) b.add_edge(t, extra);
        BestKnown out;
        out.graph = std::move(b).build();
        out.lower_bound = out.graph.edge_count();
        out.family = *pick;
        out.base_n = base;
        return out;
    }
    throw ArgumentError("no construction applies below n=" + std::to_string(n));
}

namespace {

// Simple path with exactly `len` edges from cur to target avoiding `used`.
bool path_of_length(const GraphBuilder& b, int cur, int target, int len, VertexSet& used) {
    const Graph& g = b.view();
    if (len == 1) return g.has_edge(cur, target);
    for (int w : g.neighbors(cur) - used) {
        if (w == target) continue;
        used.insert(w);
        const bool hit = path_of_length(b, w, target, len - 1, used);
        used.erase(w);
        if (hit) return true;
    }
    return false;
}

}  // namespace

Graph c6_free_bipartite(int a, int b, std::uint64_t seed) {
    if (a < 1 || b < 1) throw ArgumentError("c6_free_bipartite needs a, b >= 1");
    check_size(a + b);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(a) * b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) pairs.emplace_back(u, v);
    Rng rng(seed);
    rng.shuffle(pairs);
    GraphBuilder gb(a + b);
    for (auto [u, v] : pairs) {
        VertexSet used{u};
        if (!path_of_length(gb, u, v, 5, used)) gb.add_edge(u, v);
    }
    return std::move(gb).build();
}

LabelledGraph tp4_lower_construction(int n, std::uint64_t seed) {
    check_size(n);
    if (!family_applies(ConstructionFamily::tp4_lower, n))
        throw SpecError("tp4_lower needs n even and n >= 4; got n=" + std::to_string(n));
    const int half = n / 2;
    const int left = half / 2;
    const int right = half - left;
    const Graph inner = c6_free_bipartite(left, right, seed);
    GraphBuilder b(n);
    for (int u = 0; u < half; ++u)
        for (int v = half; v < n; ++v) b.add_edge(u, v);
    for (auto [u, v] : inner.edges()) b.add_edge(half + u, half + v);
    LabelledGraph out;
    out.graph = std::move(b).build();
    out.class_of.assign(n, 2);
    std::fill(out.class_of.begin(), out.class_of.begin() + half, 1);
    return out;
}

Graph build_construction(const ConstructionSpec& spec) {
    switch (spec.family) {
        case ConstructionFamily::even_k5: return construction_even_k5(spec.n);
        case ConstructionFamily::odd_k5: return construction_odd_k5(spec.n);
        case ConstructionFamily::div6_triangles: return construction_div6(spec.n);
        case ConstructionFamily::tp4_lower: return tp4_lower_construction(spec.n, spec.seed).graph;
    }
    throw ArgumentError("unknown construction family");
}

bool CertifiedReport::count_matches() const {
    if (!claimed_count) return true;
    return *claimed_count == Rational(edge_count);
}

CertifiedReport verify_construction(const Graph& g, Forbidden forbid, std::optional<Rational> claimed) {
    const auto start = std::chrono::steady_clock::now();
    CertifiedReport r;
    r.n = g.order();
    r.edge_count = g.edge_count();
    r.claimed_count = std::move(claimed);
    r.free_of = forbid;
    r.witness = find_forbidden(g, forbid);
    r.witness_absent = !r.witness.has_value();
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

}  // namespace turanlab
