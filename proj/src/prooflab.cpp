#include "turanlab/prooflab.hpp"

#include <algorithm>
#include <numeric>

#include "turanlab/errors.hpp"
#include "turanlab/rng.hpp"

namespace turanlab {

Params Params::derive(const Rational& delta, long long n) {
    Params p;
    p.delta = delta;
    p.beta = delta / kBetaDen;
    p.gamma = Rational(1, 32);
    for (long long j = 1; Rational(j, 100000) < Rational(1, 32); ++j) {
        p.gamma = Rational(j, 100000);
        if (check_parameter_inequalities(p, n).all) return p;
    }
    p.gamma = Rational(1, 32);
    return p;
}

// ---------------------------------------------------------------------------

namespace {

bool vertex_ok(int degree, int v) { return degree > v / 2 + 1; }
bool edge_ok(int du, int dv, int v) { return du + dv - 1 >= v + 2; }

std::string summary(const Graph& g) { return "v=" + std::to_string(g.order()) + " e=" + std::to_string(g.edge_count()); }

}  // namespace

bool satisfies_good_conditions(const Graph& h) {
    const int v = h.order();
    for (int x = 0; x < v; ++x)
        if (!vertex_ok(h.degree(x), v)) return false;
    for (auto [x, y] : h.edges())
        if (!edge_ok(h.degree(x), h.degree(y), v)) return false;
    return true;
}

GoodSubgraph extract_good_subgraph(const Graph& g, const Rational& delta) {
    if (delta <= 0) throw DomainError("extract_good_subgraph needs delta > 0");
    VertexSet alive = g.vertices();
    std::vector<int> deg(g.order());
    for (int x = 0; x < g.order(); ++x) deg[x] = g.degree(x);
    GoodSubgraph out;
    while (alive.any()) {
        const int v = alive.count();
        int pick = -1;
        for (int x : alive) {
            bool bad = !vertex_ok(deg[x], v);
            if (!bad)
                for (int y : g.neighbors(x) & alive)
                    if (!edge_ok(deg[x], deg[y], v)) {
                        bad = true;
                        break;
                    }
            if (bad && (pick < 0 || deg[x] < deg[pick])) pick = x;
        }
        if (pick < 0) break;
        alive.erase(pick);
        for (int y : g.neighbors(pick) & alive) --deg[y];
        out.removed.push_back(pick);
    }
    auto [h, kept] = g.induced(alive);
    out.graph = std::move(h);
    out.kept = std::move(kept);
    const Rational v = out.graph.order();
    out.dense = out.graph.order() > 0 && Rational(out.graph.edge_count()) > v * v / 4 + (1 + delta) * v;
    return out;
}

int cut_size(const Graph& g, const VertexSet& a) {
    int c = 0;
    for (int x : a) c += (g.neighbors(x) - a).count();
    return c;
}

Partition balanced_max_cut(const Graph& g, long long max_swaps, std::uint64_t seed) {
    const int n = g.order();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    rng.shuffle(order);
    Partition p;
    for (int i = 0; i < n; ++i) (i < n / 2 ? p.a : p.b).insert(order[i]);

    for (long long swaps = 0; max_swaps < 0 || swaps < max_swaps; ++swaps) {
        int best_gain = 0, best_a = -1, best_b = -1;
        for (int x : p.a) {
            const int own = (g.neighbors(x) & p.a).count() - (g.neighbors(x) & p.b).count();
            for (int y : p.b) {
                const int other = (g.neighbors(y) & p.b).count() - (g.neighbors(y) & p.a).count();
                const int gain = own + other + (g.has_edge(x, y) ? 2 : 0);
                if (gain > best_gain) {
                    best_gain = gain;
                    best_a = x;
                    best_b = y;
                }
            }
        }
        if (best_a < 0) break;
        p.a.erase(best_a);
        p.b.insert(best_a);
        p.b.erase(best_b);
        p.a.insert(best_b);
    }
    p.cut_edges = cut_size(g, p.a);
    return p;
}

VertexSet greedy_independent_set(const Graph& g) {
    VertexSet remaining;
    for (int x = 0; x < g.order(); ++x)
        if (g.degree(x) <= kLowDegreeCap) remaining.insert(x);
    VertexSet picked;
    while (remaining.any()) {
        const int x = remaining.first();
        picked.insert(x);
        remaining.erase(x);
        remaining -= g.neighbors(x);
    }
    return picked;
}

std::string to_string(TripleKind k) { return k == TripleKind::disjoint_claw ? "disjoint_claw" : "induced_in_star"; }

std::vector<K13Triple> find_k13_triples(const Graph& g, const VertexSet& a, const Params&) {
    std::vector<K13Triple> out;
    const VertexSet inside = a & g.vertices();
    int delta = 0;
    for (int x : inside) delta = std::max(delta, (g.neighbors(x) & inside).count());

    if (delta <= kClawCaseMaxDegree) {
        VertexSet left = inside;
        bool again = true;
        while (again) {
            again = false;
            for (int x : left) {
                const VertexSet nb = g.neighbors(x) & left;
                if (nb.count() < 3) continue;
                K13Triple t;
                t.center = x;
                t.kind = TripleKind::disjoint_claw;
                int i = 0;
                for (int y : nb) {
                    if (i == 3) break;
                    t.leaves[i++] = y;
                }
                left.erase(x);
                for (int y : t.leaves) left.erase(y);
                out.push_back(t);
                again = true;
                break;
            }
        }
        return out;
    }
    for (int x : inside) {
        const VertexSet nb = g.neighbors(x) & inside;
        if (nb.count() < kStarMinDegree) continue;
        auto [star, back] = g.induced(nb);
        const std::vector<int> ind = greedy_independent_set(star).to_vector();
        for (std::size_t i = 0; i + 3 <= ind.size(); i += 3) {
            K13Triple t;
            t.center = x;
            t.kind = TripleKind::induced_in_star;
            for (int j = 0; j < 3; ++j) t.leaves[j] = back[ind[i + j]];
            out.push_back(t);
        }
    }
    return out;
}

InequalityReport check_parameter_inequalities(const Params& p, long long n) {
    if (n < 1) throw ArgumentError("check_parameter_inequalities needs n >= 1");
    if (p.beta == 0) throw DomainError("beta = 0: 8*gamma/beta is undefined");
    const Rational N = n;
    const Rational third = N / 3;
    const Rational triples = p.delta * N / kTripleDen;
    InequalityReport r;
    r.b1_lhs = third * (p.beta / 2 - 8 * p.gamma / p.beta) * third * (Rational(1, 4) - 8 * p.gamma);
    r.b1_rhs = p.gamma * N * N;
    r.b1 = r.b1_lhs < r.b1_rhs;
    r.b2_lhs = triples - p.beta * N;
    r.b2_rhs = Rational(6, 7) * triples;
    r.b2 = r.b2_lhs >= r.b2_rhs;
    r.b3_lhs = triples * ((N / 2 - 3 * p.beta * N) / 3);
    r.b3_rhs = p.gamma * N * N;
    r.b3 = r.b3_lhs < r.b3_rhs;
    r.beta_def = p.beta >= p.delta / kBetaDen;
    r.all = r.b1 && r.b2 && r.b3 && r.beta_def;
    return r;
}

// ---------------------------------------------------------------------------

namespace {

std::string list(const std::vector<int>& vs) {
    std::string s = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
    return s + "]";
}

// Three pairwise disjoint edges inside s, lexicographically first.
std::optional<std::array<std::pair<int, int>, 3>> three_independent_edges(const Graph& g, const VertexSet& s) {
    std::array<std::pair<int, int>, 3> m{};
    VertexSet used;
    auto rec = [&](auto&& self, int k, int from) -> bool {
        if (k == 3) return true;
        for (int x = (s - used).next(from - 1); x >= 0; x = (s - used).next(x)) {
            for (int y : (g.neighbors(x) & s).above(x) - used) {
                m[k] = {x, y};
                used.insert(x);
                used.insert(y);
                if (self(self, k + 1, x + 1)) return true;
                used.erase(x);
                used.erase(y);
            }
        }
        return false;
    };
    if (rec(rec, 0, 0)) return m;
    return std::nullopt;
}

struct Chase {
    const Graph& h;
    const PipelineOptions& opts;
    PipelineResult& res;
    const std::vector<int>& kept;
    int candidates = 0;

    TP3Witness to_input(TP3Witness w) const {
        w.wheel.hub = kept[w.wheel.hub];
        for (int& v : w.wheel.rim) v = kept[v];
        for (int& v : w.apexes) v = kept[v];
        return w;
    }

    void step(std::string kind, std::string in, std::string out, bool ok) {
        res.trace.steps.push_back({std::move(kind), std::move(in), std::move(out), ok});
    }

    // Hub = claw center, rim alternates leaves and an independent triple of the
    // other class joined completely to the claw.
    std::optional<TP3Witness> sparse_route(const K13Triple& t, const VertexSet& joined) {
        const auto& l = t.leaves;
        if (h.has_edge(l[0], l[1]) || h.has_edge(l[1], l[2]) || h.has_edge(l[0], l[2])) return std::nullopt;
        for (int b1 : joined)
            for (int b2 : joined.above(b1) - h.neighbors(b1))
                for (int b3 : (joined.above(b2) - h.neighbors(b1)) - h.neighbors(b2)) {
                    if (++candidates > opts.max_candidates) return std::nullopt;
                    const WheelWitness w{t.center, {l[0], b1, l[1], b2, l[2], b3}};
                    if (!is_valid_wheel(h, w) || !is_sparse_wheel(h, w)) continue;
                    WheelWitness in_ids = w;
                    in_ids.hub = kept[w.hub];
                    for (int& v : in_ids.rim) v = kept[v];
                    res.wheel_candidates.push_back(in_ids);
                    auto tp = extend_wheel_to_tp3(h, w);
                    step("sparse_wheel", "center=" + std::to_string(kept[t.center]) + " rim=" + list({in_ids.rim.begin(), in_ids.rim.end()}),
                         tp ? "extended" : "no distinct apexes", tp.has_value());
                    if (tp) return tp;
                }
        return std::nullopt;
    }

    // Three independent edges y_i z_i of the other class joined completely to
    // the claw: rim x1 y1 x2 y2 x3 y3 around the center, apexes z_i.
    std::optional<TP3Witness> matching_route(const K13Triple& t, const VertexSet& joined) {
        auto m = three_independent_edges(h, joined);
        if (!m) return std::nullopt;
        ++candidates;
        TP3Witness w;
        w.wheel.hub = t.center;
        for (int j = 0; j < 3; ++j) {
            w.wheel.rim[2 * j] = t.leaves[j];
            w.wheel.rim[2 * j + 1] = (*m)[j].first;
            w.apexes[j] = (*m)[j].second;
        }
        const bool ok = is_valid_tp3(h, w);
        step("matching", "center=" + std::to_string(kept[t.center]), ok ? "triangles on a 7-wheel" : "invalid assembly", ok);
        if (ok) return w;
        return std::nullopt;
    }

    std::optional<TP3Witness> run_class(const VertexSet& x, const VertexSet& y, const std::string& name,
                                        const Params& params) {
        const auto triples = find_k13_triples(h, x, params);
        int claws = 0, stars = 0;
        for (const auto& t : triples) (t.kind == TripleKind::disjoint_claw ? claws : stars)++;
        step("triples", "class " + name + " size=" + std::to_string(x.count()),
             std::to_string(claws) + " disjoint_claw, " + std::to_string(stars) + " induced_in_star", !triples.empty());
        if (triples.empty()) return std::nullopt;
        const bool matching_possible = three_independent_edges(h, y).has_value();
        if (claws > 0 && !matching_possible)
            step("obstruction", "other class", "no three independent edges", false);
        for (const auto& t : triples) {
            if (candidates > opts.max_candidates) break;
            VertexSet joined = y & h.neighbors(t.center);
            for (int l : t.leaves) joined &= h.neighbors(l);
            if (joined.count() < 3) continue;
            if (auto w = sparse_route(t, joined)) return w;
            if (t.kind == TripleKind::disjoint_claw && matching_possible)
                if (auto w = matching_route(t, joined)) return w;
        }
        return std::nullopt;
    }
};

}  // namespace

PipelineResult witness_pipeline(const Graph& g, const Params& params, const PipelineOptions& opts) {
    PipelineResult res;
    auto step = [&](std::string kind, std::string in, std::string out, bool ok) {
        res.trace.steps.push_back({std::move(kind), std::move(in), std::move(out), ok});
    };

    const GoodSubgraph good = extract_good_subgraph(g, params.delta);
    step("good_subgraph", summary(g),
         summary(good.graph) + " removed=" + std::to_string(good.removed.size()) + (good.dense ? " dense" : " not dense"),
         good.graph.order() > 0);

    if (good.graph.order() >= 10) {
        const Graph& h = good.graph;
        const Partition p = balanced_max_cut(h, opts.cut_swaps, opts.seed);
        step("max_cut", summary(h),
             "|A|=" + std::to_string(p.a.count()) + " |B|=" + std::to_string(p.b.count()) + " cut=" + std::to_string(p.cut_edges),
             true);
        Chase chase{h, opts, res, good.kept};
        std::optional<TP3Witness> w = chase.run_class(p.a, p.b, "A", params);
        if (!w) w = chase.run_class(p.b, p.a, "B", params);
        if (w) {
            res.witness = chase.to_input(*w);
            step("result", "chase", "TP_3 found", true);
            return res;
        }
    }
    res.witness = find_tp3(g);
    res.via_fallback = true;
    step("fallback", summary(g), res.witness ? "TP_3 found" : "TP_3-free", res.witness.has_value());
    return res;
}

}  // namespace turanlab
