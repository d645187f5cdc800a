#include "turanlab/detect.hpp"

#include <algorithm>

#include "turanlab/errors.hpp"
#include "turanlab/pyramids.hpp"

namespace turanlab {

bool is_valid_embedding(const Graph& host, const Graph& pattern, const Embedding& e) {
    if (e.pattern_size() != pattern.order()) return false;
    VertexSet seen;
    for (int v : e.map) {
        if (v < 0 || v >= host.order() || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (auto [a, b] : pattern.edges())
        if (!host.has_edge(e.map[a], e.map[b])) return false;
    return true;
}

bool is_valid_wheel(const Graph& g, const WheelWitness& w) {
    VertexSet seen;
    auto fresh = [&](int v) {
        if (v < 0 || v >= g.order() || seen.contains(v)) return false;
        seen.insert(v);
        return true;
    };
    if (!fresh(w.hub)) return false;
    for (int v : w.rim)
        if (!fresh(v)) return false;
    for (int i = 0; i < 6; ++i) {
        if (!g.has_edge(w.hub, w.rim[i])) return false;
        if (!g.has_edge(w.rim[i], w.rim[(i + 1) % 6])) return false;
    }
    return true;
}

bool is_valid_tp3(const Graph& g, const TP3Witness& w) {
    if (!is_valid_wheel(g, w.wheel)) return false;
    VertexSet used{w.wheel.hub};
    for (int v : w.wheel.rim) used.insert(v);
    for (int j = 0; j < 3; ++j) {
        const int a = w.apexes[j];
        if (a < 0 || a >= g.order() || used.contains(a)) return false;
        used.insert(a);
        if (!g.has_edge(a, w.wheel.rim[2 * j]) || !g.has_edge(a, w.wheel.rim[2 * j + 1])) return false;
    }
    return true;
}

WheelWitness canonical_wheel(WheelWitness w) {
    const auto min_it = std::min_element(w.rim.begin(), w.rim.end());
    const int start = static_cast<int>(min_it - w.rim.begin());
    std::array<int, 6> fwd{};
    std::array<int, 6> bwd{};
    for (int i = 0; i < 6; ++i) {
        fwd[i] = w.rim[(start + i) % 6];
        bwd[i] = w.rim[(start - i + 6) % 6];
    }
    w.rim = fwd[1] < bwd[1] ? fwd : bwd;
    return w;
}

Embedding to_embedding(const TP3Witness& w) {
    // Positions of the reference wheel inside triangular_pyramid(3).
    const PyramidWheel ref = pyramid_center_wheel();
    Embedding e;
    e.map.assign(10, -1);
    e.map[ref.hub] = w.wheel.hub;
    for (int i = 0; i < 6; ++i) e.map[ref.rim[i]] = w.wheel.rim[i];
    for (int j = 0; j < 3; ++j) e.map[ref.apexes[j]] = w.apexes[j];
    return e;
}

namespace {

/// twin[v] is the smallest u whose neighborhood agrees with v's outside {u, v}.
/// Swapping two unused twins is an automorphism fixing every used vertex, so
/// a search node only needs to try one member of each class.
std::vector<int> twin_classes(const Graph& g) {
    const int n = g.order();
    std::vector<int> twin(n);
    std::vector<int> reps;
    for (int v = 0; v < n; ++v) {
        twin[v] = v;
        for (int u : reps) {
            VertexSet nu = g.neighbors(u);
            VertexSet nv = g.neighbors(v);
            nu.erase(v);
            nv.erase(u);
            if (nu == nv) {
                twin[v] = u;
                break;
            }
        }
        if (twin[v] == v) reps.push_back(v);
    }
    return twin;
}

class Embedder {
public:
    Embedder(const Graph& host, const Graph& pattern)
        : host_(host), pattern_(pattern), pn_(pattern.order()), twin_(twin_classes(host)) {}

    std::optional<Embedding> run(const std::vector<std::pair<int, int>>& fixed) {
        if (pn_ > host_.order()) return std::nullopt;
        if (pn_ == 0) return Embedding{};
        levels_.assign(pn_ + 1, std::vector<VertexSet>(pn_));
        map_.assign(pn_, -1);
        auto& root = levels_[0];
        for (int p = 0; p < pn_; ++p) {
            const int need = pattern_.degree(p);
            for (int v = 0; v < host_.order(); ++v)
                if (host_.degree(v) >= need) root[p].insert(v);
        }
        for (auto [p, v] : fixed) {
            if (map_[p] >= 0 || !root[p].contains(v)) return std::nullopt;
            if (!assign(root, p, v)) return std::nullopt;
        }
        if (!search(0)) return std::nullopt;
        return Embedding{map_};
    }

private:
    bool assign(std::vector<VertexSet>& doms, int p, int v) {
        map_[p] = v;
        const VertexSet& pn = pattern_.neighbors(p);
        const VertexSet& hn = host_.neighbors(v);
        VertexSet pool;
        int open = 0;
        for (int q = 0; q < pn_; ++q) {
            if (map_[q] >= 0) continue;
            doms[q].erase(v);
            if (pn.contains(q)) doms[q] &= hn;
            if (doms[q].empty()) return false;
            pool |= doms[q];
            ++open;
        }
        return pool.count() >= open;
    }

    bool search(int level) {
        auto& doms = levels_[level];
        int pick = -1;
        int best_size = 0;
        int best_placed = -1;
        for (int q = 0; q < pn_; ++q) {
            if (map_[q] >= 0) continue;
            const int size = doms[q].count();
            int placed = 0;
            for (int r : pattern_.neighbors(q))
                if (map_[r] >= 0) ++placed;
            if (pick < 0 || size < best_size || (size == best_size && placed > best_placed) ||
                (size == best_size && placed == best_placed && pattern_.degree(q) > pattern_.degree(pick))) {
                pick = q;
                best_size = size;
                best_placed = placed;
            }
        }
        if (pick < 0) return true;

        VertexSet tried_classes;
        for (int v : doms[pick]) {
            if (tried_classes.contains(twin_[v])) continue;
            tried_classes.insert(twin_[v]);
            auto& next = levels_[level + 1];
            next = doms;
            if (assign(next, pick, v) && search(level + 1)) return true;
            map_[pick] = -1;
        }
        return false;
    }

    const Graph& host_;
    const Graph& pattern_;
    int pn_;
    std::vector<int> twin_;
    std::vector<std::vector<VertexSet>> levels_;
    std::vector<int> map_;
};

}  // namespace

std::optional<Embedding> contains_subgraph(const Graph& host, const Graph& pattern) {
    return Embedder(host, pattern).run({});
}

std::optional<Embedding> contains_subgraph_through_edge(const Graph& host, const Graph& pattern, int u, int v) {
    if (!host.has_edge(u, v)) return std::nullopt;
    Embedder engine(host, pattern);
    for (auto [a, b] : pattern.edges()) {
        if (auto e = engine.run({{a, u}, {b, v}})) return e;
        if (auto e = engine.run({{a, v}, {b, u}})) return e;
    }
    return std::nullopt;
}

namespace {

/// Enumerates 6-cycles inside N(hub), each once, as (c0..c5) with c0 the
/// minimum and c1 < c5. The visitor returns true to stop.
template <typename Visit>
bool for_each_hub_cycle(const Graph& g, int hub, Visit&& visit) {
    const VertexSet& nbhd = g.neighbors(hub);
    std::array<int, 6> c{};
    for (int s : nbhd) {
        const VertexSet pool = nbhd.above(s);
        if (pool.count() < 5) break;
        c[0] = s;
        const VertexSet& ns = g.neighbors(s);
        const VertexSet closers = ns & pool;
        if (closers.count() < 2) continue;
        for (int c1 : closers) {
            c[1] = c1;
            VertexSet p2 = g.neighbors(c1) & pool;
            for (int c2 : p2) {
                c[2] = c2;
                VertexSet p3 = g.neighbors(c2) & pool;
                p3.erase(c1);
                for (int c3 : p3) {
                    c[3] = c3;
                    VertexSet p4 = g.neighbors(c3) & pool;
                    p4.erase(c1);
                    p4.erase(c2);
                    for (int c4 : p4) {
                        c[4] = c4;
                        VertexSet p5 = g.neighbors(c4) & closers.above(c1);
                        p5.erase(c2);
                        p5.erase(c3);
                        for (int c5 : p5) {
                            c[5] = c5;
                            if (visit(c)) return true;
                        }
                    }
                }
            }
        }
    }
    return false;
}

/// Rim sequences around `hub` with the offset-0 triple (c0c1, c2c3, c4c5)
/// playing the apex role. Orbits are cut in two compatible ways: each rim
/// vertex is the smallest unused member of its twin class (permuting a twin
/// class is an automorphism fixing the hub), and c0 carries the smallest twin
/// class id on the rim (the six symmetries preserving the triple move every
/// position to the front). Rim vertices need degree >= 4, and the first two
/// triple edges must keep external common neighbors.
template <typename Visit>
bool for_each_hub_rim_up_to_twins(const Graph& g, int hub, const std::vector<int>& twin,
                                  const std::vector<VertexSet>& members, const VertexSet& rim_ok,
                                  Visit&& visit) {
    std::array<int, 6> c{};
    VertexSet used{hub};
    const VertexSet nbhd = g.neighbors(hub) & rim_ok;
    auto step = [&](auto&& self, int k, const VertexSet& dom) -> bool {
        for (int v : dom) {
            if (k > 0 && twin[v] < twin[c[0]]) continue;
            if ((members[twin[v]] - used).first() != v) continue;
            c[k] = v;
            used.insert(v);
            bool ok = true;
            if (k == 1) {
                ok = ((g.neighbors(c[0]) & g.neighbors(v)) - used).any();
            } else if (k == 3) {
                const VertexSet a1 = (g.neighbors(c[2]) & g.neighbors(v)) - used;
                ok = a1.any() && (a1 | ((g.neighbors(c[0]) & g.neighbors(c[1])) - used)).count() >= 2;
            }
            if (ok) {
                if (k == 5) {
                    if (visit(c)) return true;
                } else {
                    VertexSet next = (nbhd & g.neighbors(v)) - used;
                    if (k == 4) next &= g.neighbors(c[0]);
                    if (self(self, k + 1, next)) return true;
                }
            }
            used.erase(v);
        }
        return false;
    };
    return step(step, 0, nbhd);
}

bool hall_ok3(const std::array<VertexSet, 3>& a) {
    if (a[0].empty() || a[1].empty() || a[2].empty()) return false;
    if ((a[0] | a[1]).count() < 2 || (a[0] | a[2]).count() < 2 || (a[1] | a[2]).count() < 2) return false;
    return (a[0] | a[1] | a[2]).count() >= 3;
}

/// Tries offset 0 (edges c0c1, c2c3, c4c5) then offset 1 (c1c2, c3c4, c5c0).
std::optional<TP3Witness> extend_cycle(const Graph& g, int hub, const std::array<int, 6>& c, int offsets = 2) {
    VertexSet wheel{hub};
    for (int v : c) wheel.insert(v);
    for (int off = 0; off < offsets; ++off) {
        std::array<VertexSet, 3> cand;
        for (int j = 0; j < 3; ++j)
            cand[j] = (g.neighbors(c[(2 * j + off) % 6]) & g.neighbors(c[(2 * j + 1 + off) % 6])) - wheel;
        if (!hall_ok3(cand)) continue;
        auto reps = distinct_representatives({cand[0], cand[1], cand[2]});
        if (!reps) continue;
        TP3Witness w;
        w.wheel.hub = hub;
        for (int i = 0; i < 6; ++i) w.wheel.rim[i] = c[(i + off) % 6];
        for (int j = 0; j < 3; ++j) w.apexes[j] = (*reps)[j];
        return w;
    }
    return std::nullopt;
}

std::optional<TP3Witness> witness_from_embedding(const Embedding& e) {
    const PyramidWheel ref = pyramid_center_wheel();
    TP3Witness w;
    w.wheel.hub = e.map[ref.hub];
    for (int i = 0; i < 6; ++i) w.wheel.rim[i] = e.map[ref.rim[i]];
    for (int j = 0; j < 3; ++j) w.apexes[j] = e.map[ref.apexes[j]];
    return w;
}

}  // namespace

std::optional<TP3Witness> find_tp3_among_hubs(const Graph& g, const VertexSet& hubs) {
    if (g.order() < 10) return std::nullopt;
    const Graph& tp3 = forbidden_pattern(Forbidden::tp3);
    const int ref_hub = pyramid_center_wheel().hub;
    const std::vector<int> twin = twin_classes(g);
    std::vector<VertexSet> members(g.order());
    for (int v = 0; v < g.order(); ++v) members[twin[v]].insert(v);
    VertexSet rim_ok;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) >= 4) rim_ok.insert(v);
    VertexSet tried;
    for (int h : hubs & g.vertices()) {
        const int d = g.degree(h);
        if (d < 6 || tried.contains(twin[h])) continue;
        tried.insert(twin[h]);
        if (d > kMaxHubNeighborhood) {
            if (auto e = Embedder(g, tp3).run({{ref_hub, h}})) return witness_from_embedding(*e);
            continue;
        }
        std::optional<TP3Witness> found;
        for_each_hub_rim_up_to_twins(g, h, twin, members, rim_ok, [&](const std::array<int, 6>& c) {
            found = extend_cycle(g, h, c, 1);
            return found.has_value();
        });
        if (found) return found;
    }
    return std::nullopt;
}

std::optional<TP3Witness> find_tp3(const Graph& g) { return find_tp3_among_hubs(g, g.vertices()); }

std::optional<TP3Witness> find_tp3_through_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) return std::nullopt;
    VertexSet hubs = g.neighbors(u) | g.neighbors(v);
    hubs.insert(u);
    hubs.insert(v);
    return find_tp3_among_hubs(g, hubs);
}

void for_each_wheel7(const Graph& g, const std::function<bool(const WheelWitness&)>& visit) {
    for (int h = 0; h < g.order(); ++h) {
        if (g.degree(h) < 6) continue;
        const bool stop = for_each_hub_cycle(g, h, [&](const std::array<int, 6>& c) {
            return !visit(WheelWitness{h, c});
        });
        if (stop) return;
    }
}

std::vector<WheelWitness> find_wheels7(const Graph& g, std::size_t limit) {
    std::vector<WheelWitness> out;
    if (limit == 0) return out;
    for_each_wheel7(g, [&](const WheelWitness& w) {
        out.push_back(w);
        return out.size() < limit;
    });
    return out;
}

bool is_sparse_wheel(const Graph& g, const WheelWitness& w) {
    if (!is_valid_wheel(g, w)) throw ArgumentError("is_sparse_wheel: not a 7-wheel of the graph");
    for (int i = 0; i < 6; ++i)
        if (g.has_edge(w.rim[i], w.rim[(i + 2) % 6])) return false;
    return true;
}

std::optional<TP3Witness> extend_wheel_to_tp3(const Graph& g, const WheelWitness& w) {
    if (!is_valid_wheel(g, w)) throw ArgumentError("extend_wheel_to_tp3: not a 7-wheel of the graph");
    return extend_cycle(g, w.hub, w.rim);
}

std::optional<Embedding> find_cycle(const Graph& g, int m) {
    if (m == 3) {
        for (int u = 0; u < g.order(); ++u)
            for (int v : g.neighbors(u).above(u)) {
                const VertexSet common = g.neighbors(u) & g.neighbors(v);
                const int w = common.above(v).first();
                if (w >= 0) return Embedding{{u, v, w}};
            }
        return std::nullopt;
    }
    if (m != 6) throw ArgumentError("find_cycle: only lengths 3 and 6 are supported");

    // Path s, c1..c5 over vertices above s, closing back to s; c1 < c5 fixes direction.
    for (int s = 0; s < g.order(); ++s) {
        const VertexSet pool = g.vertices().above(s);
        const VertexSet closers = g.neighbors(s) & pool;
        if (closers.count() < 2) continue;
        std::array<int, 6> c{s};
        for (int c1 : closers) {
            c[1] = c1;
            for (int c2 : g.neighbors(c1) & pool) {
                c[2] = c2;
                VertexSet p3 = g.neighbors(c2) & pool;
                p3.erase(c1);
                for (int c3 : p3) {
                    c[3] = c3;
                    VertexSet p4 = g.neighbors(c3) & pool;
                    p4.erase(c1);
                    p4.erase(c2);
                    for (int c4 : p4) {
                        c[4] = c4;
                        VertexSet p5 = g.neighbors(c4) & closers.above(c1);
                        p5.erase(c2);
                        p5.erase(c3);
                        const int c5 = p5.first();
                        if (c5 >= 0) {
                            c[5] = c5;
                            return Embedding{{c.begin(), c.end()}};
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<std::vector<int>> distinct_representatives(const std::vector<VertexSet>& sets) {
    const int k = static_cast<int>(sets.size());
    std::vector<int> rep(k, -1);
    std::vector<int> owner(kMaxVertices, -1);

    std::vector<char> visited;
    std::function<bool(int)> augment = [&](int i) -> bool {
        for (int x : sets[i]) {
            if (visited[x]) continue;
            visited[x] = 1;
            if (owner[x] < 0 || augment(owner[x])) {
                owner[x] = i;
                rep[i] = x;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < k; ++i) {
        visited.assign(kMaxVertices, 0);
        if (!augment(i)) return std::nullopt;
    }
    return rep;
}

int min_triangles_per_edge(const Graph& g) {
    if (g.edge_count() == 0) throw DomainError("min_triangles_per_edge: graph has no edges");
    int best = g.order();
    for (auto [u, v] : g.edges()) best = std::min(best, g.codegree(u, v));
    return best;
}

bool color2_has_c3_or_c6(const Graph& tp4, const VertexSet& color1) {
    const auto [sub, back] = tp4.induced(tp4.vertices() - color1);
    return find_cycle(sub, 3).has_value() || find_cycle(sub, 6).has_value();
}

ColoringClaimReport verify_tp4_coloring_claim() {
    const Graph& tp4 = forbidden_pattern(Forbidden::tp4);
    const int n = tp4.order();
    ColoringClaimReport report;
    for (long mask = 0; mask < (1L << n); ++mask) {
        ++report.total_colorings;
        VertexSet color1;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) color1.insert(v);
        bool independent = true;
        for (int v : color1)
            if (tp4.neighbors(v).intersects(color1)) {
                independent = false;
                break;
            }
        if (!independent) continue;
        ++report.colorings_checked;
        if (!color2_has_c3_or_c6(tp4, color1) && report.all_pass) {
            report.all_pass = false;
            report.counterexample = color1.to_vector();
        }
    }
    return report;
}

std::string to_string(Forbidden f) {
    switch (f) {
        case Forbidden::k3: return "k3";
        case Forbidden::tp2: return "tp2";
        case Forbidden::tp3: return "tp3";
        case Forbidden::tp4: return "tp4";
        case Forbidden::w7: return "w7";
        case Forbidden::c6: return "c6";
    }
    return "unknown";
}

Forbidden parse_forbidden(std::string_view name) {
    if (name == "k3" || name == "tp1") return Forbidden::k3;
    if (name == "tp2") return Forbidden::tp2;
    if (name == "tp3") return Forbidden::tp3;
    if (name == "tp4") return Forbidden::tp4;
    if (name == "w7") return Forbidden::w7;
    if (name == "c6") return Forbidden::c6;
    throw ArgumentError("unknown forbidden family '" + std::string(name) + "'");
}

const Graph& forbidden_pattern(Forbidden f) {
    static const Graph k3 = complete_graph(3);
    static const Graph tp2 = triangular_pyramid(2).graph;
    static const Graph tp3 = triangular_pyramid(3).graph;
    static const Graph tp4 = triangular_pyramid(4).graph;
    static const Graph w7 = wheel(7);
    static const Graph c6 = cycle(6);
    switch (f) {
        case Forbidden::k3: return k3;
        case Forbidden::tp2: return tp2;
        case Forbidden::tp3: return tp3;
        case Forbidden::tp4: return tp4;
        case Forbidden::w7: return w7;
        case Forbidden::c6: return c6;
    }
    throw ArgumentError("unknown forbidden family");
}

namespace {

Embedding wheel_embedding(const WheelWitness& w) {
    Embedding e;
    e.map.push_back(w.hub);
    for (int v : w.rim) e.map.push_back(v);
    return e;
}

}  // namespace

std::optional<Embedding> find_forbidden(const Graph& g, Forbidden f) {
    switch (f) {
        case Forbidden::k3: return find_cycle(g, 3);
        case Forbidden::c6: return find_cycle(g, 6);
        case Forbidden::tp3:
            if (auto w = find_tp3(g)) return to_embedding(*w);
            return std::nullopt;
        case Forbidden::w7: {
            auto ws = find_wheels7(g, 1);
            if (ws.empty()) return std::nullopt;
            return wheel_embedding(ws.front());
        }
        case Forbidden::tp2:
        case Forbidden::tp4: return contains_subgraph(g, forbidden_pattern(f));
    }
    return std::nullopt;
}

std::optional<Embedding> find_forbidden_through_edge(const Graph& g, Forbidden f, int u, int v) {
    if (!g.has_edge(u, v)) return std::nullopt;
    switch (f) {
        case Forbidden::k3: {
            const int w = (g.neighbors(u) & g.neighbors(v)).first();
            if (w < 0) return std::nullopt;
            return Embedding{{u, v, w}};
        }
        case Forbidden::tp3:
            if (auto w = find_tp3_through_edge(g, u, v)) return to_embedding(*w);
            return std::nullopt;
        default: return contains_subgraph_through_edge(g, forbidden_pattern(f), u, v);
    }
}

}  // namespace turanlab
