#include "turanlab/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace turanlab {

namespace {

using Coloring = std::vector<int>;

// Stable color refinement. New colors are ranks of (old color, sorted
// neighbor colors), so the result depends only on the isomorphism type of
// (graph, coloring).
Coloring refine(const Graph& g, Coloring c) {
    const int n = g.order();
    int classes = static_cast<int>(std::set<int>(c.begin(), c.end()).size());
    while (true) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].first = c[v];
            for (int w : g.neighbors(v)) sig[v].second.push_back(c[w]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        std::map<std::pair<int, std::vector<int>>, int> rank;
        for (const auto& s : sig) rank.emplace(s, 0);
        int r = 0;
        for (auto& [key, val] : rank) val = r++;
        Coloring next(n);
        for (int v = 0; v < n; ++v) next[v] = rank[sig[v]];
        c = std::move(next);
        if (r == classes) return c;
        classes = r;
    }
}

bool twins(const Graph& g, int u, int v) {
    VertexSet a = g.neighbors(u), b = g.neighbors(v);
    a.erase(v);
    b.erase(u);
    return a == b;
}

Graph relabel(const Graph& g, const Coloring& c) {
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges()) b.add_edge(c[u], c[v]);
    return std::move(b).build();
}

struct Best {
    bool have = false;
    std::string g6;
    Graph graph;
};

void search(const Graph& g, const Coloring& c, Best& best) {
    const int n = g.order();
    // Target cell: smallest non-singleton, lowest color on ties.
    std::vector<int> size(n, 0);
    for (int v = 0; v < n; ++v) ++size[c[v]];
    int target = -1;
    for (int col = 0; col < n; ++col)
        if (size[col] > 1 && (target < 0 || size[col] < size[target])) target = col;
    if (target < 0) {
        Graph h = relabel(g, c);
        std::string s = write_graph6(h);
        if (!best.have || s > best.g6) {
            best.have = true;
            best.g6 = std::move(s);
            best.graph = std::move(h);
        }
        return;
    }
    std::vector<int> tried;
    for (int v = 0; v < n; ++v) {
        if (c[v] != target) continue;
        bool redundant = false;
        for (int t : tried)
            if (twins(g, t, v)) {
                redundant = true;
                break;
            }
        if (redundant) continue;
        tried.push_back(v);
        Coloring d(n);
        for (int w = 0; w < n; ++w) d[w] = 2 * c[w] + (c[w] == target && w != v ? 1 : 0);
        search(g, refine(g, std::move(d)), best);
    }
}

}  // namespace

Graph canonical_form(const Graph& g) {
    if (g.order() == 0) return g;
    Best best;
    search(g, refine(g, Coloring(g.order(), 0)), best);
    return best.graph;
}

std::string canonical_graph6(const Graph& g) { return write_graph6(canonical_form(g)); }

std::vector<Graph> dedup_isomorphic(const std::vector<Graph>& graphs) {
    std::set<std::string> seen;
    std::vector<Graph> out;
    for (const auto& g : graphs)
        if (seen.insert(canonical_graph6(g)).second) out.push_back(g);
    return out;
}

}  // namespace turanlab
