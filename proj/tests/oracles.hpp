#pragma once

// Test-only reference implementations. They share no code with the library's
// detection or search paths and favour obviousness over speed.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "turanlab/graph.hpp"
#include "turanlab/rng.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const turanlab::Graph& g) {
    Matrix m(g.order(), std::vector<bool>(g.order(), false));
    for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
    return m;
}

/// Straight from the format description: N(n) header, then the bits of the
/// upper triangle listed column by column, big-endian 6-bit groups, each +63.
inline Matrix decode_graph6(const std::string& s) {
    std::size_t pos = 0;
    int n = s[pos] - 63;
    ++pos;
    if (n == 63) {
        n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
        pos = 4;
    }
    std::vector<int> bits;
    for (; pos < s.size(); ++pos) {
        int x = s[pos] - 63;
        for (int b = 5; b >= 0; --b) bits.push_back((x >> b) & 1);
    }
    Matrix m(n, std::vector<bool>(n, false));
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (bits.at(k)) m[i][j] = m[j][i] = true;
    return m;
}

/// Plain backtracking over pattern vertices 0..p-1 in index order, checking
/// each pattern edge once both ends are placed.
inline bool contains(const turanlab::Graph& host, const turanlab::Graph& pattern) {
    const Matrix h = matrix_of(host);
    const Matrix p = matrix_of(pattern);
    const int hn = host.order();
    const int pn = pattern.order();
    if (pn > hn) return false;
    std::vector<int> map(pn, -1);
    std::vector<bool> used(hn, false);
    std::function<bool(int)> go = [&](int i) {
        if (i == pn) return true;
        for (int v = 0; v < hn; ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (p[i][j] && !h[v][map[j]]) ok = false;
            if (!ok) continue;
            used[v] = true;
            map[i] = v;
            if (go(i + 1)) return true;
            used[v] = false;
        }
        return false;
    };
    return go(0);
}

/// Max edges over all labelled graphs on n vertices avoiding `pattern`; n <= 7.
inline int brute_force_ex(int n, const turanlab::Graph& pattern) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    int best = 0;
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const int e = __builtin_popcountll(mask);
        if (e <= best) continue;
        turanlab::GraphBuilder b(n);
        for (std::size_t s = 0; s < slots.size(); ++s)
            if ((mask >> s) & 1) b.add_edge(slots[s].first, slots[s].second);
        if (!contains(b.view(), pattern)) best = e;
    }
    return best;
}

inline bool is_colorable(const turanlab::Graph& g, int colors) {
    std::vector<int> c(g.order(), -1);
    std::function<bool(int)> go = [&](int v) {
        if (v == g.order()) return true;
        for (int k = 0; k < colors; ++k) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (c[u] == k && g.has_edge(u, v)) ok = false;
            if (!ok) continue;
            c[v] = k;
            if (go(v + 1)) return true;
        }
        c[v] = -1;
        return false;
    };
    return go(0);
}

/// Erdős–Rényi G(n, num/den).
inline turanlab::Graph random_graph(turanlab::Rng& rng, int n, int num, int den) {
    turanlab::GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(num, den)) b.add_edge(u, v);
    return std::move(b).build();
}

/// Uniform G(n, m).
inline turanlab::Graph random_graph_m(turanlab::Rng& rng, int n, int m) {
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    rng.shuffle(all);
    turanlab::GraphBuilder b(n);
    for (int i = 0; i < m && i < static_cast<int>(all.size()); ++i) b.add_edge(all[i].first, all[i].second);
    return std::move(b).build();
}

/// Hall's condition checked over every subfamily.
inline bool hall_holds(const std::vector<std::vector<int>>& sets) {
    const int k = static_cast<int>(sets.size());
    for (int mask = 1; mask < (1 << k); ++mask) {
        std::vector<int> uni;
        for (int i = 0; i < k; ++i)
            if ((mask >> i) & 1) uni.insert(uni.end(), sets[i].begin(), sets[i].end());
        std::sort(uni.begin(), uni.end());
        uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
        if (static_cast<int>(uni.size()) < __builtin_popcount(mask)) return false;
    }
    return true;
}

}  // namespace oracle
