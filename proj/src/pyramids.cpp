#include "turanlab/pyramids.hpp"

#include "turanlab/errors.hpp"

namespace turanlab {

LayeredPyramid triangular_pyramid(int k) {
    if (k < 1) throw ArgumentError("triangular_pyramid: k must be at least 1");
    const int layers = k + 1;
    const int n = layers * (layers + 1) / 2;
    if (n > kMaxVertices) throw SizeError("triangular_pyramid: TP_" + std::to_string(k) + " exceeds vertex capacity");

    LayeredPyramid p;
    p.k = k;
    p.labels.resize(n);
    GraphBuilder b(n);
    for (int i = 1; i <= layers; ++i) {
        for (int r = 1; r <= i; ++r) {
            p.labels[LayeredPyramid::id(i, r)] = {i, r};
            if (r < i) b.add_edge(LayeredPyramid::id(i, r), LayeredPyramid::id(i, r + 1));
        }
        if (i == 1) continue;
        for (int r = 1; r <= i - 1; ++r) {
            b.add_edge(LayeredPyramid::id(i - 1, r), LayeredPyramid::id(i, r));
            b.add_edge(LayeredPyramid::id(i - 1, r), LayeredPyramid::id(i, r + 1));
        }
    }
    p.graph = std::move(b).build();
    return p;
}

Graph cycle(int m) {
    if (m < 3) throw ArgumentError("cycle: length must be at least 3");
    GraphBuilder b(m);
    for (int i = 0; i < m; ++i) b.add_edge(i, (i + 1) % m);
    return std::move(b).build();
}

Graph wheel(int m) {
    if (m < 4) throw ArgumentError("wheel: needs at least 4 vertices");
    GraphBuilder b(m);
    const int rim = m - 1;
    for (int i = 0; i < rim; ++i) {
        b.add_edge(1 + i, 1 + (i + 1) % rim);
        b.add_edge(0, 1 + i);
    }
    return std::move(b).build();
}

Graph claw() { return graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}}); }

Graph spider() { return graph_from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}); }

Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return std::move(b).build();
}

Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw ArgumentError("complete_bipartite: negative class size");
    GraphBuilder g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return std::move(g).build();
}

PyramidWheel pyramid_center_wheel() {
    using P = LayeredPyramid;
    PyramidWheel w;
    w.hub = P::id(3, 2);
    w.rim = {P::id(2, 1), P::id(2, 2), P::id(3, 3), P::id(4, 3), P::id(4, 2), P::id(3, 1)};
    w.apexes = {P::id(1, 1), P::id(4, 4), P::id(4, 1)};
    return w;
}

}  // namespace turanlab
