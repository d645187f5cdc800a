#pragma once

#include <array>
#include <vector>

#include "turanlab/graph.hpp"

namespace turanlab {

/// Position x_index^layer of a pyramid vertex, both 1-based.
struct PyramidLabel {
    int layer = 0;
    int index = 0;
    friend bool operator==(const PyramidLabel&, const PyramidLabel&) = default;
};

/// Triangular pyramid TP_k with its layer labelling. Vertex ids are
/// layer-major, left to right: x_1^1 = 0, x_1^2 = 1, x_2^2 = 2, x_1^3 = 3, ...
struct LayeredPyramid {
    int k = 0;
    Graph graph;
    std::vector<PyramidLabel> labels;

    /// Id of x_index^layer.
    [[nodiscard]] static int id(int layer, int index) { return layer * (layer - 1) / 2 + index - 1; }
};

LayeredPyramid triangular_pyramid(int k);

Graph cycle(int m);
/// m counts the hub: wheel(7) is a 6-cycle plus a dominating vertex.
Graph wheel(int m);
/// K_{1,3} with the center at vertex 0.
Graph claw();
/// Hub 0 with legs 0-1-2, 0-3-4, 0-5-6.
Graph spider();
Graph complete_graph(int n);
/// Classes {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(int a, int b);

/// The 7-wheel of TP_3 centered at x_2^3 together with the three apexes that
/// sit on its alternating rim edges (rim[2j], rim[2j+1]).
struct PyramidWheel {
    int hub = 0;
    std::array<int, 6> rim{};
    std::array<int, 3> apexes{};
};

PyramidWheel pyramid_center_wheel();

}  // namespace turanlab
