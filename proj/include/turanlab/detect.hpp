#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "turanlab/graph.hpp"

namespace turanlab {

/// Injective map pattern-vertex -> host-vertex under which every pattern edge
/// is a host edge (non-induced containment).
struct Embedding {
    std::vector<int> map;
    [[nodiscard]] int pattern_size() const { return static_cast<int>(map.size()); }
    friend bool operator==(const Embedding&, const Embedding&) = default;
};

struct WheelWitness {
    int hub = -1;
    std::array<int, 6> rim{};
    friend bool operator==(const WheelWitness&, const WheelWitness&) = default;
};

/// A 7-wheel plus three apexes; apexes[j] is a common neighbor of
/// rim[2j] and rim[2j+1], and lies outside the wheel.
struct TP3Witness {
    WheelWitness wheel;
    std::array<int, 3> apexes{};
};

[[nodiscard]] bool is_valid_embedding(const Graph& host, const Graph& pattern, const Embedding& e);
[[nodiscard]] bool is_valid_wheel(const Graph& g, const WheelWitness& w);
[[nodiscard]] bool is_valid_tp3(const Graph& g, const TP3Witness& w);

/// Rim rotated to start at its minimum vertex, in the direction whose second
/// entry is smaller.
WheelWitness canonical_wheel(WheelWitness w);

/// The witness as an embedding of triangular_pyramid(3).graph.
Embedding to_embedding(const TP3Witness& w);

// ---------------------------------------------------------------------------
// Generic containment engine. Backtracking over pattern vertices with bitset
// domains, forward checking and a host twin-class symmetry cut.

std::optional<Embedding> contains_subgraph(const Graph& host, const Graph& pattern);

/// Copies of `pattern` that use the host edge uv. When the host minus uv is
/// pattern-free this is a complete check for host being pattern-free.
std::optional<Embedding> contains_subgraph_through_edge(const Graph& host, const Graph& pattern, int u, int v);

// ---------------------------------------------------------------------------
// Specialized detectors.

/// Hub neighborhoods larger than this fall back to the generic engine.
inline constexpr int kMaxHubNeighborhood = 64;

std::optional<TP3Witness> find_tp3(const Graph& g);
/// Only hubs in `hubs` are tried.
std::optional<TP3Witness> find_tp3_among_hubs(const Graph& g, const VertexSet& hubs);
/// TP_3 copies using edge uv (every such copy has its hub in N[u] ∪ N[v]).
std::optional<TP3Witness> find_tp3_through_edge(const Graph& g, int u, int v);

/// Visits every 7-wheel once, rim in canonical orientation. Return false from
/// the visitor to stop early.
void for_each_wheel7(const Graph& g, const std::function<bool(const WheelWitness&)>& visit);
std::vector<WheelWitness> find_wheels7(const Graph& g, std::size_t limit = std::numeric_limits<std::size_t>::max());

/// True iff no short chord rim[i]-rim[i+2] is present. Throws ArgumentError on
/// an invalid witness.
bool is_sparse_wheel(const Graph& g, const WheelWitness& w);

/// Tries both alternating rim-edge triples and looks for distinct apexes
/// outside the wheel.
std::optional<TP3Witness> extend_wheel_to_tp3(const Graph& g, const WheelWitness& w);

/// m must be 3 or 6. The embedding lists the cycle in order.
std::optional<Embedding> find_cycle(const Graph& g, int m);

/// One distinct representative per set (augmenting-path matching), or nullopt
/// when Hall's condition fails.
std::optional<std::vector<int>> distinct_representatives(const std::vector<VertexSet>& sets);

/// Minimum over edges of the number of triangles through the edge.
int min_triangles_per_edge(const Graph& g);

struct ColoringClaimReport {
    long total_colorings = 0;
    /// Colorings whose color-1 class is independent.
    long colorings_checked = 0;
    bool all_pass = true;
    /// Color-1 vertices of the first failing coloring.
    std::optional<std::vector<int>> counterexample;
};

/// True when the color-2 class of TP_4 (complement of `color1`) spans a C_3 or a C_6.
bool color2_has_c3_or_c6(const Graph& tp4, const VertexSet& color1);
ColoringClaimReport verify_tp4_coloring_claim();

// ---------------------------------------------------------------------------
// Forbidden-family dispatch shared by construct, search and the CLI.

enum class Forbidden { k3, tp2, tp3, tp4, w7, c6 };

std::string to_string(Forbidden f);
/// Accepts k3|tp1|tp2|tp3|tp4|w7|c6. Throws ArgumentError otherwise.
Forbidden parse_forbidden(std::string_view name);
const Graph& forbidden_pattern(Forbidden f);

std::optional<Embedding> find_forbidden(const Graph& g, Forbidden f);
std::optional<Embedding> find_forbidden_through_edge(const Graph& g, Forbidden f, int u, int v);

}  // namespace turanlab
