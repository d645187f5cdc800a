#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "turanlab/detect.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/rational.hpp"

namespace turanlab {

// Extremal constructions. Vertex ids: the top class comes first, then the
// bottom class; cliques inside a class occupy consecutive ids.

enum class ConstructionFamily { even_k5, odd_k5, div6_triangles, tp4_lower };

std::string to_string(ConstructionFamily f);
/// Accepts even_k5, odd_k5, div6 (or div6_triangles), tp4_lower.
ConstructionFamily parse_family(std::string_view name);

struct ConstructionSpec {
    ConstructionFamily family = ConstructionFamily::div6_triangles;
    int n = 0;
    std::uint64_t seed = 0;
};

/// n even, n/2+1 divisible by 5: K_5s on the top n/2+1 vertices joined
/// completely to n/2-1 independent vertices. n^2/4 + n + 1 edges.
Graph construction_even_k5(int n);
/// n odd, (n+1)/2 divisible by 5. n^2/4 + n + 3/4 edges.
Graph construction_odd_k5(int n);
/// n divisible by 6: two classes of n/2, each a union of triangles, joined completely.
Graph construction_div6(int n);

/// Whether the family's divisibility predicate accepts n (tp4_lower: n even, n >= 4).
bool family_applies(ConstructionFamily f, int n);
/// Edge count the family is known to reach; nullopt for tp4_lower.
std::optional<Rational> claimed_edge_count(ConstructionFamily f, int n);

struct BestKnown {
    Graph graph;
    Rational lower_bound;
    ConstructionFamily family = ConstructionFamily::div6_triangles;
    /// Size of the underlying exact construction; padded iff base_n < n.
    int base_n = 0;
};

/// Largest applicable construction on n' <= n (ties: more edges), padded with
/// bottom-class vertices joined to the top class. Heuristic for padded n.
/// Throws ArgumentError for n < 6.
BestKnown best_known_tp3_free(int n);

/// Bipartite graph, classes 0..a-1 and a..a+b-1, with no C_6. Pairs are tried
/// in seeded random order and kept when they close no 6-cycle.
Graph c6_free_bipartite(int a, int b, std::uint64_t seed);

struct LabelledGraph {
    Graph graph;
    /// 1 or 2 per vertex.
    std::vector<int> class_of;
};

/// K_{n/2,n/2} with a C_6-free bipartite graph between the two halves of
/// class 2. Class 1 is 0..n/2-1. Throws SpecError for odd n or n < 4.
LabelledGraph tp4_lower_construction(int n, std::uint64_t seed);

Graph build_construction(const ConstructionSpec& spec);

struct CertifiedReport {
    int n = 0;
    int edge_count = 0;
    std::optional<Rational> claimed_count;
    Forbidden free_of = Forbidden::tp3;
    bool witness_absent = false;
    std::optional<Embedding> witness;
    std::chrono::duration<double> elapsed{};

    /// edge_count == claimed_count, or true when nothing is claimed.
    [[nodiscard]] bool count_matches() const;
};

CertifiedReport verify_construction(const Graph& g, Forbidden forbid, std::optional<Rational> claimed = std::nullopt);

}  // namespace turanlab
