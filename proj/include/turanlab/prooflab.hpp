#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turanlab/detect.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/rational.hpp"

namespace turanlab {

// Constants of the density argument.
inline constexpr int kLowDegreeCap = 10;         // greedy_independent_set drops degree > 10
inline constexpr int kIndependentRatioDen = 55;  // independent set of size 3k/55
inline constexpr int kClawCaseMaxDegree = 83;    // disjoint claws when the class degree is <= 83
inline constexpr int kStarMinDegree = 84;        // induced claws inside stars of degree >= 84
inline constexpr int kTripleDen = 1328;          // delta*n/1328 triples
inline constexpr int kBetaDen = 9296;            // beta >= delta/9296

struct Params {
    Rational delta;
    Rational beta;
    Rational gamma;
    std::optional<long long> n0;

    /// beta = delta/9296 and the smallest gamma = j/100000 (j >= 1, gamma < 1/32)
    /// for which all four inequalities hold at n; gamma = 1/32 if none does.
    static Params derive(const Rational& delta, long long n = 1000);
};

// ---------------------------------------------------------------------------

struct GoodSubgraph {
    Graph graph;
    /// kept[i] = id in the input of vertex i of `graph`.
    std::vector<int> kept;
    /// Input ids in deletion order.
    std::vector<int> removed;
    /// e(H) > v(H)^2/4 + (1+delta) v(H).
    bool dense = false;
};

/// True iff every vertex has degree > floor(v/2) + 1 and every edge uv has
/// d(u) + d(v) - 1 >= v + 2 (edges incident to u or v).
bool satisfies_good_conditions(const Graph& h);

/// Deletes violating vertices one at a time (smallest degree first, then
/// lowest id) until the conditions hold or nothing is left.
GoodSubgraph extract_good_subgraph(const Graph& g, const Rational& delta);

struct Partition {
    VertexSet a;
    VertexSet b;
    int cut_edges = 0;
};

int cut_size(const Graph& g, const VertexSet& a);

/// Best-improving swap local search from a seeded balanced split. max_swaps < 0
/// means run to a local optimum.
Partition balanced_max_cut(const Graph& g, long long max_swaps, std::uint64_t seed);

/// Deletes every vertex of degree > 10 (degrees in g), then repeatedly takes the
/// lowest remaining vertex and deletes its neighbors.
VertexSet greedy_independent_set(const Graph& g);

enum class TripleKind { disjoint_claw, induced_in_star };
std::string to_string(TripleKind k);

struct K13Triple {
    int center = -1;
    std::array<int, 3> leaves{};
    TripleKind kind = TripleKind::disjoint_claw;
};

/// Claws with center and leaves in `a`. If the maximum degree inside `a` is at
/// most 83, disjoint claws are harvested; otherwise every vertex of inside
/// degree >= 84 contributes floor(|I|/3) triples from an independent set I of
/// its inside neighborhood.
std::vector<K13Triple> find_k13_triples(const Graph& g, const VertexSet& a, const Params& params);

struct InequalityReport {
    bool b1 = false;
    bool b2 = false;
    bool b3 = false;
    bool beta_def = false;
    bool all = false;
    Rational b1_lhs, b1_rhs, b2_lhs, b2_rhs, b3_lhs, b3_rhs;
};

/// Exact evaluation. Throws DomainError when beta = 0, ArgumentError when n < 1.
InequalityReport check_parameter_inequalities(const Params& p, long long n);

// ---------------------------------------------------------------------------

struct ProofStep {
    std::string kind;
    std::string input;
    std::string output;
    bool success = false;
};

struct ProofTrace {
    std::vector<ProofStep> steps;
};

struct PipelineOptions {
    std::uint64_t seed = 0;
    long long cut_swaps = -1;
    /// Stop after this many wheel candidates.
    int max_candidates = 2000;
};

struct PipelineResult {
    std::optional<TP3Witness> witness;
    ProofTrace trace;
    bool via_fallback = false;
    /// Sparse 7-wheels assembled during the chase, in input ids.
    std::vector<WheelWitness> wheel_candidates;
};

PipelineResult witness_pipeline(const Graph& g, const Params& params, const PipelineOptions& opts = {});

}  // namespace turanlab
