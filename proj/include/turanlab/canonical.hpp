#pragma once

#include <string>
#include <vector>

#include "turanlab/graph.hpp"

namespace turanlab {

/// Graphs up to this order get an exact canonical form; callers fall back to
/// labelled comparison above it.
inline constexpr int kCanonicalMaxOrder = 12;

/// Relabelling that maximizes the graph6 string over all leaves of an
/// individualization-refinement tree (twin classes are branched once). Two
/// graphs are isomorphic iff their canonical forms are equal.
Graph canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);

/// Keeps the first graph of each isomorphism class, in input order.
std::vector<Graph> dedup_isomorphic(const std::vector<Graph>& graphs);

}  // namespace turanlab
