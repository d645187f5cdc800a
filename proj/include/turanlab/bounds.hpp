#pragma once

#include <string>

#include "turanlab/graph.hpp"
#include "turanlab/rational.hpp"

namespace turanlab {

// Closed-form edge bounds for the forbidden families studied here. Every
// function is exact; only ess_asymptote and lemma1_bound can be non-integral.

long long binomial2(long long n);

/// Complete r-partite graph on n vertices with part sizes differing by at most one.
/// Parts are contiguous id ranges, larger parts first.
Graph turan_graph(int n, int r);
long long turan_edges(long long n, long long r);

/// floor(n^2/4): triangle-free maximum.
long long mantel_bound(long long n);

/// Maximum edges without the flattened tetrahedron; defined for n >= 1, n != 5.
long long tp2_exact_value(long long n);

/// floor(n^2/4 + n/2 + 1): maximum edges without a 7-wheel.
long long wheel7_bound(long long n);

/// n^2/4 + 7n/2, the crude upper bound for TP_3-free graphs (meaningful for n >= 10).
Rational lemma1_bound(long long n);

/// (1 - 1/(chi-1)) * C(n,2). Diagnostic only.
Rational ess_asymptote(long long chi, long long n);

/// n^2/4 + n + 1 for even n, n^2/4 + n + 3/4 for odd n.
Rational conjectured_tp3(long long n);

enum class BoundKind { mantel, turan_r, tp2_exact, wheel7, lemma1_tp3, ess_asymptote };

struct BoundReport {
    long long n = 0;
    BoundKind kind = BoundKind::mantel;
    Rational value;
    /// Human-readable formula, e.g. "lemma1: n^2/4+7n/2".
    std::string provenance;
};

/// `param` is r for turan_r and chi for ess_asymptote; ignored otherwise.
BoundReport bound_report(BoundKind kind, long long n, long long param = 0);

std::string to_string(BoundKind kind);

}  // namespace turanlab
