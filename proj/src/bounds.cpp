#include "turanlab/bounds.hpp"

#include "turanlab/errors.hpp"

namespace turanlab {

namespace {

void require_nonnegative(long long n, const char* what) {
    if (n < 0) throw ArgumentError(std::string(what) + ": n must be non-negative");
}

}  // namespace

long long binomial2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

Graph turan_graph(int n, int r) {
    if (r < 1) throw ArgumentError("turan_graph: r must be at least 1");
    GraphBuilder b(n);
    std::vector<int> part(n);
    const int base = n / r;
    const int big = n % r;
    int v = 0;
    for (int p = 0; p < r && v < n; ++p) {
        const int size = base + (p < big ? 1 : 0);
        for (int i = 0; i < size; ++i) part[v++] = p;
    }
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (part[u] != part[w]) b.add_edge(u, w);
    return std::move(b).build();
}

long long turan_edges(long long n, long long r) {
    if (r < 1) throw ArgumentError("turan_edges: r must be at least 1");
    require_nonnegative(n, "turan_edges");
    const long long base = n / r;
    const long long big = n % r;
    return binomial2(n) - big * binomial2(base + 1) - (r - big) * binomial2(base);
}

long long mantel_bound(long long n) {
    require_nonnegative(n, "mantel_bound");
    return n * n / 4;
}

long long tp2_exact_value(long long n) {
    if (n < 1) throw DomainError("tp2_exact_value: n must be at least 1");
    if (n == 5) throw DomainError("tp2_exact_value: formula excludes n = 5");
    if (n % 4 == 2) return n * n / 4 + n / 2 - 1;
    return n * n / 4 + n / 2;
}

long long wheel7_bound(long long n) {
    require_nonnegative(n, "wheel7_bound");
    // floor((n^2 + 2n + 4) / 4)
    return (n * n + 2 * n + 4) / 4;
}

Rational lemma1_bound(long long n) {
    require_nonnegative(n, "lemma1_bound");
    return Rational(n * n, 4) + Rational(7 * n, 2);
}

Rational ess_asymptote(long long chi, long long n) {
    if (chi < 2) throw ArgumentError("ess_asymptote: chromatic number must be at least 2");
    require_nonnegative(n, "ess_asymptote");
    return (Rational(1) - Rational(1, chi - 1)) * Rational(binomial2(n));
}

Rational conjectured_tp3(long long n) {
    require_nonnegative(n, "conjectured_tp3");
    const Rational base = Rational(n * n, 4) + n;
    return n % 2 == 0 ? base + 1 : base + Rational(3, 4);
}

std::string to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::mantel: return "mantel";
        case BoundKind::turan_r: return "turan_r";
        case BoundKind::tp2_exact: return "tp2_exact";
        case BoundKind::wheel7: return "wheel7";
        case BoundKind::lemma1_tp3: return "lemma1_tp3";
        case BoundKind::ess_asymptote: return "ess_asymptote";
    }
    return "unknown";
}

BoundReport bound_report(BoundKind kind, long long n, long long param) {
    BoundReport r{n, kind, Rational(0), ""};
    switch (kind) {
        case BoundKind::mantel:
            r.value = mantel_bound(n);
            r.provenance = "mantel: floor(n^2/4)";
            break;
        case BoundKind::turan_r:
            r.value = turan_edges(n, param);
            r.provenance = "turan: t_" + std::to_string(param) + "(n)";
            break;
        case BoundKind::tp2_exact:
            r.value = tp2_exact_value(n);
            r.provenance = "tp2: floor(n^2/4)+floor(n/2), minus 1 if n=2 mod 4";
            break;
        case BoundKind::wheel7:
            r.value = wheel7_bound(n);
            r.provenance = "wheel7: floor(n^2/4+n/2+1)";
            break;
        case BoundKind::lemma1_tp3:
            r.value = lemma1_bound(n);
            r.provenance = "lemma1: n^2/4+7n/2";
            break;
        case BoundKind::ess_asymptote:
            r.value = ess_asymptote(param, n);
            r.provenance = "ess: (1-1/(chi-1))*C(n,2)";
            break;
    }
    return r;
}

}  // namespace turanlab
