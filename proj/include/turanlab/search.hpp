#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "turanlab/detect.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/rational.hpp"

namespace turanlab {

enum class SearchStatus { exact, lower_bound_only, timeout };
std::string to_string(SearchStatus s);

/// row_major: slots (0,1),(0,2),...,(1,2),... with prefix-orbit pruning.
/// column_major: slots (0,1),(0,2),(1,2),(0,3),... with degree-sequence
/// pruning. The two orders share no pruning rule.
enum class BranchOrder { row_major, column_major };
std::string to_string(BranchOrder o);

/// Global bound on e(G) for H-free G on n vertices.
struct UpperBoundHook {
    std::string description;
    std::function<long long(int)> bound;
};

UpperBoundHook trivial_hook();
/// mantel for k3, wheel7 for w7, lemma1 for tp3 (n >= 10), trivial otherwise.
UpperBoundHook default_hook(Forbidden f);

struct SearchOptions {
    std::optional<std::chrono::milliseconds> time_budget;
    std::optional<UpperBoundHook> hook;
    BranchOrder order = BranchOrder::row_major;
    int jobs = 1;
    /// Second pass collecting extremal graphs (up to max_extremal classes).
    bool enumerate_extremal = true;
    std::size_t max_extremal = 32;
    /// Start from constructions and local search instead of the empty graph.
    bool seed_incumbent = true;
    std::uint64_t seed = 0;
};

struct SearchResult {
    int n = 0;
    Forbidden forbidden = Forbidden::k3;
    long long value = 0;
    SearchStatus status = SearchStatus::exact;
    /// graph6, canonical when isomorph_deduplicated.
    std::vector<std::string> extremal_graphs;
    /// All isomorphism classes were collected.
    bool extremal_complete = false;
    /// false above kCanonicalMaxOrder: only labelled duplicates were removed.
    bool isomorph_deduplicated = true;
    std::string upper_bound_used;
    BranchOrder order = BranchOrder::row_major;
    std::chrono::duration<double> elapsed{};
    long long nodes_expanded = 0;
};

/// Maximum e(G) over H-free graphs on n labelled vertices. On budget
/// exhaustion returns the incumbent with status timeout.
SearchResult exact_ex(int n, Forbidden f, const SearchOptions& opts = {});

struct LowerBoundResult {
    Graph graph;
    long long edges = 0;
};

/// Tabu search over edge flips; a flip that creates H is never made.
/// Deterministic for fixed (n, f, iterations, seed).
LowerBoundResult lower_bound_ex(int n, Forbidden f, long long iterations, std::uint64_t seed);

enum class Verdict { consistent, violated, open };
std::string to_string(Verdict v);

struct ConjectureRow {
    int n = 0;
    Rational conjectured;
    long long computed_lower = 0;
    std::optional<long long> computed_upper;
    Verdict verdict = Verdict::open;
    SearchStatus upper_status = SearchStatus::lower_bound_only;
};

struct ConjectureOptions {
    /// exact_ex is attempted for n <= exact_max_n.
    int exact_max_n = 10;
    std::optional<std::chrono::milliseconds> budget_per_n;
    long long local_search_iterations = 2000;
    std::uint64_t seed = 0;
    int jobs = 1;
};

/// violated iff computed_lower > conjectured; consistent iff an exact upper
/// bound <= conjectured is known; open otherwise.
Verdict conjecture_verdict(const Rational& conjectured, long long lower, std::optional<long long> upper);

std::vector<ConjectureRow> verify_conjecture_tp3(int n_from, int n_to, const ConjectureOptions& opts = {});

struct FormulaCheck {
    int n = 0;
    Forbidden forbidden = Forbidden::k3;
    long long computed = 0;
    long long expected = 0;
};

/// exact_ex(n, K_3) against mantel for 1 <= n <= n_max and exact_ex(n, TP_2)
/// against tp2_exact_value for 6 <= n <= n_max, with the trivial hook. Throws
/// PropertyViolation naming the first mismatching n; ArgumentError if n_max > 8.
std::vector<FormulaCheck> cross_check_formulas(int n_max, int jobs = 1);

}  // namespace turanlab
