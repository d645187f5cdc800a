#include "turanlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

#include "turanlab/bounds.hpp"
#include "turanlab/canonical.hpp"
#include "turanlab/construct.hpp"
#include "turanlab/errors.hpp"
#include "turanlab/rng.hpp"

namespace turanlab {

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::exact: return "exact";
        case SearchStatus::lower_bound_only: return "lower_bound_only";
        case SearchStatus::timeout: return "timeout";
    }
    return "?";
}

std::string to_string(BranchOrder o) { return o == BranchOrder::row_major ? "row_major" : "column_major"; }

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::consistent: return "consistent";
        case Verdict::violated: return "violated";
        case Verdict::open: return "open";
    }
    return "?";
}

UpperBoundHook trivial_hook() {
    return {"trivial: C(n,2)", [](int n) { return binomial2(n); }};
}

UpperBoundHook default_hook(Forbidden f) {
    switch (f) {
        case Forbidden::k3: return {"mantel: floor(n^2/4)", [](int n) { return mantel_bound(n); }};
        case Forbidden::w7: return {"wheel7: floor(n^2/4+n/2+1)", [](int n) { return std::min(wheel7_bound(n), binomial2(n)); }};
        case Forbidden::tp3:
            return {"lemma1: n^2/4+7n/2", [](int n) {
                        if (n < 10) return binomial2(n);
                        return std::min(floor_to_ll(lemma1_bound(n)), binomial2(n));
                    }};
        default: return trivial_hook();
    }
}

namespace {

using Clock = std::chrono::steady_clock;

struct Shared {
    int n = 0;
    Forbidden f = Forbidden::k3;
    BranchOrder order = BranchOrder::row_major;
    std::vector<std::pair<int, int>> slots;
    long long hook_ub = 0;
    std::optional<Clock::time_point> deadline;

    std::atomic<long long> best{-1};
    std::atomic<bool> stop{false};
    std::atomic<long long> nodes{0};

    // Enumeration pass: collect graphs with exactly `target` edges.
    bool enumerate = false;
    long long target = 0;
};

struct Worker {
    explicit Worker(Shared& s)
        : sh(s), b(s.n), deg(s.n, 0), und(s.n, s.n - 1), cap_row(std::max(1, s.n), std::vector<int>(s.n, s.n - 1)),
          path(s.slots.size(), 0) {}

    Shared& sh;
    GraphBuilder b;
    std::vector<int> deg, und;
    std::vector<std::vector<int>> cap_row;
    std::vector<char> path;
    long long local_nodes = 0;

    std::optional<Graph> best_graph;

    // Enumeration output.
    std::size_t max_found = 0;
    std::vector<Graph> found;
    std::set<std::string> found_keys;

    // Prefix replay / task collection.
    const std::vector<char>* prefix = nullptr;
    int cur_i = -1, cur_j = -1;
    std::size_t split_depth = 0;
    std::vector<std::vector<char>>* tasks = nullptr;

    // floor(sum of degree potentials / 2), or -1 when a degree constraint is
    // already violated.
    long long bound(int row) const {
        const int n = sh.n;
        long long sum = 0;
        if (sh.order == BranchOrder::row_major) {
            const auto& cap = cap_row[row];
            for (int v = 0; v < n; ++v) {
                if (deg[v] > cap[v]) return -1;
                sum += std::min(cap[v], deg[v] + und[v]);
            }
        } else {
            int prev = n - 1;
            for (int v = 0; v < n; ++v) {
                const int pot = std::min(column_exceeds(v) ? prev - 1 : prev, deg[v] + und[v]);
                if (deg[v] > pot) return -1;
                sum += pot;
                prev = pot;
            }
        }
        return std::min(sum / 2, sh.hook_ub);
    }

    // Column order only. Among labellings with non-increasing degrees keep the
    // one whose colex adjacency string is largest: if the decided part of
    // column v beats column v-1 on rows < v-1, then d(v) < d(v-1).
    bool column_exceeds(int v) const {
        if (v < 1 || v > cur_j) return false;
        const int last = v == cur_j ? std::min(cur_i, v - 2) : v - 2;
        if (last < 0) return false;
        const VertexSet rows = VertexSet::range(last + 1);
        const VertexSet x = b.view().neighbors(v) & rows, y = b.view().neighbors(v - 1) & rows;
        const int first = ((x - y) | (y - x)).first();
        return first >= 0 && x.contains(first);
    }

    bool worth(long long ub) const {
        if (ub < 0) return false;
        return sh.enumerate ? ub >= sh.target : ub > sh.best.load(std::memory_order_relaxed);
    }

    // Caps in force while row i is processed: vertex i-1 bounds the degree
    // of every later vertex that was indistinguishable from it before row i-1.
    void enter_row(int i) {
        if (i == 0) {
            std::fill(cap_row[0].begin(), cap_row[0].end(), sh.n - 1);
            return;
        }
        auto& cap = cap_row[i];
        cap = cap_row[i - 1];
        const Graph& g = b.view();
        const VertexSet mask = VertexSet::range(i - 1);
        for (int v = i; v < sh.n; ++v)
            if (!((g.neighbors(i - 1) - g.neighbors(v)) | (g.neighbors(v) - g.neighbors(i - 1))).intersects(mask))
                cap[v] = std::min(cap[v], deg[i - 1]);
    }

    bool prefix_rule_allows(int i, int j) const {
        if (j - 1 <= i) return true;
        const Graph& g = b.view();
        if (g.has_edge(i, j - 1)) return true;
        const VertexSet mask = VertexSet::range(i);
        const VertexSet diff = (g.neighbors(j - 1) - g.neighbors(j)) | (g.neighbors(j) - g.neighbors(j - 1));
        return diff.intersects(mask);
    }

    void tick() {
        if ((++local_nodes & 1023) == 0) {
            sh.nodes.fetch_add(1024, std::memory_order_relaxed);
            if (sh.deadline && Clock::now() > *sh.deadline) sh.stop.store(true);
        }
    }

    void leaf() {
        const Graph& g = b.view();
        const long long e = g.edge_count();
        if (sh.enumerate) {
            if (e != sh.target || found.size() >= max_found) return;
            std::string key = sh.n <= kCanonicalMaxOrder ? canonical_graph6(g) : write_graph6(g);
            if (found_keys.insert(std::move(key)).second) found.push_back(g);
            if (found.size() >= max_found && !prefix) sh.stop.store(true);
            return;
        }
        long long cur = sh.best.load();
        while (e > cur)
            if (sh.best.compare_exchange_weak(cur, e)) {
                best_graph = g;
                break;
            }
    }

    void dfs(std::size_t s) {
        tick();
        if (sh.stop.load(std::memory_order_relaxed)) return;
        if (sh.enumerate && found.size() >= max_found) return;
        if (tasks && s == split_depth) {
            tasks->emplace_back(path.begin(), path.begin() + static_cast<long>(s));
            return;
        }
        if (s == sh.slots.size()) {
            leaf();
            return;
        }
        const auto [i, j] = sh.slots[s];
        const bool row = sh.order == BranchOrder::row_major;
        if (row && j == i + 1) {
            enter_row(i);
            if (!worth(bound(i))) return;
        }
        const int r = row ? i : 0;
        cur_i = i;
        cur_j = j;
        const bool forced = prefix && s < prefix->size();
        const char want = forced ? (*prefix)[s] : 2;

        if (want != 0 && (!row || (deg[i] < cap_row[r][i] && deg[j] < cap_row[r][j] && prefix_rule_allows(i, j)))) {
            b.add_edge(i, j);
            ++deg[i], ++deg[j], --und[i], --und[j];
            if (!find_forbidden_through_edge(b.view(), sh.f, i, j) && worth(bound(r))) {
                path[s] = 1;
                dfs(s + 1);
            }
            b.remove_edge(i, j);
            --deg[i], --deg[j], ++und[i], ++und[j];
        }
        if (want != 1) {
            cur_i = i;
            cur_j = j;
            --und[i], --und[j];
            if (worth(bound(r))) {
                path[s] = 0;
                dfs(s + 1);
            }
            ++und[i], ++und[j];
        }
    }

    void flush_nodes() {
        sh.nodes.fetch_add(local_nodes & 1023, std::memory_order_relaxed);
        local_nodes = 0;
    }
};

std::vector<std::pair<int, int>> make_slots(int n, BranchOrder order) {
    std::vector<std::pair<int, int>> s;
    if (order == BranchOrder::row_major) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s.emplace_back(i, j);
    } else {
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) s.emplace_back(i, j);
    }
    return s;
}

// Runs one pass (optimization or enumeration) over all subtrees. Each worker
// takes whole tasks; per-task outputs are merged in task order so the result
// does not depend on the worker count.
struct PassResult {
    std::optional<Graph> best_graph;
    std::vector<Graph> found;
};

PassResult run_pass(Shared& sh, int jobs, std::size_t max_found) {
    PassResult out;
    if (jobs <= 1 || sh.slots.size() < 8) {
        Worker w(sh);
        w.max_found = max_found;
        w.dfs(0);
        w.flush_nodes();
        out.best_graph = std::move(w.best_graph);
        out.found = std::move(w.found);
        return out;
    }
    std::vector<std::vector<char>> tasks;
    {
        Worker w(sh);
        w.tasks = &tasks;
        w.split_depth = std::min<std::size_t>(sh.slots.size(), 10);
        w.max_found = max_found;
        w.dfs(0);
        w.flush_nodes();
        out.best_graph = std::move(w.best_graph);
    }
    std::vector<std::vector<Graph>> per_task(tasks.size());
    std::vector<std::optional<Graph>> best_per_task(tasks.size());
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        while (true) {
            const std::size_t t = next.fetch_add(1);
            if (t >= tasks.size() || sh.stop.load()) return;
            Worker w(sh);
            w.prefix = &tasks[t];
            w.max_found = max_found;
            w.dfs(0);
            w.flush_nodes();
            best_per_task[t] = std::move(w.best_graph);
            per_task[t] = std::move(w.found);
        }
    };
    std::vector<std::thread> pool;
    for (int k = 0; k < jobs; ++k) pool.emplace_back(run);
    for (auto& th : pool) th.join();
    for (auto& g : best_per_task)
        if (g && (!out.best_graph || g->edge_count() > out.best_graph->edge_count())) out.best_graph = std::move(g);
    std::set<std::string> keys;
    for (auto& list : per_task)
        for (auto& g : list) {
            if (out.found.size() >= max_found) break;
            std::string key = sh.n <= kCanonicalMaxOrder ? canonical_graph6(g) : write_graph6(g);
            if (keys.insert(std::move(key)).second) out.found.push_back(std::move(g));
        }
    if (sh.enumerate && out.found.size() >= max_found) sh.stop.store(true);
    return out;
}

Graph complete(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return std::move(b).build();
}

std::optional<Graph> seed_graph(int n, Forbidden f, std::uint64_t seed) {
    std::optional<Graph> best;
    auto offer = [&](const Graph& g) {
        if (find_forbidden(g, f)) return;
        if (!best || g.edge_count() > best->edge_count()) best = g;
    };
    if (f == Forbidden::k3 && n >= 1) offer(turan_graph(n, 2));
    if (f == Forbidden::tp3 && n >= 6) offer(best_known_tp3_free(n).graph);
    offer(lower_bound_ex(n, f, 40L * n, seed).graph);
    return best;
}

}  // namespace

SearchResult exact_ex(int n, Forbidden f, const SearchOptions& opts) {
    if (n < 0 || n > kMaxVertices) throw SizeError("n=" + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
    const auto start = Clock::now();
    SearchResult res;
    res.n = n;
    res.forbidden = f;
    res.order = opts.order;
    res.isomorph_deduplicated = n <= kCanonicalMaxOrder;
    const UpperBoundHook hook = opts.hook ? *opts.hook : default_hook(f);
    res.upper_bound_used = hook.description;

    auto finish = [&](std::vector<Graph> graphs) {
        for (const auto& g : graphs)
            res.extremal_graphs.push_back(res.isomorph_deduplicated ? canonical_graph6(g) : write_graph6(g));
        res.elapsed = Clock::now() - start;
        return res;
    };

    if (n < forbidden_pattern(f).order()) {
        res.value = binomial2(n);
        res.status = SearchStatus::exact;
        res.extremal_complete = true;
        res.upper_bound_used = "trivial: n < v(H)";
        return finish({complete(n)});
    }

    Shared sh;
    sh.n = n;
    sh.f = f;
    sh.order = opts.order;
    sh.slots = make_slots(n, opts.order);
    sh.hook_ub = hook.bound(n);
    if (opts.time_budget) sh.deadline = start + *opts.time_budget;

    std::optional<Graph> incumbent;
    if (opts.seed_incumbent) {
        incumbent = seed_graph(n, f, opts.seed);
        if (incumbent) sh.best = incumbent->edge_count();
    }

    const int jobs = std::max(1, opts.jobs);
    if (sh.best.load() < sh.hook_ub) {
        PassResult p = run_pass(sh, jobs, 0);
        if (p.best_graph && (!incumbent || p.best_graph->edge_count() > incumbent->edge_count()))
            incumbent = std::move(p.best_graph);
    }
    res.nodes_expanded = sh.nodes.load();
    res.value = incumbent ? incumbent->edge_count() : 0;

    if (sh.stop.load()) {
        res.status = SearchStatus::timeout;
        return finish(incumbent ? std::vector<Graph>{*incumbent} : std::vector<Graph>{});
    }
    res.status = SearchStatus::exact;
    if (!opts.enumerate_extremal || opts.max_extremal == 0) return finish({*incumbent});

    sh.enumerate = true;
    sh.target = res.value;
    PassResult p = run_pass(sh, jobs, opts.max_extremal);
    res.nodes_expanded = sh.nodes.load();
    res.extremal_complete = !sh.stop.load();
    if (p.found.empty()) p.found.push_back(*incumbent);
    return finish(std::move(p.found));
}

LowerBoundResult lower_bound_ex(int n, Forbidden f, long long iterations, std::uint64_t seed) {
    if (n < 0 || n > kMaxVertices) throw SizeError("n=" + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
    Rng rng(seed);
    GraphBuilder b(n);
    if (f == Forbidden::tp3 && n >= 6) b = GraphBuilder(best_known_tp3_free(n).graph);
    if (f == Forbidden::k3 && n >= 1) b = GraphBuilder(turan_graph(n, 2));
    if (find_forbidden(b.view(), f)) b = GraphBuilder(n);

    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<long long> tabu_until(pairs.size(), -1);
    auto index = [n](int u, int v) { return static_cast<std::size_t>(u * (2 * n - u - 1) / 2 + (v - u - 1)); };

    auto fill = [&](long long it) {
        std::vector<std::pair<int, int>> order = pairs;
        rng.shuffle(order);
        for (auto [u, v] : order) {
            if (b.has_edge(u, v) || tabu_until[index(u, v)] > it) continue;
            b.add_edge(u, v);
            if (find_forbidden_through_edge(b.view(), f, u, v)) b.remove_edge(u, v);
        }
    };

    fill(-1);
    Graph best = b.view();
    const long long tenure = std::max(2, n);
    for (long long it = 0; it < iterations; ++it) {
        const auto edges = b.view().edges();
        if (edges.empty()) break;
        const int drops = 1 + (rng.chance(1, 3) ? 1 : 0);
        for (int d = 0; d < drops; ++d) {
            const auto cur = b.view().edges();
            if (cur.empty()) break;
            const auto [u, v] = cur[rng.below(cur.size())];
            b.remove_edge(u, v);
            tabu_until[index(u, v)] = it + tenure;
        }
        fill(it);
        if (b.view().edge_count() > best.edge_count()) best = b.view();
        if (b.view().edge_count() + 2 < best.edge_count()) b = GraphBuilder(best);
    }
    LowerBoundResult r;
    r.edges = best.edge_count();
    r.graph = std::move(best);
    return r;
}

Verdict conjecture_verdict(const Rational& conjectured, long long lower, std::optional<long long> upper) {
    if (Rational(lower) > conjectured) return Verdict::violated;
    if (upper && Rational(*upper) <= conjectured) return Verdict::consistent;
    return Verdict::open;
}

std::vector<ConjectureRow> verify_conjecture_tp3(int n_from, int n_to, const ConjectureOptions& opts) {
    if (n_from < 6) throw ArgumentError("verify_conjecture_tp3 needs n_from >= 6");
    std::vector<ConjectureRow> rows;
    for (int n = n_from; n <= n_to; ++n) {
        ConjectureRow row;
        row.n = n;
        row.conjectured = conjectured_tp3(n);
        row.computed_lower = best_known_tp3_free(n).graph.edge_count();
        row.computed_lower =
            std::max(row.computed_lower, lower_bound_ex(n, Forbidden::tp3, opts.local_search_iterations, opts.seed).edges);
        if (n <= opts.exact_max_n) {
            SearchOptions so;
            so.time_budget = opts.budget_per_n;
            so.enumerate_extremal = false;
            so.jobs = opts.jobs;
            so.seed = opts.seed;
            const SearchResult r = exact_ex(n, Forbidden::tp3, so);
            row.upper_status = r.status;
            row.computed_lower = std::max(row.computed_lower, r.value);
            if (r.status == SearchStatus::exact) row.computed_upper = r.value;
        }
        row.verdict = conjecture_verdict(row.conjectured, row.computed_lower, row.computed_upper);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<FormulaCheck> cross_check_formulas(int n_max, int jobs) {
    if (n_max > 8) throw ArgumentError("cross_check_formulas is limited to n_max <= 8");
    std::vector<FormulaCheck> out;
    SearchOptions so;
    so.hook = trivial_hook();
    so.enumerate_extremal = false;
    so.jobs = jobs;
    auto check = [&](int n, Forbidden f, long long expected) {
        const SearchResult r = exact_ex(n, f, so);
        out.push_back({n, f, r.value, expected});
        if (r.status != SearchStatus::exact || r.value != expected)
            throw PropertyViolation("exact_ex(" + std::to_string(n) + ", " + to_string(f) + ") = " + std::to_string(r.value) +
                                    ", expected " + std::to_string(expected));
    };
    for (int n = 1; n <= n_max; ++n) check(n, Forbidden::k3, mantel_bound(n));
    for (int n = 6; n <= n_max; ++n) check(n, Forbidden::tp2, tp2_exact_value(n));
    return out;
}

}  // namespace turanlab
