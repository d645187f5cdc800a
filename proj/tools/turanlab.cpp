#include <atomic>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "manifest.hpp"
#include "turanlab/bounds.hpp"
#include "turanlab/construct.hpp"
#include "turanlab/detect.hpp"
#include "turanlab/errors.hpp"
#include "turanlab/prooflab.hpp"
#include "turanlab/pyramids.hpp"
#include "turanlab/rng.hpp"
#include "turanlab/search.hpp"

using json = nlohmann::ordered_json;
using namespace turanlab;
using turanlab::cli::RunManifest;

namespace {

int jobs_from_env() {
    if (const char* s = std::getenv("TURANLAB_JOBS")) {
        int v = 0;
        auto [p, ec] = std::from_chars(s, s + std::strlen(s), v);
        if (ec == std::errc() && *p == '\0' && v >= 1) return v;
    }
    return 1;
}

/// "2h", "30m", "45s", "1500ms"; a bare number is seconds.
std::chrono::milliseconds parse_budget(const std::string& text) {
    std::size_t pos = 0;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) != 0)) ++pos;
    if (pos == 0) throw ArgumentError("bad budget '" + text + "'");
    const long long v = std::stoll(text.substr(0, pos));
    const std::string unit = text.substr(pos);
    if (unit == "h") return std::chrono::hours(v);
    if (unit == "m") return std::chrono::minutes(v);
    if (unit == "s" || unit.empty()) return std::chrono::seconds(v);
    if (unit == "ms") return std::chrono::milliseconds(v);
    throw ArgumentError("bad budget unit in '" + text + "' (use h, m, s or ms)");
}

double ms(std::chrono::duration<double> d) { return d.count() * 1000.0; }

json opt_rational(const std::optional<Rational>& r) { return r ? json(to_string(*r)) : json(nullptr); }

json tp3_json(const TP3Witness& w) {
    return {{"hub", w.wheel.hub}, {"rim", w.wheel.rim}, {"apexes", w.apexes}};
}

std::map<std::string, std::string> normalized_args(const CLI::App& sub) {
    std::map<std::string, std::string> args;
    for (const CLI::Option* o : sub.get_options()) {
        if (o->get_name() == "--help") continue;
        std::string v;
        for (const auto& r : o->results()) v += (v.empty() ? "" : ",") + r;
        if (o->count() == 0) v = o->get_default_str();
        else if (v.empty()) v = "true";
        if (!v.empty()) args[o->get_single_name()] = v;
    }
    return args;
}

/// Report goes to stdout, or to `out` with a manifest alongside.
void emit(const json& report, const std::string& out, RunManifest& m) {
    if (out.empty() || out == "-") {
        cli::write_output("-", report.dump(2) + "\n");
    } else {
        cli::write_output(out, report.dump(2) + "\n");
        m.add_output(out);
    }
}

void write_artifact(const std::string& path, const std::string& text, RunManifest& m) {
    if (path.empty()) return;
    cli::write_output(path, text);
    if (path != "-") m.add_output(path);
}

std::vector<Graph> read_graphs(const std::string& path, RunManifest& m) {
    return parse_graph6_lines(m.read(path));
}

/// Runs f(i) for i in [0, count) on `jobs` threads; f writes only to slot i.
template <typename F>
void parallel_for(std::size_t count, int jobs, F f) {
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) f(i);
    };
    std::vector<std::thread> pool;
    for (int k = 1; k < std::min<int>(jobs, static_cast<int>(count)); ++k) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
}

// ---------------------------------------------------------------------------

struct GenArgs {
    std::string graph, g6;
    int k = 3, n = 0, a = 0, b = 0, r = 2;
    std::string p = "1/2";
};

int run_gen(const GenArgs& a, std::uint64_t seed, const std::string& out, RunManifest& m) {
    Graph g;
    if (a.graph == "tp") {
        if (a.k < 1) throw ArgumentError("--k must be >= 1");
        g = triangular_pyramid(a.k).graph;
    } else if (a.graph == "complete") {
        g = complete_graph(a.n);
    } else if (a.graph == "bipartite") {
        g = complete_bipartite(a.a, a.b);
    } else if (a.graph == "cycle") {
        g = cycle(a.n);
    } else if (a.graph == "wheel") {
        g = wheel(a.n);
    } else if (a.graph == "claw") {
        g = claw();
    } else if (a.graph == "spider") {
        g = spider();
    } else if (a.graph == "turan") {
        g = turan_graph(a.n, a.r);
    } else if (a.graph == "empty") {
        g = graph_new(a.n);
    } else if (a.graph == "random") {
        const Rational p = parse_rational(a.p);
        if (p < 0 || p > 1) throw ArgumentError("--p must lie in [0, 1]");
        const auto num = static_cast<std::uint64_t>(numerator(p)), den = static_cast<std::uint64_t>(denominator(p));
        Rng rng(seed);
        GraphBuilder bld(a.n);
        for (int u = 0; u < a.n; ++u)
            for (int v = u + 1; v < a.n; ++v)
                if (rng.chance(num, den)) bld.add_edge(u, v);
        g = std::move(bld).build();
        m.add_seed(seed);
    } else {
        throw ArgumentError("unknown graph '" + a.graph + "'");
    }
    const std::string g6 = write_graph6(g);
    json r;
    r["command"] = "gen";
    r["graph"] = a.graph;
    r["n"] = g.order();
    r["edges"] = g.edge_count();
    r["graph6"] = g6;
    emit(r, out, m);
    write_artifact(a.g6, g6 + "\n", m);
    return 0;
}

// ---------------------------------------------------------------------------

int run_check_free(const std::string& forbid, const std::string& in, int jobs, const std::string& out, RunManifest& m) {
    const Forbidden f = parse_forbidden(forbid);
    const auto graphs = read_graphs(in, m);
    std::vector<json> rows(graphs.size());
    parallel_for(graphs.size(), jobs, [&](std::size_t i) {
        const auto w = find_forbidden(graphs[i], f);
        json row;
        row["line"] = i + 1;
        row["n"] = graphs[i].order();
        row["edges"] = graphs[i].edge_count();
        row["verdict"] = w ? "contains" : "free";
        row["witness"] = w ? json(w->map) : json(nullptr);
        rows[i] = std::move(row);
    });
    std::size_t contains = 0;
    for (const auto& r : rows) contains += r["verdict"] == "contains";
    json r;
    r["command"] = "check-free";
    r["forbid"] = to_string(f);
    r["input"] = in;
    r["graphs"] = graphs.size();
    r["contains"] = contains;
    r["results"] = rows;
    emit(r, out, m);
    return 0;
}

// ---------------------------------------------------------------------------

std::string provenance(ConstructionFamily f) {
    switch (f) {
        case ConstructionFamily::even_k5: return "even_k5: n^2/4+n+1";
        case ConstructionFamily::odd_k5: return "odd_k5: n^2/4+n+3/4";
        case ConstructionFamily::div6_triangles: return "div6: n^2/4+n";
        case ConstructionFamily::tp4_lower: return "tp4_lower: K_{n/2,n/2} plus a C_6-free bipartite graph in class 2";
    }
    return {};
}

int run_construct(const std::string& family, int n, bool verify, const std::string& g6_path, std::uint64_t seed,
                  const std::string& out, RunManifest& m) {
    json r;
    r["command"] = "construct";
    r["family"] = family;
    r["n"] = n;
    r["seed"] = seed;
    m.add_seed(seed);

    Graph g;
    std::optional<Rational> claimed;
    Forbidden free_of = Forbidden::tp3;
    if (family == "best") {
        const BestKnown b = best_known_tp3_free(n);
        g = b.graph;
        claimed = b.lower_bound;
        r["base_family"] = to_string(b.family);
        r["base_n"] = b.base_n;
        r["provenance"] = provenance(b.family) + " at n'=" + std::to_string(b.base_n) + ", padded";
    } else {
        const ConstructionFamily f = parse_family(family);
        if (f == ConstructionFamily::tp4_lower) {
            LabelledGraph lg = tp4_lower_construction(n, seed);
            g = std::move(lg.graph);
            r["class_of"] = lg.class_of;
            free_of = Forbidden::tp4;
        } else {
            g = build_construction({f, n, seed});
            claimed = claimed_edge_count(f, n);
        }
        r["family"] = to_string(f);
        r["provenance"] = provenance(f);
    }
    r["edges"] = g.edge_count();
    r["claimed_edges"] = opt_rational(claimed);
    r["graph6"] = write_graph6(g);

    bool ok = true;
    if (verify) {
        const CertifiedReport c = verify_construction(g, free_of, claimed);
        r["verification"] = {{"free_of", to_string(c.free_of)},
                             {"witness_absent", c.witness_absent},
                             {"witness", c.witness ? json(c.witness->map) : json(nullptr)},
                             {"count_matches", c.count_matches()},
                             {"elapsed_ms", ms(c.elapsed)}};
        ok = c.witness_absent && c.count_matches();
    } else {
        r["verification"] = nullptr;
    }
    r["witness_absent"] = verify ? json(r["verification"]["witness_absent"]) : json(nullptr);
    emit(r, out, m);
    write_artifact(g6_path, write_graph6(g) + "\n", m);
    if (!ok) std::cerr << "turanlab: construction failed verification\n";
    return ok ? 0 : 2;
}

// ---------------------------------------------------------------------------

struct SearchArgs {
    std::string forbid, budget, order = "row", hook = "default", g6;
    int n = 0;
    std::size_t max_extremal = 32;
    bool no_enumerate = false;
};

int run_search(const SearchArgs& a, std::uint64_t seed, int jobs, const std::string& out, RunManifest& m) {
    const Forbidden f = parse_forbidden(a.forbid);
    SearchOptions o;
    if (!a.budget.empty()) o.time_budget = parse_budget(a.budget);
    if (a.order == "row") o.order = BranchOrder::row_major;
    else if (a.order == "column") o.order = BranchOrder::column_major;
    else throw ArgumentError("--order must be row or column");
    if (a.hook == "trivial") o.hook = trivial_hook();
    else if (a.hook != "default") throw ArgumentError("--hook must be default or trivial");
    o.jobs = jobs;
    o.seed = seed;
    o.max_extremal = a.max_extremal;
    o.enumerate_extremal = !a.no_enumerate;
    m.add_seed(seed);

    const SearchResult s = exact_ex(a.n, f, o);
    json r;
    r["command"] = "search-ex";
    r["n"] = s.n;
    r["forbid"] = to_string(s.forbidden);
    r["value"] = s.value;
    r["status"] = to_string(s.status);
    r["extremal_g6"] = s.extremal_graphs;
    r["extremal_complete"] = s.extremal_complete;
    r["isomorph_deduplicated"] = s.isomorph_deduplicated;
    r["upper_bound_used"] = s.upper_bound_used;
    r["order"] = to_string(s.order);
    r["nodes"] = s.nodes_expanded;
    r["elapsed_ms"] = ms(s.elapsed);
    std::string lines;
    for (const auto& g : s.extremal_graphs) lines += g + "\n";
    emit(r, out, m);
    write_artifact(a.g6, lines, m);
    return 0;
}

// ---------------------------------------------------------------------------

constexpr const char* kConjProvenance = "conj_tp3: n^2/4+n+1 (n even), n^2/4+n+3/4 (n odd)";

int run_conjecture(int from, int to, int exact_max, const std::string& budget, long long iterations,
                   const std::string& csv, std::uint64_t seed, int jobs, const std::string& out, RunManifest& m) {
    ConjectureOptions o;
    o.exact_max_n = exact_max;
    if (!budget.empty()) o.budget_per_n = parse_budget(budget);
    o.local_search_iterations = iterations;
    o.seed = seed;
    o.jobs = jobs;
    m.add_seed(seed);
    const auto rows = verify_conjecture_tp3(from, to, o);

    json r;
    r["command"] = "conjecture";
    r["provenance"] = kConjProvenance;
    r["rows"] = json::array();
    std::vector<int> violated;
    std::string table = "n,conjectured,computed_lower,computed_upper,upper_status,verdict\n";
    for (const auto& row : rows) {
        r["rows"].push_back({{"n", row.n},
                             {"conjectured", to_string(row.conjectured)},
                             {"computed_lower", row.computed_lower},
                             {"computed_upper", row.computed_upper ? json(*row.computed_upper) : json(nullptr)},
                             {"upper_status", to_string(row.upper_status)},
                             {"verdict", to_string(row.verdict)}});
        table += std::to_string(row.n) + "," + to_string(row.conjectured) + "," + std::to_string(row.computed_lower) + "," +
                 (row.computed_upper ? std::to_string(*row.computed_upper) : "") + "," + to_string(row.upper_status) + "," +
                 to_string(row.verdict) + "\n";
        if (row.verdict == Verdict::violated) violated.push_back(row.n);
    }
    r["violated_at"] = violated;
    emit(r, out, m);
    write_artifact(csv, table, m);
    if (!violated.empty()) std::cerr << "turanlab: conjectured bound exceeded at " << violated.size() << " value(s) of n\n";
    return violated.empty() ? 0 : 2;
}

// ---------------------------------------------------------------------------

int run_prove_chase(const std::string& in, const std::string& delta, const std::string& beta, const std::string& gamma,
                    int max_candidates, std::uint64_t seed, int jobs, const std::string& out, RunManifest& m) {
    Params p = Params::derive(parse_rational(delta));
    if (!beta.empty()) p.beta = parse_rational(beta);
    if (!gamma.empty()) p.gamma = parse_rational(gamma);
    if (p.delta <= 0) throw ArgumentError("--delta must be positive");
    PipelineOptions po;
    po.seed = seed;
    po.max_candidates = max_candidates;
    m.add_seed(seed);

    const auto graphs = read_graphs(in, m);
    std::vector<json> rows(graphs.size());
    std::atomic<int> disagreements{0};
    parallel_for(graphs.size(), jobs, [&](std::size_t i) {
        const Graph& g = graphs[i];
        const PipelineResult res = witness_pipeline(g, p, po);
        const bool agrees = res.witness.has_value() == find_tp3(g).has_value() &&
                            (!res.witness || is_valid_tp3(g, *res.witness));
        if (!agrees) ++disagreements;
        const Rational v = g.order();
        json row;
        row["line"] = i + 1;
        row["n"] = g.order();
        row["edges"] = g.edge_count();
        row["dense_input"] = Rational(g.edge_count()) > v * v / 4 + (1 + p.delta) * v;
        row["verdict"] = res.witness ? "found" : "none";
        row["witness"] = res.witness ? tp3_json(*res.witness) : json(nullptr);
        row["via_fallback"] = res.via_fallback;
        row["agrees_with_find_tp3"] = agrees;
        row["wheel_candidates"] = json::array();
        for (const auto& w : res.wheel_candidates) row["wheel_candidates"].push_back({{"hub", w.hub}, {"rim", w.rim}});
        row["trace"] = json::array();
        for (const auto& s : res.trace.steps)
            row["trace"].push_back({{"kind", s.kind}, {"input", s.input}, {"output", s.output}, {"success", s.success}});
        rows[i] = std::move(row);
    });
    json r;
    r["command"] = "prove-chase";
    r["params"] = {{"delta", to_string(p.delta)}, {"beta", to_string(p.beta)}, {"gamma", to_string(p.gamma)}};
    r["input"] = in;
    r["results"] = rows;
    emit(r, out, m);
    if (disagreements > 0) std::cerr << "turanlab: pipeline disagreed with find_tp3\n";
    return disagreements > 0 ? 2 : 0;
}

// ---------------------------------------------------------------------------

int run_check_params(const std::string& delta, const std::string& beta, const std::string& gamma, long long n,
                     const std::string& out, RunManifest& m) {
    if (beta.empty() != gamma.empty()) throw ArgumentError("--beta and --gamma go together");
    Params p;
    const bool derived = beta.empty();
    if (derived) {
        p = Params::derive(parse_rational(delta), n);
    } else {
        p.delta = parse_rational(delta);
        p.beta = parse_rational(beta);
        p.gamma = parse_rational(gamma);
    }
    if (p.delta <= 0) throw ArgumentError("--delta must be positive");
    const InequalityReport q = check_parameter_inequalities(p, n);
    auto ineq = [](bool holds, const Rational& l, const Rational& r) {
        return json{{"holds", holds}, {"lhs", to_string(l)}, {"rhs", to_string(r)}};
    };
    json r;
    r["command"] = "check-params";
    r["params"] = {{"delta", to_string(p.delta)}, {"beta", to_string(p.beta)}, {"gamma", to_string(p.gamma)}, {"derived", derived}};
    r["n"] = n;
    r["b1"] = ineq(q.b1, q.b1_lhs, q.b1_rhs);
    r["b2"] = ineq(q.b2, q.b2_lhs, q.b2_rhs);
    r["b3"] = ineq(q.b3, q.b3_lhs, q.b3_rhs);
    r["beta_def"] = ineq(q.beta_def, p.beta, p.delta / kBetaDen);
    r["all"] = q.all;
    emit(r, out, m);
    return 0;
}

// ---------------------------------------------------------------------------

int run_coloring_claim(const std::string& out, RunManifest& m) {
    const ColoringClaimReport c = verify_tp4_coloring_claim();
    json r;
    r["command"] = "coloring-claim";
    r["total_colorings"] = c.total_colorings;
    r["colorings_checked"] = c.colorings_checked;
    r["all_pass"] = c.all_pass;
    r["counterexample"] = c.counterexample ? json(*c.counterexample) : json(nullptr);
    emit(r, out, m);
    return c.all_pass ? 0 : 2;
}

// ---------------------------------------------------------------------------

int run_formulas(int from, int to, const std::string& csv, const std::string& out, RunManifest& m) {
    if (from < 1 || to < from) throw ArgumentError("formulas needs 1 <= --from <= --to");
    json r;
    r["command"] = "formulas";
    r["provenance"] = {{"mantel", bound_report(BoundKind::mantel, to).provenance},
                       {"t_3(n)", bound_report(BoundKind::turan_r, to, 3).provenance},
                       {"tp2_exact", bound_report(BoundKind::tp2_exact, 6).provenance},
                       {"wheel7", bound_report(BoundKind::wheel7, to).provenance},
                       {"lemma1", bound_report(BoundKind::lemma1_tp3, to).provenance},
                       {"conj_tp3", kConjProvenance}};
    r["rows"] = json::array();
    std::string table = "n,mantel,t_3(n),tp2_exact,wheel7,lemma1,conj_tp3\n";
    for (int n = from; n <= to; ++n) {
        std::optional<long long> tp2;
        if (n != 5) tp2 = tp2_exact_value(n);
        const std::string lemma1 = to_string(lemma1_bound(n)), conj = to_string(conjectured_tp3(n));
        r["rows"].push_back({{"n", n},
                             {"mantel", mantel_bound(n)},
                             {"t_3(n)", turan_edges(n, 3)},
                             {"tp2_exact", tp2 ? json(*tp2) : json(nullptr)},
                             {"wheel7", wheel7_bound(n)},
                             {"lemma1", lemma1},
                             {"conj_tp3", conj}});
        table += std::to_string(n) + "," + std::to_string(mantel_bound(n)) + "," + std::to_string(turan_edges(n, 3)) + "," +
                 (tp2 ? std::to_string(*tp2) : "") + "," + std::to_string(wheel7_bound(n)) + "," + lemma1 + "," + conj + "\n";
    }
    write_artifact(csv, table, m);
    if (csv != "-" || (!out.empty() && out != "-")) emit(r, out, m);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Turán-number workbench for triangular pyramids"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string out;
    std::uint64_t seed = 0;
    int jobs = jobs_from_env();
    auto common = [&](CLI::App* s, bool with_jobs) {
        s->add_option("--out,--json", out, "JSON report path (stdout when omitted)");
        s->add_option("--seed", seed, "random seed")->capture_default_str();
        if (with_jobs) s->add_option("--jobs", jobs, "worker threads (default $TURANLAB_JOBS or 1)")->check(CLI::PositiveNumber)->capture_default_str();
    };

    GenArgs gen;
    auto* s_gen = app.add_subcommand("gen", "write a standard graph as graph6");
    s_gen->add_option("--graph", gen.graph, "tp|complete|bipartite|cycle|wheel|claw|spider|turan|empty|random")->required();
    s_gen->add_option("--k", gen.k, "pyramid size");
    s_gen->add_option("--n", gen.n, "order");
    s_gen->add_option("--a", gen.a);
    s_gen->add_option("--b", gen.b);
    s_gen->add_option("--r", gen.r, "parts of the Turán graph");
    s_gen->add_option("--p", gen.p, "edge probability for random");
    s_gen->add_option("--g6", gen.g6, "graph6 output path");
    common(s_gen, false);

    std::string forbid, in;
    auto* s_check = app.add_subcommand("check-free", "test each graph6 line for a forbidden subgraph");
    s_check->add_option("--forbid", forbid, "k3|tp1|tp2|tp3|tp4|w7|c6")->required();
    s_check->add_option("--in", in, "graph6 file, - for stdin")->required();
    common(s_check, true);

    std::string family, g6_path;
    int n = 0;
    bool verify = false;
    auto* s_cons = app.add_subcommand("construct", "build a lower-bound construction");
    s_cons->add_option("--family", family, "even_k5|odd_k5|div6|tp4_lower|best")->required();
    s_cons->add_option("--n", n)->required();
    s_cons->add_flag("--verify", verify, "certify freeness and the edge count");
    s_cons->add_option("--g6", g6_path, "graph6 output path");
    common(s_cons, false);

    SearchArgs sa;
    auto* s_search = app.add_subcommand("search-ex", "exact Turán number by branch and bound");
    s_search->add_option("--forbid", sa.forbid)->required();
    s_search->add_option("--n", sa.n)->required();
    s_search->add_option("--budget", sa.budget, "time budget: 2h, 30m, 45s, 1500ms");
    s_search->add_option("--order", sa.order, "row|column")->capture_default_str();
    s_search->add_option("--hook", sa.hook, "default|trivial")->capture_default_str();
    s_search->add_option("--max-extremal", sa.max_extremal)->capture_default_str();
    s_search->add_flag("--no-enumerate", sa.no_enumerate, "report one extremal graph only");
    s_search->add_option("--g6", sa.g6, "extremal graphs output path");
    common(s_search, true);

    int from = 6, to = 0, exact_max = 10;
    long long iterations = 2000;
    std::string budget, csv;
    auto* s_conj = app.add_subcommand("conjecture", "compare computed values with the conjectured TP_3 formula");
    s_conj->add_option("--from", from)->capture_default_str();
    s_conj->add_option("--to", to)->required();
    s_conj->add_option("--exact-max-n", exact_max)->capture_default_str();
    s_conj->add_option("--budget", budget, "time budget per n");
    s_conj->add_option("--iterations", iterations, "local search iterations per n")->capture_default_str();
    s_conj->add_option("--csv", csv, "CSV output path, - for stdout");
    common(s_conj, true);

    std::string delta = "1/2", beta, gamma;
    int max_candidates = 2000;
    auto* s_chase = app.add_subcommand("prove-chase", "run the constructive TP_3 chase on each graph6 line");
    s_chase->add_option("--in", in)->required();
    s_chase->add_option("--delta", delta)->capture_default_str();
    s_chase->add_option("--beta", beta);
    s_chase->add_option("--gamma", gamma);
    s_chase->add_option("--max-candidates", max_candidates)->capture_default_str();
    common(s_chase, true);

    long long pn = 1000;
    auto* s_params = app.add_subcommand("check-params", "evaluate the parameter inequalities exactly");
    s_params->add_option("--delta", delta)->required();
    s_params->add_option("--beta", beta);
    s_params->add_option("--gamma", gamma);
    s_params->add_option("--n", pn)->required()->check(CLI::PositiveNumber);
    common(s_params, false);

    auto* s_color = app.add_subcommand("coloring-claim", "check every 2-coloring of TP_4 with independent color 1");
    common(s_color, false);

    auto* s_form = app.add_subcommand("formulas", "closed-form bounds table");
    int f_from = 1;
    s_form->add_option("--from", f_from)->capture_default_str();
    s_form->add_option("--to", to)->required();
    s_form->add_option("--csv", csv, "CSV output path, - for stdout");
    common(s_form, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    CLI::App* sub = app.get_subcommands().front();
    RunManifest manifest(sub->get_name(), normalized_args(*sub));
    try {
        int code = 0;
        if (sub == s_gen) code = run_gen(gen, seed, out, manifest);
        else if (sub == s_check) code = run_check_free(forbid, in, jobs, out, manifest);
        else if (sub == s_cons) code = run_construct(family, n, verify, g6_path, seed, out, manifest);
        else if (sub == s_search) code = run_search(sa, seed, jobs, out, manifest);
        else if (sub == s_conj) code = run_conjecture(from, to, exact_max, budget, iterations, csv, seed, jobs, out, manifest);
        else if (sub == s_chase) code = run_prove_chase(in, delta, beta, gamma, max_candidates, seed, jobs, out, manifest);
        else if (sub == s_params) code = run_check_params(delta, beta, gamma, pn, out, manifest);
        else if (sub == s_color) code = run_coloring_claim(out, manifest);
        else if (sub == s_form) code = run_formulas(f_from, to, csv, out, manifest);
        manifest.finish();
        return code;
    } catch (const PropertyViolation& e) {
        std::cerr << "turanlab: property violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "turanlab: error: " << e.what() << "\n";
        return 1;
    }
}
