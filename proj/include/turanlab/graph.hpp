#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "turanlab/vertex_set.hpp"

namespace turanlab {

class GraphBuilder;

/// Undirected simple graph on vertices 0..n-1 with bitset adjacency rows.
///
/// A Graph is immutable: it is produced by GraphBuilder::build() or by one of
/// the value-returning helpers below, so a frozen graph can be shared freely
/// between threads.
class Graph {
public:
    Graph() = default;

    [[nodiscard]] int order() const noexcept { return n_; }
    [[nodiscard]] int edge_count() const noexcept { return edges_; }

    [[nodiscard]] bool has_edge(int u, int v) const;
    [[nodiscard]] int degree(int v) const;
    [[nodiscard]] const VertexSet& neighbors(int v) const;
    [[nodiscard]] VertexSet vertices() const { return VertexSet::range(n_); }

    /// Intersection of N(x) over x in s. Throws ArgumentError if s is empty.
    [[nodiscard]] VertexSet common_neighbors(const VertexSet& s) const;
    /// |N(u) ∩ N(v)|, i.e. the number of triangles through uv.
    [[nodiscard]] int codegree(int u, int v) const;

    [[nodiscard]] int min_degree() const;
    [[nodiscard]] int max_degree() const;

    [[nodiscard]] std::vector<std::pair<int, int>> edges() const;
    [[nodiscard]] std::vector<std::pair<int, int>> non_edges() const;

    /// Subgraph induced by `keep`, relabelled 0..|keep|-1 in increasing id order.
    /// The second member maps new ids back to ids of this graph.
    [[nodiscard]] std::pair<Graph, std::vector<int>> induced(const VertexSet& keep) const;

    /// Copy with edge uv added (no-op if present).
    [[nodiscard]] Graph with_edge(int u, int v) const;

    /// Recounts edges from the rows; used to check the cache invariant.
    [[nodiscard]] int recount_edges() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_ && a.rows_ == b.rows_;
    }

private:
    friend class GraphBuilder;
    void check_vertex(int v) const;

    int n_ = 0;
    int edges_ = 0;
    std::vector<VertexSet> rows_;
};

/// Single-owner mutable graph. Searches keep a builder and hand `view()` to the
/// detectors; everything else should call build() once and share the result.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    explicit GraphBuilder(Graph g) : g_(std::move(g)) {}

    /// Adds uv. Returns false if it was already present.
    bool add_edge(int u, int v);
    /// Removes uv. Returns false if it was absent.
    bool remove_edge(int u, int v);

    [[nodiscard]] int order() const noexcept { return g_.n_; }
    [[nodiscard]] bool has_edge(int u, int v) const { return g_.has_edge(u, v); }
    [[nodiscard]] const Graph& view() const noexcept { return g_; }
    [[nodiscard]] Graph build() const& { return g_; }
    [[nodiscard]] Graph build() && { return std::move(g_); }

private:
    Graph g_;
};

/// Empty graph on n vertices. Throws SizeError unless 0 <= n <= kMaxVertices.
Graph graph_new(int n);
Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

/// Disjoint union, b's vertices shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

// graph6 text format. parse_graph6 accepts an optional ">>graph6<<" header and
// a trailing newline; anything else malformed raises ParseError with the
// offending byte offset.
std::string write_graph6(const Graph& g);
Graph parse_graph6(std::string_view text);
/// One graph per non-empty line.
std::vector<Graph> parse_graph6_lines(std::string_view text);

}  // namespace turanlab
