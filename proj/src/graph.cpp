#include "turanlab/graph.hpp"

#include <algorithm>

#include "turanlab/errors.hpp"

namespace turanlab {

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw ArgumentError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return rows_[u].contains(v);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return rows_[v].count();
}

const VertexSet& Graph::neighbors(int v) const {
    check_vertex(v);
    return rows_[v];
}

VertexSet Graph::common_neighbors(const VertexSet& s) const {
    if (s.empty()) throw ArgumentError("common_neighbors of an empty set");
    VertexSet out = vertices();
    for (int x : s) out &= neighbors(x);
    return out;
}

int Graph::codegree(int u, int v) const { return (neighbors(u) & neighbors(v)).count(); }

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, rows_[v].count());
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, rows_[v].count());
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_);
    for (int u = 0; u < n_; ++u)
        for (int v : rows_[u].above(u)) out.emplace_back(u, v);
    return out;
}

std::vector<std::pair<int, int>> Graph::non_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!rows_[u].contains(v)) out.emplace_back(u, v);
    return out;
}

std::pair<Graph, std::vector<int>> Graph::induced(const VertexSet& keep) const {
    std::vector<int> back = (keep & vertices()).to_vector();
    std::vector<int> fwd(n_, -1);
    for (int i = 0; i < static_cast<int>(back.size()); ++i) fwd[back[i]] = i;
    GraphBuilder b(static_cast<int>(back.size()));
    for (int i = 0; i < static_cast<int>(back.size()); ++i)
        for (int w : rows_[back[i]].above(back[i]))
            if (fwd[w] >= 0) b.add_edge(i, fwd[w]);
    return {std::move(b).build(), std::move(back)};
}

Graph Graph::with_edge(int u, int v) const {
    GraphBuilder b(*this);
    b.add_edge(u, v);
    return std::move(b).build();
}

int Graph::recount_edges() const {
    int sum = 0;
    for (const auto& r : rows_) sum += r.count();
    return sum / 2;
}

GraphBuilder::GraphBuilder(int n) {
    if (n < 0 || n > kMaxVertices)
        throw SizeError("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
    g_.n_ = n;
    g_.rows_.assign(n, VertexSet{});
}

bool GraphBuilder::add_edge(int u, int v) {
    g_.check_vertex(u);
    g_.check_vertex(v);
    if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
    if (g_.rows_[u].contains(v)) return false;
    g_.rows_[u].insert(v);
    g_.rows_[v].insert(u);
    ++g_.edges_;
    return true;
}

bool GraphBuilder::remove_edge(int u, int v) {
    g_.check_vertex(u);
    g_.check_vertex(v);
    if (!g_.rows_[u].contains(v)) return false;
    g_.rows_[u].erase(v);
    g_.rows_[v].erase(u);
    --g_.edges_;
    return true;
}

Graph graph_new(int n) { return GraphBuilder(n).build(); }

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return std::move(b).build();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    GraphBuilder out(a.order() + b.order());
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    for (auto [u, v] : b.edges()) out.add_edge(u + a.order(), v + a.order());
    return std::move(out).build();
}

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        // n <= 512 always fits the 18-bit form.
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.neighbors(i).contains(j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
    return out;
}

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

    auto byte_at = [&](std::size_t i) -> int {
        if (i >= text.size()) throw ParseError("graph6: unexpected end of input", i);
        int c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", i);
        return c - kBias;
    };

    int n = 0;
    int first = byte_at(pos);
    if (first < 63) {
        n = first;
        pos += 1;
    } else {
        if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126)
            throw ParseError("graph6: 36-bit length form exceeds vertex capacity", pos + 1);
        n = (byte_at(pos + 1) << 12) | (byte_at(pos + 2) << 6) | byte_at(pos + 3);
        if (n <= 62) throw ParseError("graph6: non-canonical long length header", pos);
        if (n > kMaxVertices) throw ParseError("graph6: vertex count exceeds capacity", pos);
        pos += 4;
    }

    const long long bits = static_cast<long long>(n) * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos != body)
        throw ParseError("graph6: expected " + std::to_string(body) + " data bytes, found " +
                             std::to_string(text.size() - pos),
                         text.size() < pos + body ? text.size() : pos + body);

    GraphBuilder b(n);
    long long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const std::size_t at = pos + static_cast<std::size_t>(k / 6);
            if ((byte_at(at) >> (5 - k % 6)) & 1) b.add_edge(i, j);
        }
    }
    if (bits % 6 != 0) {
        const std::size_t last = pos + body - 1;
        const int pad = static_cast<int>(6 - bits % 6);
        if (byte_at(last) & ((1 << pad) - 1)) throw ParseError("graph6: nonzero padding bits", last);
    }
    return std::move(b).build();
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
    std::vector<Graph> out;
    std::size_t offset = 0;
    while (offset < text.size()) {
        std::size_t end = text.find('\n', offset);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(offset, end - offset);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) {
            try {
                out.push_back(parse_graph6(line));
            } catch (const ParseError& e) {
                throw ParseError(std::string("line ") + std::to_string(out.size() + 1) + ": " + e.what(),
                                 offset + e.offset());
            }
        }
        offset = end + 1;
    }
    return out;
}

}  // namespace turanlab
