#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace kended {

/// A set of vertex indices packed into one machine word.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
constexpr int count(VertexSet s) { return std::popcount(s); }
constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }
constexpr int lowest(VertexSet s) { return std::countr_zero(s); }
constexpr VertexSet first_n(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }

/// Calls f(v) for every vertex v in s, in increasing order.
template <typename F>
void for_each_vertex(VertexSet s, F&& f) {
    while (s != 0) {
        f(lowest(s));
        s &= s - 1;
    }
}

std::vector<int> to_vector(VertexSet s);

/// True when the sorted vertex list of a precedes that of b lexicographically.
bool lex_less(VertexSet a, VertexSet b);

/// Undirected edge, normalized so that u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    int other(int x) const { return x == u ? v : u; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
    friend bool operator==(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// Simple undirected graph on vertices 0..n-1 stored as adjacency bitsets.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const Edge> edges);

    void add_edge(int u, int v);

    int order() const { return static_cast<int>(adjacency_.size()); }
    std::size_t size() const;

    VertexSet vertices() const { return first_n(order()); }
    VertexSet neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return count(neighbors(v)); }
    bool adjacent(int u, int v) const { return contains(neighbors(u), v); }
    bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }

    /// Union of the neighborhoods of the vertices in s.
    VertexSet neighborhood(VertexSet s) const;

    /// Degree list indexed by vertex.
    std::vector<int> degrees() const;
    int min_degree() const;

    /// Edges sorted in (v, u) column order, the order graph6 uses.
    std::vector<Edge> edges() const;

    bool is_connected() const { return is_connected(vertices()); }
    /// Connectivity of the subgraph induced by s; the empty set counts as connected.
    bool is_connected(VertexSet s) const;
    bool is_independent(VertexSet s) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const;

    std::vector<VertexSet> adjacency_;
};

/// Vertices of b are shifted by a.order(); no edges between the parts.
Graph disjoint_union(const Graph& a, const Graph& b);
/// Disjoint union plus every edge between the two parts.
Graph join(const Graph& a, const Graph& b);

} // namespace kended
