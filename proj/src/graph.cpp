#include "kended/graph.hpp"

#include <algorithm>
#include <limits>

#include "kended/errors.hpp"

namespace kended {

std::vector<int> to_vector(VertexSet s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count(s)));
    for_each_vertex(s, [&](int v) { out.push_back(v); });
    return out;
}

bool lex_less(VertexSet a, VertexSet b) {
    // Both lists share every vertex below d. The list holding d continues
    // with d; the other continues with something larger or ends (and is
    // then a proper prefix, hence smaller).
    const VertexSet diff = a ^ b;
    if (diff == 0) return false;
    const int d = lowest(diff);
    if (contains(a, d)) return (b >> d) != 0;
    return (a >> d) == 0;
}

std::string to_string(const Edge& e) {
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Graph::Graph(int n) {
    if (n < 0 || n > kMaxVertices) {
        throw SizeError("graph order " + std::to_string(n) + " outside 0.." +
                        std::to_string(kMaxVertices));
    }
    adjacency_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= order()) {
        throw ParameterError("vertex " + std::to_string(v) + " out of range for order " +
                             std::to_string(order()));
    }
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ParameterError("loop at vertex " + std::to_string(u));
    adjacency_[static_cast<std::size_t>(u)] |= bit(v);
    adjacency_[static_cast<std::size_t>(v)] |= bit(u);
}

std::size_t Graph::size() const {
    std::size_t total = 0;
    for (VertexSet row : adjacency_) total += static_cast<std::size_t>(count(row));
    return total / 2;
}

VertexSet Graph::neighborhood(VertexSet s) const {
    VertexSet out = 0;
    for_each_vertex(s, [&](int v) { out |= neighbors(v); });
    return out;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> out;
    out.reserve(adjacency_.size());
    for (VertexSet row : adjacency_) out.push_back(count(row));
    return out;
}

int Graph::min_degree() const {
    if (order() == 0) return 0;
    int best = std::numeric_limits<int>::max();
    for (VertexSet row : adjacency_) best = std::min(best, count(row));
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int v = 1; v < order(); ++v) {
        for (int u = 0; u < v; ++u) {
            if (adjacent(u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

bool Graph::is_connected(VertexSet s) const {
    if (s == 0) return true;
    VertexSet seen = bit(lowest(s));
    VertexSet frontier = seen;
    while (frontier != 0) {
        const VertexSet next = neighborhood(frontier) & s & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == s;
}

bool Graph::is_independent(VertexSet s) const {
    bool independent = true;
    for_each_vertex(s, [&](int v) {
        if (neighbors(v) & s) independent = false;
    });
    return independent;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int offset = a.order();
    Graph g(a.order() + b.order());
    for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
    for (const Edge& e : b.edges()) g.add_edge(e.u + offset, e.v + offset);
    return g;
}

Graph join(const Graph& a, const Graph& b) {
    Graph g = disjoint_union(a, b);
    for (int u = 0; u < a.order(); ++u) {
        for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
    }
    return g;
}

} // namespace kended
