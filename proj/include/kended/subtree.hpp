#pragma once

#include <span>
#include <vector>

#include "kended/graph.hpp"

namespace kended {

/// A tree subgraph of a host graph, stored as its vertex set and explicit
/// edge list. The host is not retained: construction validates against it,
/// and predicates that need the host take it as an argument.
class SubTree {
public:
    /// Tree on the endpoints of `edges`. Throws PreconditionError unless the
    /// edges exist in the host and form a tree. An empty edge list is rejected;
    /// use single_vertex for K_1.
    static SubTree from_edges(const Graph& host, std::vector<Edge> edges);
    static SubTree single_vertex(const Graph& host, int v);
    /// Path through the listed vertices, in order.
    static SubTree from_path(const Graph& host, std::span<const int> path);

    VertexSet vertices() const { return vertices_; }
    int order() const { return count(vertices_); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool contains(int v) const { return kended::contains(vertices_, v); }
    bool has_edge(const Edge& e) const;
    VertexSet neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return count(neighbors(v)); }

    /// The subtree on `keep`, which must induce a connected part of this tree.
    SubTree restricted_to(VertexSet keep) const;

    /// Vertex sequence of the unique tree path from u to v.
    std::vector<int> path_between(int u, int v) const;

    friend bool operator==(const SubTree& a, const SubTree& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    SubTree() = default;

    VertexSet vertices_ = 0;
    std::vector<Edge> edges_;             // sorted
    std::vector<VertexSet> adjacency_;    // indexed by host vertex
};

/// Checks the tree invariants of `edges` against the host without throwing:
/// edges exist in the host, no duplicates, acyclic and connected.
bool is_tree_edge_set(const Graph& host, std::span<const Edge> edges);

/// Vertices of tree-degree 1. A single-vertex tree has that vertex as its leaf.
VertexSet leaves(const SubTree& t);

/// Vertices of tree-degree at least 3.
VertexSet branch_vertices(const SubTree& t);

/// The path from one leaf up to (not including) its nearest branch vertex.
struct Tailing {
    int leaf = 0;
    std::vector<int> path;  ///< leaf first; path.back() is the last tailing vertex
    int anchor = 0;         ///< the branch vertex adjacent to path.back()

    int last() const { return path.back(); }
    int order() const { return static_cast<int>(path.size()); }
    /// Index of v on the path (0 = leaf) or -1.
    int position(int v) const;
};

struct TailingDecomposition {
    std::vector<Tailing> tailings;  ///< one per leaf, ascending leaf index

    /// Index of the tailing containing v, or -1.
    int tailing_of(int v) const;
};

/// Throws NoBranchVertexError when the tree has fewer than 3 leaves.
TailingDecomposition tailings(const SubTree& t);

/// True iff the host vertices outside t induce no edge.
bool is_dominating(const Graph& g, const SubTree& t);
bool is_dominating(const Graph& g, VertexSet covered);

/// True iff the leaves of t are pairwise nonadjacent in g.
bool is_independence_tree(const Graph& g, const SubTree& t);

} // namespace kended
