#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "kended/graph.hpp"
#include "kended/subtree.hpp"

namespace kended {

/// Default size guard for the exact routines.
inline constexpr int kDefaultSolverGuard = 10;
/// Hard capacity of the subset tables (2^n * n bytes).
inline constexpr int kExactCapacity = 20;

/// The active guard: KENDED_MAX_N when set to a positive integer, else 10,
/// never above kExactCapacity.
int solver_size_guard();

/// Cycle given as a vertex sequence. Orders 1 and 2 are the degenerate
/// cycles (a vertex, an edge).
struct Cycle {
    std::vector<int> vertices;
    int order() const { return static_cast<int>(vertices.size()); }
};

struct TkResult {
    int k = 0;
    int order = 0;
    /// SubTree for k >= 2, Cycle for k = 1.
    std::variant<Cycle, SubTree> witness;
};

/// Minimum-leaf spanning trees of every induced subgraph, from one dynamic
/// program over vertex subsets.
///
/// A tree with l >= 2 leaves splits into l - 1 vertex-disjoint paths: a
/// leaf-to-leaf path followed by paths that each start next to a vertex
/// already covered. Conversely such a cover by p paths yields a tree with at
/// most p + 1 leaves. The table stores, for every subset S and end vertex v,
/// the fewest paths covering exactly S with the last path ending at v.
class LeafTable {
public:
    /// Throws SizeError when g.order() exceeds kExactCapacity.
    explicit LeafTable(Graph g);

    const Graph& graph() const { return graph_; }

    /// Fewest leaves of a spanning tree of G[s]; 0 when s is empty or G[s]
    /// is disconnected. Single vertices count as one leaf.
    int min_leaves(VertexSet s) const;

    /// A spanning tree of G[s] attaining min_leaves(s). Requires G[s] connected.
    SubTree spanning_tree(VertexSet s) const;

    /// Order of a largest tree with at most k leaves (k >= 1), i.e. the tree
    /// reading of t_k. For k = 1 this is 1; callers wanting the cycle
    /// convention use t_k_exact.
    int largest_order(int k) const;
    /// Lexicographically first vertex set attaining largest_order(k).
    VertexSet largest_set(int k) const;

    /// Calls f(s) for every vertex set s of order largest_order(k) that admits
    /// a spanning tree with at most k leaves, in lexicographic order.
    void for_each_largest_set(int k, const std::function<void(VertexSet)>& f) const;

private:
    std::uint8_t paths(VertexSet s, int v) const {
        return paths_[static_cast<std::size_t>(s) * static_cast<std::size_t>(n_) +
                      static_cast<std::size_t>(v)];
    }

    Graph graph_;
    int n_ = 0;
    std::vector<std::uint8_t> paths_;      // [s * n + v]
    std::vector<std::uint8_t> min_paths_;  // [s]
    std::vector<VertexSet> best_set_;      // [k], lexicographic tie-break
};

/// Longest cycle under the degenerate convention: 1 for K_1, 2 when the graph
/// has an edge but no cycle, else the circumference. Empty for n = 0.
Cycle longest_cycle(const Graph& g);

/// A spanning cycle of G[s] (degenerate cycles allowed for |s| <= 2), if any.
std::optional<Cycle> spanning_cycle(const Graph& g, VertexSet s);
bool has_spanning_cycle(const Graph& g, VertexSet s);

/// Vertex sets of all longest cycles (degenerate convention), lexicographic.
std::vector<VertexSet> longest_cycle_vertex_sets(const Graph& g);

/// Exact t_k with witness. Requires a connected graph with n >= 1, k >= 1,
/// and n within the solver guard.
TkResult t_k_exact(const Graph& g, int k);

/// t_1 .. t_{k_max} from a single table.
std::vector<TkResult> t_profile(const Graph& g, int k_max);

struct MinLeafResult {
    int count = 0;
    SubTree tree;
};

/// Fewest leaves over all spanning trees; 2 iff a Hamilton path exists.
/// Requires a connected graph with n >= 2.
MinLeafResult min_leaf_count_spanning(const Graph& g);

/// Every k-ended subtree of order t_k (k >= 2), each exactly once. The
/// visitor returns false to stop early; the return value is the number of
/// trees visited. Throws SizeError beyond the solver guard.
std::size_t for_each_max_tree(const Graph& g, int k,
                              const std::function<bool(const SubTree&)>& visit);
std::vector<SubTree> enumerate_max_trees(const Graph& g, int k);

/// Whether some k-ended tree (a cycle when k = 1) dominates g.
bool has_dominating_k_ended(const Graph& g, int k);
bool has_dominating_k_ended(const LeafTable& table, int k);

/// Greedy BFS tree improved with leaf-edge reductions, tailing swaps and leaf
/// extensions, then pruned to at most k leaves. Three restarts; deterministic
/// per seed. For k = 1 the only trees qualifying are single vertices.
SubTree heuristic_k_ended(const Graph& g, int k, std::uint64_t seed);

void require_connected(const Graph& g);
void require_within_guard(const Graph& g);

} // namespace kended
