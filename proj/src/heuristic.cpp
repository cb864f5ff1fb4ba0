#include <algorithm>
#include <random>

#include "kended/errors.hpp"
#include "kended/solver.hpp"
#include "kended/transforms.hpp"

namespace kended {
namespace {

constexpr int kRestarts = 3;

SubTree bfs_tree(const Graph& g, int root, std::mt19937_64& rng) {
    if (g.order() == 1) return SubTree::single_vertex(g, root);
    std::vector<Edge> edges;
    VertexSet seen = bit(root);
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int x = queue[head];
        std::vector<int> next = to_vector(g.neighbors(x) & ~seen);
        std::shuffle(next.begin(), next.end(), rng);
        for (int y : next) {
            seen |= bit(y);
            edges.emplace_back(x, y);
            queue.push_back(y);
        }
    }
    return SubTree::from_edges(g, std::move(edges));
}

// One leaf-reducing move, or nothing.
std::optional<SubTree> reduce_once(const Graph& g, const SubTree& t) {
    const std::vector<int> ends = to_vector(leaves(t));
    if (t.order() < 2) return std::nullopt;
    for (std::size_t a = 0; a < ends.size(); ++a) {
        for (std::size_t b = a + 1; b < ends.size(); ++b) {
            const Edge e(ends[a], ends[b]);
            if (!g.has_edge(e) || t.has_edge(e)) continue;
            ExchangeResult r = leaf_edge_reduction(g, t, e);
            if (r.classification == ExchangeKind::fewer_leaves_same_order) return std::move(r.tree);
        }
    }
    if (ends.size() < 3) return std::nullopt;
    const TailingDecomposition dec = tailings(t);
    for (const Tailing& tail : dec.tailings) {
        if (tail.order() < 2) continue;
        for (int leaf : ends) {
            if (leaf == tail.leaf || !g.adjacent(leaf, tail.last())) continue;
            ExchangeResult r = tailing_swap(g, t, leaf, tail.last());
            if (r.classification == ExchangeKind::fewer_leaves_same_order) return std::move(r.tree);
        }
    }
    return std::nullopt;
}

// Attaches one outside vertex without exceeding k leaves.
std::optional<SubTree> extend_once(const Graph& g, const SubTree& t, int k) {
    const VertexSet outside = g.vertices() & ~t.vertices();
    if (outside == 0) return std::nullopt;
    const VertexSet ends = leaves(t);
    const int leaf_count = count(ends);
    std::optional<SubTree> found;
    auto attach = [&](int x, int y) {
        std::vector<Edge> edges = t.edges();
        edges.emplace_back(x, y);
        found = SubTree::from_edges(g, std::move(edges));
    };
    // Hanging a vertex on a leaf keeps the leaf count (K_1 gains one leaf).
    const int on_leaf = t.order() == 1 ? 2 : leaf_count;
    if (on_leaf <= k) {
        for_each_vertex(ends, [&](int x) {
            if (found) return;
            const VertexSet fresh = g.neighbors(x) & outside;
            if (fresh != 0) attach(x, lowest(fresh));
        });
        if (found) return found;
    }
    if (leaf_count + 1 <= k) {
        for_each_vertex(t.vertices() & ~ends, [&](int x) {
            if (found) return;
            const VertexSet fresh = g.neighbors(x) & outside;
            if (fresh != 0) attach(x, lowest(fresh));
        });
    }
    return found;
}

SubTree improve(const Graph& g, SubTree t, int k) {
    for (;;) {
        if (auto next = reduce_once(g, t)) {
            t = std::move(*next);
        } else if (auto grown = extend_once(g, t, k)) {
            t = std::move(*grown);
        } else if (count(leaves(t)) > k) {
            t = prune_shortest_tailing(t);
        } else {
            return t;
        }
    }
}

} // namespace

SubTree heuristic_k_ended(const Graph& g, int k, std::uint64_t seed) {
    if (k < 1) throw ParameterError("k must be at least 1");
    require_connected(g);
    if (g.order() < 1) throw ParameterError("graph must have a vertex");
    std::mt19937_64 rng(seed);
    if (k == 1) {
        return SubTree::single_vertex(g, static_cast<int>(rng() % static_cast<std::uint64_t>(g.order())));
    }
    std::optional<SubTree> best;
    for (int r = 0; r < kRestarts; ++r) {
        const int root = static_cast<int>(rng() % static_cast<std::uint64_t>(g.order()));
        SubTree t = improve(g, bfs_tree(g, root, rng), k);
        if (!best || t.order() > best->order() ||
            (t.order() == best->order() && count(leaves(t)) < count(leaves(*best)))) {
            best = std::move(t);
        }
    }
    return *best;
}

} // namespace kended
