#include "kended/subtree.hpp"

#include <algorithm>
#include <numeric>

#include "kended/errors.hpp"

namespace kended {
namespace {

int find_root(std::vector<int>& parent, int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
        auto& p = parent[static_cast<std::size_t>(v)];
        p = parent[static_cast<std::size_t>(p)];
        v = p;
    }
    return v;
}

// Empty string when edges form a tree of the host, otherwise the reason.
std::string tree_defect(const Graph& host, std::span<const Edge> edges) {
    if (edges.empty()) return "empty edge set";
    VertexSet touched = 0;
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= host.order() || e.u == e.v) return "edge " + to_string(e) + " out of range";
        if (!host.has_edge(e)) return "edge " + to_string(e) + " not in host";
        touched |= bit(e.u) | bit(e.v);
    }
    if (static_cast<std::size_t>(count(touched)) != edges.size() + 1) {
        return "edge count does not match vertex count";
    }
    std::vector<int> parent(static_cast<std::size_t>(host.order()));
    std::iota(parent.begin(), parent.end(), 0);
    for (const Edge& e : edges) {
        const int a = find_root(parent, e.u);
        const int b = find_root(parent, e.v);
        if (a == b) return "edge " + to_string(e) + " closes a cycle";
        parent[static_cast<std::size_t>(a)] = b;
    }
    return {};
}

} // namespace

bool is_tree_edge_set(const Graph& host, std::span<const Edge> edges) {
    return tree_defect(host, edges).empty();
}

SubTree SubTree::from_edges(const Graph& host, std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw PreconditionError("duplicate tree edge");
    }
    if (auto defect = tree_defect(host, edges); !defect.empty()) {
        throw PreconditionError("not a subtree: " + defect);
    }
    SubTree t;
    t.adjacency_.assign(static_cast<std::size_t>(host.order()), 0);
    for (const Edge& e : edges) {
        t.vertices_ |= bit(e.u) | bit(e.v);
        t.adjacency_[static_cast<std::size_t>(e.u)] |= bit(e.v);
        t.adjacency_[static_cast<std::size_t>(e.v)] |= bit(e.u);
    }
    t.edges_ = std::move(edges);
    return t;
}

SubTree SubTree::single_vertex(const Graph& host, int v) {
    if (v < 0 || v >= host.order()) throw PreconditionError("vertex out of range");
    SubTree t;
    t.vertices_ = bit(v);
    t.adjacency_.assign(static_cast<std::size_t>(host.order()), 0);
    return t;
}

SubTree SubTree::from_path(const Graph& host, std::span<const int> path) {
    if (path.empty()) throw PreconditionError("empty path");
    if (path.size() == 1) return single_vertex(host, path.front());
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < path.size(); ++i) edges.emplace_back(path[i - 1], path[i]);
    return from_edges(host, std::move(edges));
}

SubTree SubTree::restricted_to(VertexSet keep) const {
    if (keep == 0 || (keep & ~vertices_) != 0) {
        throw PreconditionError("restriction must be a nonempty subset of the tree");
    }
    SubTree t;
    t.vertices_ = keep;
    t.adjacency_.assign(adjacency_.size(), 0);
    for (const Edge& e : edges_) {
        if (kended::contains(keep, e.u) && kended::contains(keep, e.v)) {
            t.edges_.push_back(e);
            t.adjacency_[static_cast<std::size_t>(e.u)] |= bit(e.v);
            t.adjacency_[static_cast<std::size_t>(e.v)] |= bit(e.u);
        }
    }
    if (static_cast<int>(t.edges_.size()) != count(keep) - 1) {
        throw PreconditionError("restriction disconnects the tree");
    }
    return t;
}

bool SubTree::has_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<int> SubTree::path_between(int u, int v) const {
    if (!contains(u) || !contains(v)) throw PreconditionError("path endpoints not in tree");
    std::vector<int> parent(adjacency_.size(), -1);
    std::vector<int> queue{u};
    parent[static_cast<std::size_t>(u)] = u;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int x = queue[head];
        for_each_vertex(neighbors(x), [&](int y) {
            if (parent[static_cast<std::size_t>(y)] < 0) {
                parent[static_cast<std::size_t>(y)] = x;
                queue.push_back(y);
            }
        });
    }
    std::vector<int> path{v};
    while (path.back() != u) path.push_back(parent[static_cast<std::size_t>(path.back())]);
    std::reverse(path.begin(), path.end());
    return path;
}

VertexSet leaves(const SubTree& t) {
    if (t.order() == 1) return t.vertices();
    VertexSet out = 0;
    for_each_vertex(t.vertices(), [&](int v) {
        if (t.degree(v) == 1) out |= bit(v);
    });
    return out;
}

VertexSet branch_vertices(const SubTree& t) {
    VertexSet out = 0;
    for_each_vertex(t.vertices(), [&](int v) {
        if (t.degree(v) >= 3) out |= bit(v);
    });
    return out;
}

int Tailing::position(int v) const {
    const auto it = std::find(path.begin(), path.end(), v);
    return it == path.end() ? -1 : static_cast<int>(it - path.begin());
}

int TailingDecomposition::tailing_of(int v) const {
    for (std::size_t i = 0; i < tailings.size(); ++i) {
        if (tailings[i].position(v) >= 0) return static_cast<int>(i);
    }
    return -1;
}

TailingDecomposition tailings(const SubTree& t) {
    const VertexSet ends = leaves(t);
    if (count(ends) < 3) {
        throw NoBranchVertexError("tailings need at least 3 leaves, tree has " +
                                  std::to_string(count(ends)));
    }
    TailingDecomposition out;
    for_each_vertex(ends, [&](int leaf) {
        Tailing tail;
        tail.leaf = leaf;
        int previous = -1;
        int current = leaf;
        for (;;) {
            tail.path.push_back(current);
            const VertexSet onward = previous < 0 ? t.neighbors(current)
                                                  : t.neighbors(current) & ~bit(previous);
            const int next = lowest(onward);
            if (t.degree(next) >= 3) {
                tail.anchor = next;
                break;
            }
            previous = current;
            current = next;
        }
        out.tailings.push_back(std::move(tail));
    });
    return out;
}

bool is_dominating(const Graph& g, VertexSet covered) {
    return g.is_independent(g.vertices() & ~covered);
}

bool is_dominating(const Graph& g, const SubTree& t) { return is_dominating(g, t.vertices()); }

bool is_independence_tree(const Graph& g, const SubTree& t) {
    return g.is_independent(leaves(t));
}

} // namespace kended
