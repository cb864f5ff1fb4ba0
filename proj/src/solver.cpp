#include "kended/solver.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>

#include "kended/errors.hpp"

namespace kended {
namespace {

constexpr std::uint8_t kNone = 0xff;

// Vertices reachable from `from` inside `allowed` (excluding `from`).
VertexSet reachable(const Graph& g, int from, VertexSet allowed) {
    VertexSet seen = 0;
    VertexSet frontier = bit(from);
    while (frontier != 0) {
        const VertexSet next = g.neighborhood(frontier) & allowed & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen & ~bit(from);
}

// Every vertex subset of the given size, in lexicographic order.
template <typename F>
bool for_each_subset_of_size(int n, int size, F&& f) {
    std::vector<int> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
    if (size > n) return true;
    for (;;) {
        VertexSet s = 0;
        for (int v : pick) s |= bit(v);
        if (!f(s)) return false;
        int i = size - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
        if (i < 0) return true;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j) {
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

struct CycleSearch {
    const Graph& g;
    std::vector<int> path;
    std::vector<int> best;
    std::size_t target = 0;  // stop once a cycle of this order is found

    void extend(int start, int v, VertexSet visited, VertexSet allowed) {
        if (best.size() >= target) return;
        if (path.size() >= 3 && path.size() > best.size() && g.adjacent(v, start)) best = path;
        const VertexSet open = allowed & ~visited;
        const VertexSet reach = reachable(g, v, open);
        if (path.size() + static_cast<std::size_t>(count(reach)) <= best.size()) return;
        for_each_vertex(g.neighbors(v) & open, [&](int u) {
            path.push_back(u);
            extend(start, u, visited | bit(u), allowed);
            path.pop_back();
        });
    }
};

struct HamiltonSearch {
    const Graph& g;
    VertexSet target;
    int start = 0;
    std::vector<int> path;

    bool extend(int v, VertexSet visited) {
        if (visited == target) return g.adjacent(v, start);
        const VertexSet open = target & ~visited;
        // Every unvisited vertex must stay reachable from v.
        if ((reachable(g, v, open) & open) != open) return false;
        bool found = false;
        for_each_vertex(g.neighbors(v) & open, [&](int u) {
            if (found) return;
            path.push_back(u);
            if (extend(u, visited | bit(u))) {
                found = true;
                return;
            }
            path.pop_back();
        });
        return found;
    }
};

struct SpanningTreeWalker {
    const Graph& g;
    VertexSet s;
    int k;
    const std::function<bool(const SubTree&)>& visit;
    std::vector<Edge> edges;
    std::size_t need = 0;
    std::vector<Edge> chosen;
    std::vector<int> potential;  // chosen degree + undecided incident edges
    int forced_leaves = 0;       // vertices whose potential is exactly 1
    std::size_t visited = 0;
    bool stopped = false;

    void lower(int x) {
        auto& p = potential[static_cast<std::size_t>(x)];
        if (p == 2) ++forced_leaves;
        if (p == 1) --forced_leaves;
        --p;
    }
    void raise(int x) {
        auto& p = potential[static_cast<std::size_t>(x)];
        if (p == 0) ++forced_leaves;
        if (p == 1) --forced_leaves;
        ++p;
    }

    void run(std::size_t i, std::vector<int> component) {
        if (stopped) return;
        if (chosen.size() == need) {
            SubTree t = SubTree::from_edges(g, chosen);
            if (count(leaves(t)) <= k) {
                ++visited;
                if (!visit(t)) stopped = true;
            }
            return;
        }
        if (chosen.size() + (edges.size() - i) < need) return;
        const Edge e = edges[i];
        const int cu = component[static_cast<std::size_t>(e.u)];
        const int cv = component[static_cast<std::size_t>(e.v)];
        if (cu != cv) {
            std::vector<int> merged = component;
            for (int& c : merged) {
                if (c == cv) c = cu;
            }
            chosen.push_back(e);
            run(i + 1, std::move(merged));
            chosen.pop_back();
        }
        lower(e.u);
        lower(e.v);
        if (forced_leaves <= k && potential[static_cast<std::size_t>(e.u)] > 0 &&
            potential[static_cast<std::size_t>(e.v)] > 0) {
            run(i + 1, std::move(component));
        }
        raise(e.u);
        raise(e.v);
    }
};

} // namespace

int solver_size_guard() {
    const char* raw = std::getenv("KENDED_MAX_N");
    if (raw == nullptr) return kDefaultSolverGuard;
    int value = 0;
    const char* end = raw + std::strlen(raw);
    const auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc{} || ptr != end || value < 1) return kDefaultSolverGuard;
    return std::min(value, kExactCapacity);
}

void require_connected(const Graph& g) {
    if (g.order() == 0) throw ConnectivityError("graph has no vertices");
    if (!g.is_connected()) throw ConnectivityError("graph is disconnected");
}

void require_within_guard(const Graph& g) {
    const int guard = solver_size_guard();
    if (g.order() > guard) {
        throw SizeError("graph order " + std::to_string(g.order()) + " exceeds the solver guard " +
                        std::to_string(guard) + " (set KENDED_MAX_N, at most " +
                        std::to_string(kExactCapacity) + ")");
    }
}

LeafTable::LeafTable(Graph g) : graph_(std::move(g)), n_(graph_.order()) {
    if (n_ > kExactCapacity) {
        throw SizeError("exact tables support n <= " + std::to_string(kExactCapacity));
    }
    const std::size_t masks = std::size_t{1} << n_;
    const auto n = static_cast<std::size_t>(n_);
    paths_.assign(masks * n, kNone);
    min_paths_.assign(masks, kNone);
    for (int v = 0; v < n_; ++v) paths_[bit(v) * n + static_cast<std::size_t>(v)] = 1;

    const VertexSet all = graph_.vertices();
    auto relax = [&](VertexSet s, int v, std::uint8_t value) {
        auto& slot = paths_[static_cast<std::size_t>(s) * n + static_cast<std::size_t>(v)];
        slot = std::min(slot, value);
    };
    for (VertexSet s = 1; s < masks; ++s) {
        std::uint8_t best = kNone;
        for_each_vertex(s, [&](int v) { best = std::min(best, paths(s, v)); });
        min_paths_[s] = best;
        if (best == kNone) continue;
        const VertexSet outside = all & ~s;
        for_each_vertex(s, [&](int v) {
            const std::uint8_t p = paths(s, v);
            if (p == kNone) return;
            for_each_vertex(graph_.neighbors(v) & outside, [&](int u) { relax(s | bit(u), u, p); });
        });
        const auto attached = static_cast<std::uint8_t>(best + 1);
        for_each_vertex(graph_.neighborhood(s) & outside,
                        [&](int u) { relax(s | bit(u), u, attached); });
    }

    // best_set_[k]: largest set with a spanning tree of at most k leaves.
    best_set_.assign(static_cast<std::size_t>(n_) + 1, 0);
    std::vector<VertexSet> by_leaves(static_cast<std::size_t>(n_) + 1, 0);
    for (VertexSet s = 1; s < masks; ++s) {
        const int leaves = min_leaves(s);
        if (leaves == 0) continue;
        auto& slot = by_leaves[static_cast<std::size_t>(leaves)];
        if (slot == 0 || count(s) > count(slot) || (count(s) == count(slot) && lex_less(s, slot))) {
            slot = s;
        }
    }
    VertexSet running = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        const VertexSet cand = by_leaves[k];
        if (cand != 0 && (running == 0 || count(cand) > count(running) ||
                          (count(cand) == count(running) && lex_less(cand, running)))) {
            running = cand;
        }
        best_set_[k] = running;
    }
}

int LeafTable::min_leaves(VertexSet s) const {
    if (s == 0) return 0;
    if (count(s) == 1) return 1;
    const std::uint8_t p = min_paths_[static_cast<std::size_t>(s)];
    return p == kNone ? 0 : p + 1;
}

SubTree LeafTable::spanning_tree(VertexSet s) const {
    if (min_leaves(s) == 0) throw PreconditionError("induced subgraph is empty or disconnected");
    if (count(s) == 1) return SubTree::single_vertex(graph_, lowest(s));

    std::uint8_t value = min_paths_[static_cast<std::size_t>(s)];
    auto end_with = [&](VertexSet set, std::uint8_t v_paths) {
        int found = -1;
        for_each_vertex(set, [&](int v) {
            if (found < 0 && paths(set, v) == v_paths) found = v;
        });
        return found;
    };
    int v = end_with(s, value);
    std::vector<Edge> edges;
    VertexSet current = s;
    while (count(current) > 1) {
        const VertexSet prev = current & ~bit(v);
        int w = -1;
        for_each_vertex(graph_.neighbors(v) & prev, [&](int x) {
            if (w < 0 && paths(prev, x) == value) w = x;
        });
        if (w >= 0) {
            edges.emplace_back(w, v);
            current = prev;
            v = w;
            continue;
        }
        // v started a new path attached to the covered set.
        const int anchor = lowest(graph_.neighbors(v) & prev);
        edges.emplace_back(anchor, v);
        --value;
        current = prev;
        v = end_with(prev, value);
    }
    return SubTree::from_edges(graph_, std::move(edges));
}

int LeafTable::largest_order(int k) const { return count(largest_set(k)); }

VertexSet LeafTable::largest_set(int k) const {
    if (k < 1) throw ParameterError("k must be positive");
    if (n_ == 0) return 0;
    return best_set_[static_cast<std::size_t>(std::min(k, n_))];
}

void LeafTable::for_each_largest_set(int k, const std::function<void(VertexSet)>& f) const {
    const int size = largest_order(k);
    if (size == 0) return;
    for_each_subset_of_size(n_, size, [&](VertexSet s) {
        const int leaves = min_leaves(s);
        if (leaves != 0 && leaves <= k) f(s);
        return true;
    });
}

Cycle longest_cycle(const Graph& g) {
    const int n = g.order();
    if (n == 0) return {};
    CycleSearch search{g, {}, {}, static_cast<std::size_t>(n)};
    for (int start = 0; start < n; ++start) {
        if (static_cast<std::size_t>(n - start) <= search.best.size()) break;
        const VertexSet allowed = g.vertices() & ~first_n(start);
        search.path = {start};
        search.extend(start, start, bit(start), allowed);
    }
    std::size_t length = search.best.size();
    if (length == 0) length = g.size() > 0 ? 2 : 1;

    // Lexicographically first vertex set among the longest cycles.
    Cycle out;
    for_each_subset_of_size(n, static_cast<int>(length), [&](VertexSet s) {
        if (auto c = spanning_cycle(g, s)) {
            out = std::move(*c);
            return false;
        }
        return true;
    });
    return out;
}

std::optional<Cycle> spanning_cycle(const Graph& g, VertexSet s) {
    const int size = count(s);
    if (size == 0) return std::nullopt;
    if (size == 1) return Cycle{{lowest(s)}};
    if (size == 2) {
        const int a = lowest(s);
        const int b = lowest(s & ~bit(a));
        if (!g.adjacent(a, b)) return std::nullopt;
        return Cycle{{a, b}};
    }
    HamiltonSearch search{g, s, lowest(s), {lowest(s)}};
    if (!search.extend(search.start, bit(search.start))) return std::nullopt;
    return Cycle{std::move(search.path)};
}

bool has_spanning_cycle(const Graph& g, VertexSet s) { return spanning_cycle(g, s).has_value(); }

std::vector<VertexSet> longest_cycle_vertex_sets(const Graph& g) {
    std::vector<VertexSet> out;
    const int length = longest_cycle(g).order();
    if (length == 0) return out;
    for_each_subset_of_size(g.order(), length, [&](VertexSet s) {
        if (has_spanning_cycle(g, s)) out.push_back(s);
        return true;
    });
    return out;
}

TkResult t_k_exact(const Graph& g, int k) {
    if (k < 1) throw ParameterError("k must be positive");
    require_connected(g);
    require_within_guard(g);
    if (k == 1) {
        Cycle c = longest_cycle(g);
        const int order = c.order();
        return {1, order, std::move(c)};
    }
    const LeafTable table(g);
    const VertexSet s = table.largest_set(k);
    return {k, count(s), table.spanning_tree(s)};
}

std::vector<TkResult> t_profile(const Graph& g, int k_max) {
    if (k_max < 1) throw ParameterError("k_max must be positive");
    require_connected(g);
    require_within_guard(g);
    std::vector<TkResult> out;
    Cycle c = longest_cycle(g);
    const int t1 = c.order();
    out.push_back({1, t1, std::move(c)});
    if (k_max == 1) return out;
    const LeafTable table(g);
    for (int k = 2; k <= k_max; ++k) {
        const VertexSet s = table.largest_set(k);
        out.push_back({k, count(s), table.spanning_tree(s)});
    }
    return out;
}

MinLeafResult min_leaf_count_spanning(const Graph& g) {
    if (g.order() < 2) throw PreconditionError("min_leaf_count_spanning requires n >= 2");
    require_connected(g);
    require_within_guard(g);
    const LeafTable table(g);
    return {table.min_leaves(g.vertices()), table.spanning_tree(g.vertices())};
}

std::size_t for_each_max_tree(const Graph& g, int k,
                              const std::function<bool(const SubTree&)>& visit) {
    if (k < 2) {
        throw ParameterError("tree enumeration needs k >= 2; largest 1-ended structures are cycles");
    }
    require_connected(g);
    require_within_guard(g);
    const LeafTable table(g);
    std::size_t visited = 0;
    bool stopped = false;
    table.for_each_largest_set(k, [&](VertexSet s) {
        if (stopped) return;
        if (count(s) == 1) {
            ++visited;
            stopped = !visit(SubTree::single_vertex(g, lowest(s)));
            return;
        }
        SpanningTreeWalker walker{g, s, k, visit, {}, static_cast<std::size_t>(count(s) - 1), {}, {}};
        walker.potential.assign(static_cast<std::size_t>(g.order()), 0);
        for (const Edge& e : g.edges()) {
            if (contains(s, e.u) && contains(s, e.v)) {
                walker.edges.push_back(e);
                ++walker.potential[static_cast<std::size_t>(e.u)];
                ++walker.potential[static_cast<std::size_t>(e.v)];
            }
        }
        std::sort(walker.edges.begin(), walker.edges.end());
        for_each_vertex(s, [&](int v) {
            if (walker.potential[static_cast<std::size_t>(v)] == 1) ++walker.forced_leaves;
        });
        std::vector<int> component(static_cast<std::size_t>(g.order()));
        for (int v = 0; v < g.order(); ++v) component[static_cast<std::size_t>(v)] = v;
        walker.run(0, std::move(component));
        visited += walker.visited;
        stopped = walker.stopped;
    });
    return visited;
}

std::vector<SubTree> enumerate_max_trees(const Graph& g, int k) {
    std::vector<SubTree> out;
    for_each_max_tree(g, k, [&](const SubTree& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

bool has_dominating_k_ended(const LeafTable& table, int k) {
    if (k < 1) throw ParameterError("k must be positive");
    const Graph& g = table.graph();
    const std::size_t masks = std::size_t{1} << g.order();
    for (VertexSet s = 1; s < masks; ++s) {
        if (!is_dominating(g, s)) continue;
        if (k == 1) {
            if (has_spanning_cycle(g, s)) return true;
        } else {
            const int leaves = table.min_leaves(s);
            if (leaves != 0 && leaves <= k) return true;
        }
    }
    return false;
}

bool has_dominating_k_ended(const Graph& g, int k) {
    require_connected(g);
    require_within_guard(g);
    return has_dominating_k_ended(LeafTable(g), k);
}

} // namespace kended
