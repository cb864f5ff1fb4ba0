#include "kended/transforms.hpp"

#include <algorithm>

#include "kended/errors.hpp"
#include "kended/solver.hpp"

namespace kended {
namespace {

constexpr std::size_t kMaxReplayFailures = 100;

std::vector<std::vector<int>> tailing_paths(const SubTree& t) {
    std::vector<std::vector<int>> out;
    if (count(leaves(t)) < 3) return out;
    for (auto& tail : tailings(t).tailings) out.push_back(std::move(tail.path));
    return out;
}

int degree_with(const SubTree& t, const Edge& e, int v) {
    return t.degree(v) + ((v == e.u || v == e.v) ? 1 : 0);
}

std::vector<int> slice(const std::vector<int>& path, int from, int to) {
    if (from > to) return {};
    return {path.begin() + from, path.begin() + to + 1};
}

} // namespace

std::string to_string(ExchangeKind kind) {
    switch (kind) {
    case ExchangeKind::fewer_leaves_same_order: return "fewer-leaves-same-order";
    case ExchangeKind::same_leaves_retailed: return "same-leaves-retailed";
    case ExchangeKind::more_leaves_same_order: return "more-leaves-same-order";
    case ExchangeKind::became_cycle: return "became-cycle";
    }
    return "unknown";
}

ExchangeResult exchange(const Graph& g, const SubTree& t, std::span<const Edge> add,
                        std::span<const Edge> remove) {
    if (add.size() != remove.size() || add.empty() || add.size() > 2) {
        throw PreconditionError("exchange needs |add| = |remove| in {1, 2}");
    }
    if (add.size() == 2 && (add[0] == add[1] || remove[0] == remove[1])) {
        throw PreconditionError("exchange edges must be distinct");
    }
    for (const Edge& e : add) {
        if (e.u < 0 || e.v >= g.order() || !g.has_edge(e)) {
            throw PreconditionError("added edge " + to_string(e) + " is not a host edge");
        }
        if (t.has_edge(e)) throw PreconditionError("added edge " + to_string(e) + " is already in the tree");
        if (!t.contains(e.u) || !t.contains(e.v)) {
            throw PreconditionError("added edge " + to_string(e) + " leaves the tree's vertex set");
        }
    }
    for (const Edge& e : remove) {
        if (!t.has_edge(e)) throw PreconditionError("removed edge " + to_string(e) + " is not a tree edge");
    }

    std::vector<Edge> edges;
    for (const Edge& e : t.edges()) {
        if (std::find(remove.begin(), remove.end(), e) == remove.end()) edges.push_back(e);
    }
    edges.insert(edges.end(), add.begin(), add.end());
    if (!is_tree_edge_set(g, edges)) {
        throw InvalidExchangeError("edited edge set is not a tree on the same vertices");
    }

    ExchangeResult result;
    SubTree out = SubTree::from_edges(g, std::move(edges));
    result.leaves_before = count(leaves(t));
    result.leaves_after = count(leaves(out));
    if (result.leaves_after < result.leaves_before) {
        result.classification = ExchangeKind::fewer_leaves_same_order;
    } else if (result.leaves_after == result.leaves_before) {
        result.classification = ExchangeKind::same_leaves_retailed;
    } else {
        result.classification = ExchangeKind::more_leaves_same_order;
    }
    const auto before = tailing_paths(t);
    for (auto& path : tailing_paths(out)) {
        if (std::find(before.begin(), before.end(), path) == before.end()) {
            result.new_tailings.push_back(std::move(path));
        }
    }
    result.tree = std::move(out);
    return result;
}

ExchangeResult leaf_edge_reduction(const Graph& g, const SubTree& t, Edge e) {
    const VertexSet ends = leaves(t);
    if (t.order() < 2 || !contains(ends, e.u) || !contains(ends, e.v)) {
        throw PreconditionError("both endpoints of " + to_string(e) + " must be leaves");
    }
    if (t.has_edge(e)) throw PreconditionError("edge " + to_string(e) + " is already in the tree");
    if (!g.has_edge(e)) throw PreconditionError("edge " + to_string(e) + " is not a host edge");

    const std::vector<int> cycle = t.path_between(e.u, e.v);
    if (static_cast<int>(cycle.size()) == t.order()) {
        ExchangeResult result;
        result.classification = ExchangeKind::became_cycle;
        result.cycle = cycle;
        result.leaves_before = count(ends);
        return result;
    }

    const std::size_t len = cycle.size();
    for (std::size_t i = 0; i < len; ++i) {
        const int x = cycle[i];
        if (degree_with(t, e, x) < 3) continue;
        const int prev = cycle[(i + len - 1) % len];
        const int next = cycle[(i + 1) % len];
        const int dp = degree_with(t, e, prev);
        const int dn = degree_with(t, e, next);
        const int drop = dp != dn ? (dp > dn ? prev : next) : std::min(prev, next);
        const Edge add[] = {e};
        const Edge remove[] = {Edge(x, drop)};
        return exchange(g, t, add, remove);
    }
    throw InvalidExchangeError("no cycle vertex of degree >= 3 on a non-spanning cycle");
}

SubTree prune_shortest_tailing(const SubTree& t) {
    const TailingDecomposition dec = tailings(t);
    const Tailing* shortest = &dec.tailings.front();
    for (const Tailing& tail : dec.tailings) {
        if (tail.order() < shortest->order()) shortest = &tail;
    }
    VertexSet keep = t.vertices();
    for (int v : shortest->path) keep &= ~bit(v);
    return t.restricted_to(keep);
}

ExchangeResult tailing_swap(const Graph& g, const SubTree& t, int leaf_j, int mu) {
    const TailingDecomposition dec = tailings(t);
    const int j = dec.tailing_of(leaf_j);
    if (j < 0 || dec.tailings[static_cast<std::size_t>(j)].leaf != leaf_j) {
        throw PreconditionError("vertex " + std::to_string(leaf_j) + " is not a leaf");
    }
    const int i = dec.tailing_of(mu);
    if (i < 0 || i == j) throw PreconditionError("mu must lie on the tailing of another leaf");
    const Tailing& tail = dec.tailings[static_cast<std::size_t>(i)];
    const int pos = tail.position(mu);
    if (pos == 0) throw PreconditionError("mu equals the other tailing's leaf");
    const Edge joining(leaf_j, mu);
    if (!g.has_edge(joining)) throw PreconditionError("edge " + to_string(joining) + " is not a host edge");

    const Edge add[] = {joining};
    const Edge remove[] = {Edge(tail.last(), tail.anchor)};
    ExchangeResult result = exchange(g, t, add, remove);
    if (mu != tail.last()) {
        result.new_tailings = {slice(tail.path, 0, pos - 1),
                               slice(tail.path, pos + 1, tail.order() - 1)};
    }
    return result;
}

ReplayReport proof_replay(const Graph& g, int k, int lambda) {
    if (k < 1 || lambda < 1) throw ParameterError("proof replay needs k >= 1 and lambda >= 1");
    require_connected(g);
    require_within_guard(g);

    ReplayReport report;
    report.k = k;
    report.lambda = lambda;
    const LeafTable table(g);
    report.t_k = k == 1 ? longest_cycle(g).order() : table.largest_order(k);
    report.t_k1 = table.largest_order(k + 1);
    report.precondition_held = report.t_k <= report.t_k1 - lambda;
    if (!report.precondition_held) return report;

    auto fail = [&](const SubTree& tree, int claim, std::string detail) {
        switch (claim) {
        case 1: report.claim1_ok = false; break;
        case 2: report.claim2_ok = false; break;
        case 3: report.claim3_ok = false; break;
        case 6: report.claim6_ok = false; break;
        case 7: report.claim7_ok = false; break;
        default: report.claim8_ok = false; break;
        }
        if (report.failures.size() < kMaxReplayFailures) {
            report.failures.push_back({tree, claim, std::move(detail)});
        }
    };

    // Exchange check shared by the double-exchange claims.
    auto check_double = [&](const SubTree& tree, int claim, const Tailing& tail, int p1, int p2,
                            Edge first, Edge second) {
        ++report.exchanges_checked;
        const Edge add[] = {first, second};
        const Edge remove[] = {Edge(tail.path[static_cast<std::size_t>(p1)],
                                    tail.path[static_cast<std::size_t>(p1 + 1)]),
                               Edge(tail.last(), tail.anchor)};
        try {
            const ExchangeResult r = exchange(g, tree, add, remove);
            if (r.classification == ExchangeKind::fewer_leaves_same_order) {
                fail(tree, claim, "exchange produced a k-ended tree of order t_{k+1}");
            }
        } catch (const Error& e) {
            fail(tree, claim, std::string("exchange failed: ") + e.what());
        }
        if (p2 - p1 - 1 < lambda) {
            fail(tree, claim, "segment between positions " + std::to_string(p1) + " and " +
                                  std::to_string(p2) + " shorter than lambda");
        }
    };

    for_each_max_tree(g, k + 1, [&](const SubTree& tree) {
        ++report.trees_checked;
        const VertexSet ends = leaves(tree);
        if (count(ends) != k + 1) {
            fail(tree, 1, "tree has " + std::to_string(count(ends)) + " leaves");
        }
        const bool independent = g.is_independent(ends);
        if (!independent) fail(tree, 2, "two leaves are adjacent in the host");
        if (count(ends) < 3) return true;

        const TailingDecomposition dec = tailings(tree);
        for (const Tailing& tail : dec.tailings) {
            if (tail.order() < lambda) {
                fail(tree, 3, "tailing at leaf " + std::to_string(tail.leaf) + " has order " +
                                  std::to_string(tail.order()));
            }
        }
        if (!independent) return true;

        const auto& all = dec.tailings;
        for (std::size_t i = 0; i < all.size(); ++i) {
            const Tailing& tail = all[i];
            for (int p = 1; p < tail.order(); ++p) {
                const int mu = tail.path[static_cast<std::size_t>(p)];
                for (std::size_t j = 0; j < all.size(); ++j) {
                    if (j == i || !g.adjacent(all[j].leaf, mu)) continue;
                    ++report.exchanges_checked;
                    try {
                        const ExchangeResult r = tailing_swap(g, tree, all[j].leaf, mu);
                        if (r.classification != ExchangeKind::same_leaves_retailed) {
                            fail(tree, 6, "re-hanging at " + std::to_string(mu) + " gave " +
                                              to_string(r.classification));
                        } else if (p < lambda || tail.order() - p - 1 < lambda) {
                            fail(tree, 6, "segments around " + std::to_string(mu) +
                                              " shorter than lambda");
                        }
                    } catch (const Error& e) {
                        fail(tree, 6, std::string("exchange failed: ") + e.what());
                    }
                }
            }
            for (int p1 = 1; p1 < tail.order(); ++p1) {
                const int mu1 = tail.path[static_cast<std::size_t>(p1)];
                for (int p2 = p1 + 1; p2 < tail.order(); ++p2) {
                    const int mu2 = tail.path[static_cast<std::size_t>(p2)];
                    for (std::size_t j = 0; j < all.size(); ++j) {
                        if (j == i || !g.adjacent(all[j].leaf, mu1)) continue;
                        if (g.adjacent(tail.leaf, mu2)) {
                            check_double(tree, 7, tail, p1, p2, Edge(tail.leaf, mu2),
                                         Edge(all[j].leaf, mu1));
                        }
                        for (std::size_t s = 0; s < all.size(); ++s) {
                            if (s == i || s == j || !g.adjacent(all[s].leaf, mu2)) continue;
                            check_double(tree, 8, tail, p1, p2, Edge(all[j].leaf, mu1),
                                         Edge(all[s].leaf, mu2));
                        }
                    }
                }
            }
        }
        return true;
    });
    return report;
}

} // namespace kended
