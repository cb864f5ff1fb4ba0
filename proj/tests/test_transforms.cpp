#include <doctest.h>

#include <random>

#include "kended/corpus.hpp"
#include "kended/errors.hpp"
#include "kended/families.hpp"
#include "kended/solver.hpp"
#include "kended/transforms.hpp"

using namespace kended;

namespace {

// Spider with `legs` legs of `length` vertices; centre 0, leg i is
// i*length+1 (next to the centre) .. (i+1)*length (the leaf).
Graph spider(int legs, int length) {
    Graph g(1 + legs * length);
    for (int i = 0; i < legs; ++i) {
        int previous = 0;
        for (int j = 1; j <= length; ++j) {
            const int v = i * length + j;
            g.add_edge(previous, v);
            previous = v;
        }
    }
    return g;
}

Graph with_edge(Graph g, int u, int v) {
    g.add_edge(u, v);
    return g;
}

SubTree tree_of(const Graph& host, const Graph& tree) { return SubTree::from_edges(host, tree.edges()); }

bool valid_on(const Graph& g, const SubTree& out, const SubTree& in) {
    return out.vertices() == in.vertices() && out.edges().size() == in.edges().size() &&
           is_tree_edge_set(g, out.edges());
}

} // namespace

TEST_CASE("exchange on a triangle") {
    const Graph k3 = build_family(FamilySpec::complete(3));
    const std::vector<int> walk{0, 1, 2};
    const SubTree t = SubTree::from_path(k3, walk);
    const Edge add[] = {Edge(2, 0)};
    const Edge remove[] = {Edge(0, 1)};
    const ExchangeResult r = exchange(k3, t, add, remove);
    REQUIRE(r.tree);
    CHECK(r.classification == ExchangeKind::same_leaves_retailed);
    CHECK(r.tree->edges() == std::vector<Edge>{Edge(0, 2), Edge(1, 2)});
    CHECK(leaves(*r.tree) == (bit(0) | bit(1)));
    CHECK_THROWS_AS(exchange(k3, t, add, {}), PreconditionError);
    const Edge not_tree[] = {Edge(0, 2)};
    CHECK_THROWS_AS(exchange(k3, t, add, not_tree), PreconditionError);
    CHECK_THROWS_AS(exchange(k3, t, remove, remove), PreconditionError);
}

TEST_CASE("exchange that disconnects is rejected") {
    const Graph c4 = build_family(FamilySpec::cycle(4));
    const std::vector<int> walk{0, 1, 2, 3};
    const SubTree t = SubTree::from_path(c4, walk);
    const Edge add[] = {Edge(0, 3)};
    const Edge remove[] = {Edge(2, 3)};
    const Edge remove_middle[] = {Edge(1, 2)};
    CHECK_NOTHROW(exchange(c4, t, add, remove));
    CHECK(exchange(c4, t, add, remove_middle).classification == ExchangeKind::same_leaves_retailed);
    const Graph k4 = build_family(FamilySpec::complete(4));
    const SubTree p = SubTree::from_path(k4, walk);
    const Edge add_chord[] = {Edge(0, 2)};
    const Edge remove_far[] = {Edge(2, 3)};
    CHECK_THROWS_AS(exchange(k4, p, add_chord, remove_far), InvalidExchangeError);
}

TEST_CASE("leaf edge reduction") {
    SUBCASE("Hamilton path of C5 closes into a cycle") {
        const Graph c5 = build_family(FamilySpec::cycle(5));
        const std::vector<int> walk{0, 1, 2, 3, 4};
        const ExchangeResult r = leaf_edge_reduction(c5, SubTree::from_path(c5, walk), Edge(0, 4));
        CHECK(r.classification == ExchangeKind::became_cycle);
        CHECK_FALSE(r.tree);
        CHECK(r.cycle == std::vector<int>{0, 1, 2, 3, 4});
    }
    SUBCASE("star of K4 with edge bc becomes the path d-a-c-b") {
        const Graph k4 = build_family(FamilySpec::complete(4));
        const SubTree star = SubTree::from_edges(k4, {Edge(0, 1), Edge(0, 2), Edge(0, 3)});
        const ExchangeResult r = leaf_edge_reduction(k4, star, Edge(1, 2));
        REQUIRE(r.tree);
        CHECK(r.classification == ExchangeKind::fewer_leaves_same_order);
        CHECK(r.tree->order() == 4);
        CHECK(r.leaves_after == 2);
        CHECK(r.tree->edges() == std::vector<Edge>{Edge(0, 2), Edge(0, 3), Edge(1, 2)});
    }
    SUBCASE("precondition failures") {
        const Graph p4 = build_family(FamilySpec::path(4));
        const SubTree path = tree_of(p4, p4);
        CHECK_THROWS_AS(leaf_edge_reduction(p4, path, Edge(0, 3)), PreconditionError);
        CHECK_THROWS_AS(leaf_edge_reduction(p4, path, Edge(0, 1)), PreconditionError);
        const Graph k4 = build_family(FamilySpec::complete(4));
        CHECK_THROWS_AS(leaf_edge_reduction(k4, tree_of(k4, p4), Edge(0, 2)), PreconditionError);
    }
}

TEST_CASE("pruning the shortest tailing") {
    SUBCASE("spider with legs 1, 2, 3") {
        Graph g(7);
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(2, 3);
        g.add_edge(0, 4);
        g.add_edge(4, 5);
        g.add_edge(5, 6);
        const SubTree out = prune_shortest_tailing(tree_of(g, g));
        CHECK(out.order() == 6);
        CHECK(count(leaves(out)) == 2);
        CHECK_FALSE(out.contains(1));
    }
    SUBCASE("K_{1,3} becomes a path on three vertices") {
        const Graph star = build_family(FamilySpec::star(3));
        const SubTree out = prune_shortest_tailing(tree_of(star, star));
        CHECK(out.order() == 3);
        CHECK(out.vertices() == (bit(0) | bit(2) | bit(3)));
    }
    SUBCASE("spanning spider of g1(2,2)") {
        const Graph g1 = build_family(FamilySpec::g1(2, 2));
        for (const SubTree& t : enumerate_max_trees(g1, 3)) {
            const SubTree out = prune_shortest_tailing(t);
            CHECK(out.order() == 5);
            CHECK(count(leaves(out)) == 2);
        }
    }
    const Graph p5 = build_family(FamilySpec::path(5));
    CHECK_THROWS_AS(prune_shortest_tailing(tree_of(p5, p5)), NoBranchVertexError);
}

TEST_CASE("tailing swaps on spiders") {
    // Legs: a = {1, 2}, b = {3, 4}, d = {5, 6}; leaves 2, 4, 6; w for leg b is 3.
    const Graph sp = spider(3, 2);
    SUBCASE("re-hanging at the last tailing vertex removes a leaf") {
        const Graph host = with_edge(sp, 2, 3);
        const ExchangeResult r = tailing_swap(host, tree_of(host, sp), 2, 3);
        REQUIRE(r.tree);
        CHECK(r.classification == ExchangeKind::fewer_leaves_same_order);
        CHECK(r.tree->order() == 7);
        CHECK(leaves(*r.tree) == (bit(4) | bit(6)));
    }
    SUBCASE("mu equal to the other leaf is excluded") {
        const Graph host = with_edge(sp, 2, 4);
        CHECK_THROWS_AS(tailing_swap(host, tree_of(host, sp), 2, 4), PreconditionError);
    }
    SUBCASE("missing host edge or own tailing") {
        CHECK_THROWS_AS(tailing_swap(sp, tree_of(sp, sp), 2, 3), PreconditionError);
        const Graph host = with_edge(sp, 2, 0);
        CHECK_THROWS_AS(tailing_swap(host, tree_of(host, sp), 2, 1), PreconditionError);
        CHECK_THROWS_AS(tailing_swap(host, tree_of(host, sp), 1, 3), PreconditionError);
    }
    SUBCASE("mid-tailing re-hanging reports both segments") {
        // Legs of order 3: a = {1,2,3}, b = {4,5,6}, d = {7,8,9}; leaf 3 joins 5.
        const Graph big = spider(3, 3);
        const Graph host = with_edge(big, 3, 5);
        const ExchangeResult r = tailing_swap(host, tree_of(host, big), 3, 5);
        REQUIRE(r.tree);
        CHECK(r.classification == ExchangeKind::same_leaves_retailed);
        CHECK(r.new_tailings == std::vector<std::vector<int>>{{6}, {4}});
        CHECK(leaves(*r.tree) == (bit(4) | bit(6) | bit(9)));
    }
}

TEST_CASE("leaf edge reduction on random fixtures shrinks the leaf set or closes a cycle") {
    std::mt19937_64 rng(314159);
    int fixtures = 0;
    int cycles = 0;
    while (fixtures < 500) {
        const int n = 3 + static_cast<int>(rng() % 10);
        Graph tree(n);
        for (int v = 1; v < n; ++v) tree.add_edge(v, static_cast<int>(rng() % static_cast<std::uint64_t>(v)));
        const std::vector<int> ends = to_vector(leaves(SubTree::from_edges(tree, tree.edges())));
        const int a = ends[rng() % ends.size()];
        int b = ends[rng() % ends.size()];
        if (a == b) continue;
        Graph host = tree;
        host.add_edge(a, b);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (rng() % 4 == 0) host.add_edge(u, v);
            }
        }
        const SubTree t = SubTree::from_edges(host, tree.edges());
        const ExchangeResult r = leaf_edge_reduction(host, t, Edge(a, b));
        ++fixtures;
        if (r.classification == ExchangeKind::became_cycle) {
            ++cycles;
            REQUIRE(count(leaves(t)) == 2);
            REQUIRE(static_cast<int>(r.cycle.size()) == n);
            continue;
        }
        REQUIRE(r.tree);
        REQUIRE(r.classification == ExchangeKind::fewer_leaves_same_order);
        REQUIRE(r.leaves_after < r.leaves_before);
        REQUIRE(valid_on(host, *r.tree, t));
    }
    CHECK(cycles > 0);
}

TEST_CASE("random exchanges either fail loudly or keep the tree invariants") {
    std::mt19937_64 rng(2718);
    int accepted = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 7);
        const Graph host = random_connected(n, 0.5, rng());
        const SubTree t = heuristic_k_ended(host, n, rng());
        std::vector<Edge> outside;
        for (const Edge& e : host.edges()) {
            if (!t.has_edge(e) && t.contains(e.u) && t.contains(e.v)) outside.push_back(e);
        }
        if (outside.empty()) continue;
        const std::size_t size = 1 + rng() % std::min<std::size_t>(2, outside.size());
        std::vector<Edge> add, remove;
        while (add.size() < size) {
            const Edge e = outside[rng() % outside.size()];
            if (std::find(add.begin(), add.end(), e) == add.end()) add.push_back(e);
        }
        while (remove.size() < size && remove.size() < t.edges().size()) {
            const Edge e = t.edges()[rng() % t.edges().size()];
            if (std::find(remove.begin(), remove.end(), e) == remove.end()) remove.push_back(e);
        }
        if (remove.size() != add.size()) continue;
        try {
            const ExchangeResult r = exchange(host, t, add, remove);
            REQUIRE(r.tree);
            REQUIRE(valid_on(host, *r.tree, t));
            const int before = count(leaves(t));
            const int after = count(leaves(*r.tree));
            REQUIRE(r.leaves_before == before);
            REQUIRE(r.leaves_after == after);
            ++accepted;
        } catch (const InvalidExchangeError&) {
        }
    }
    CHECK(accepted > 100);
}

TEST_CASE("proof replay examples") {
    const ReplayReport g1 = proof_replay(build_family(FamilySpec::g1(2, 2)), 2, 2);
    CHECK(g1.precondition_held);
    CHECK(g1.t_k == 5);
    CHECK(g1.t_k1 == 7);
    CHECK(g1.trees_checked == 8);
    CHECK(g1.ok());
    const ReplayReport c5 = proof_replay(build_family(FamilySpec::cycle(5)), 1, 1);
    CHECK_FALSE(c5.precondition_held);
    CHECK(c5.trees_checked == 0);
    CHECK_THROWS_AS(proof_replay(build_family(FamilySpec::cycle(5)), 0, 1), ParameterError);
}

TEST_CASE("proof replay finds no claim failure on connected graphs up to 5 vertices") {
    std::size_t held = 0;
    for (int n = 1; n <= 5; ++n) {
        LabeledConnectedGraphs stream(n);
        while (auto g = stream.next()) {
            for (int k = 1; k <= 4; ++k) {
                for (int lambda = 1; lambda <= 4; ++lambda) {
                    const ReplayReport r = proof_replay(*g, k, lambda);
                    if (!r.precondition_held) continue;
                    ++held;
                    INFO("graph order ", n, " k ", k, " lambda ", lambda);
                    REQUIRE(r.trees_checked > 0);
                    REQUIRE(r.ok());
                }
            }
        }
    }
    CHECK(held > 0);
}
