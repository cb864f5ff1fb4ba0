// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "kended/corpus.hpp"
#include "kended/degree_sums.hpp"
#include "kended/errors.hpp"
#include "kended/families.hpp"
#include "kended/graph6.hpp"
#include "kended/harness.hpp"
#include "kended/solver.hpp"
#include "kended/transforms.hpp"
#include "oracle/oracle.hpp"

using namespace kended;

namespace {

// Every criterion compares integers; agreement must be exact.
constexpr long kTolerance = 0;

bool agree(long a, long b) { return std::labs(a - b) <= kTolerance; }

struct Verdict {
    bool pass = true;
    std::string detail;
};

std::vector<Graph> connected_graphs(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        LabeledConnectedGraphs stream(n);
        while (auto g = stream.next()) out.push_back(std::move(*g));
    }
    return out;
}

const std::vector<Graph>& corpus6() {
    static const std::vector<Graph> graphs = connected_graphs(6);
    return graphs;
}

Verdict exhaustive_theorems() {
    const InstanceRanges ranges{1, 4, 1, 4, std::nullopt, {}};
    const VerificationReport r = verify_corpus(corpus6(), "n<=6", ranges);
    std::ostringstream d;
    d << r.graphs << " graphs, " << r.instances << " instances, " << r.non_vacuous
      << " non-vacuous, " << r.violation_count << " violations, " << r.elapsed_ms << " ms";
    return {r.graphs == 27476 && r.skipped == 0 && r.violation_count == 0, d.str()};
}

Verdict oracle_equivalence() {
    std::size_t checks = 0;
    std::size_t mismatches = 0;
    auto compare = [&](const Graph& g) {
        for (int k = 1; k <= 4; ++k) {
            ++checks;
            if (!agree(t_k_exact(g, k).order, oracle::t_k(g, k))) ++mismatches;
        }
    };
    for (const Graph& g : corpus6()) compare(g);
    std::mt19937_64 rng(9001);
    std::uniform_int_distribution<int> order(2, 9);
    std::uniform_real_distribution<double> density(0.3, 0.7);
    for (int i = 0; i < 200; ++i) {
        const int n = order(rng);
        const double p = density(rng);
        compare(random_connected(n, p, rng()));
    }
    std::ostringstream d;
    d << checks << " (graph, k) pairs, " << mismatches << " mismatches";
    return {mismatches == 0, d.str()};
}

Verdict sharpness_g1() {
    std::size_t cases = 0;
    std::ostringstream bad;
    for (int k = 1; k <= 4; ++k) {
        for (int lambda = 2; lambda <= 3; ++lambda) {
            if ((k + 1) * lambda + 1 > 10) continue;
            const Graph g = build_family(FamilySpec::g1(k, lambda));
            const int t_k = t_k_exact(g, k).order;
            const int t_k1 = t_k_exact(g, k + 1).order;
            for (int m = 2; m <= std::min(k, lambda) + 1; ++m) {
                ++cases;
                const ExtendedCount s = sigma(g, m);
                const long expected_sigma = t_k1 - lambda * (k - m + 1) - 1;
                const bool ok = s.is_finite() && agree(s.value(), expected_sigma) &&
                                agree(t_k, t_k1 - lambda);
                if (!ok) bad << " g1(" << k << "," << lambda << ") m=" << m;
            }
        }
    }
    std::ostringstream d;
    d << cases << " (k, lambda, m) cases";
    if (!bad.str().empty()) d << "; failed:" << bad.str();
    return {bad.str().empty() && cases > 0, d.str()};
}

Verdict sharpness_g2_and_top() {
    std::ostringstream d;
    bool pass = true;
    std::size_t cases = 0;
    for (int k = 1; k <= 4; ++k) {
        for (int lambda = 2; lambda <= 3; ++lambda) {
            const Graph g = build_family(FamilySpec::g2(k, lambda));
            if (g.order() > 10) continue;
            const int t_k = t_k_exact(g, k).order;
            const int t_k1 = t_k_exact(g, k + 1).order;
            for (int m = 1; m <= std::min(k, lambda); ++m) {
                ++cases;
                const bool condition = sigma(g, m) >= static_cast<std::int64_t>(t_k1 - lambda * (k - m + 1));
                if (!condition || !agree(t_k, t_k1 - lambda + 1)) {
                    pass = false;
                    d << "g2(" << k << "," << lambda << ") m=" << m << " not tight; ";
                }
            }
        }
    }
    d << cases << " g2 cases; ";

    // (k+2)K_{k-1} + K_2 at k = 3, lambda = 3, m = 4, with the expected values as stated.
    const Graph g3 = build_family(FamilySpec::g3(3));
    const ExtendedCount s4 = sigma(g3, 4);
    const int t4 = t_k_exact(g3, 4).order;
    const int t3 = t_k_exact(g3, 3).order;
    const bool g3_ok = s4 == std::int64_t{12} && agree(t4, 10) && agree(t3, 8);
    d << "5K2+K2: sigma_4=" << to_string(s4) << " t_4=" << t4 << " t_3=" << t3
      << " (expected 12, 10, 8; tight t_3 = t_4 - 2: " << (t3 == t4 - 2 ? "yes" : "no") << "); ";
    pass = pass && g3_ok;

    for (int r = 2; r <= 4; ++r) {
        const Graph g = build_family(FamilySpec::krr(r));
        const int t1 = t_k_exact(g, 1).order;
        const int t2 = t_k_exact(g, 2).order;
        if (!agree(t1, 2 * r) || !agree(t2, 2 * r)) {
            pass = false;
            d << "K_{" << r << "," << r << "} t_1=" << t1 << " t_2=" << t2 << "; ";
        }
    }
    d << "K_{r,r} r=2..4 checked";
    return {pass, d.str()};
}

Verdict replay_claims() {
    std::size_t runs = 0, trees = 0, exchanges = 0, claim_failures = 0, extra_failures = 0;
    for (const Graph& g : corpus6()) {
        for (int k = 1; k <= 3; ++k) {
            for (int lambda = 1; lambda <= 3; ++lambda) {
                const ReplayReport r = proof_replay(g, k, lambda);
                if (!r.precondition_held) continue;
                ++runs;
                trees += r.trees_checked;
                exchanges += r.exchanges_checked;
                if (!r.claim1_ok || !r.claim2_ok || !r.claim3_ok) ++claim_failures;
                if (!r.claim6_ok || !r.claim7_ok || !r.claim8_ok) ++extra_failures;
            }
        }
    }
    std::ostringstream d;
    d << runs << " (graph, k, lambda) with the precondition, " << trees << " maximum trees, "
      << claim_failures << " claim 1-3 failures; " << exchanges << " exchanges, " << extra_failures
      << " exchange-claim failures";
    return {claim_failures == 0 && runs > 0, d.str()};
}

Verdict worked_fixture() {
    const Graph g = build_family(FamilySpec::g1(2, 2));
    std::vector<int> profile;
    for (const TkResult& r : t_profile(g, 3)) profile.push_back(r.order);
    const std::vector<int> golden{3, 5, 7};
    bool pass = profile == golden;
    for (int k = 1; k <= 3; ++k) pass = pass && agree(oracle::t_k(g, k), golden[static_cast<std::size_t>(k - 1)]);
    pass = pass && sigma(g, 2) == std::int64_t{4} && oracle::sigma(g, 2) == 4;
    pass = pass && sigma(g, 3) == std::int64_t{6} && oracle::sigma(g, 3) == 6;
    pass = pass && independence_number(g) == 3 && oracle::alpha(g) == 3;
    const std::vector<SubTree> trees = enumerate_max_trees(g, 3);
    pass = pass && trees.size() == 8 && oracle::max_trees(g, 3).size() == 8;
    for (const SubTree& t : trees) {
        pass = pass && count(branch_vertices(t)) == 1;
        for (const Tailing& tail : tailings(t).tailings) pass = pass && tail.order() == 2;
    }
    std::ostringstream d;
    d << "profile [" << profile[0] << ", " << profile[1] << ", " << profile[2] << "], "
      << trees.size() << " maximum 3-ended spiders";
    return {pass, d.str()};
}

Verdict graph6_round_trip() {
    std::size_t checked = 0, failed = 0;
    for (int n = 0; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            Graph g(n);
            int index = 0;
            for (int v = 1; v < n; ++v) {
                for (int u = 0; u < v; ++u, ++index) {
                    if (mask >> index & 1) g.add_edge(u, v);
                }
            }
            ++checked;
            if (!(parse_graph6(write_graph6(g)) == g)) ++failed;
        }
    }
    std::mt19937_64 rng(6);
    for (int i = 0; i < 1000; ++i) {
        const int n = static_cast<int>(rng() % 31);
        const double p = 0.05 + 0.9 * static_cast<double>(rng() % 1000) / 1000.0;
        const Graph g = random_graph(n, p, rng());
        ++checked;
        if (!(parse_graph6(write_graph6(g)) == g)) ++failed;
    }
    const std::string k3 = write_graph6(build_family(FamilySpec::complete(3)));
    std::ostringstream d;
    d << checked << " graphs, " << failed << " mismatches, K_3 -> \"" << k3 << '"';
    return {failed == 0 && k3 == "Bw", d.str()};
}

Verdict transformation_contracts() {
    std::mt19937_64 rng(8);
    std::size_t fixtures = 0, reduced = 0, cycles = 0, broken = 0;
    while (fixtures < 500) {
        const int n = 3 + static_cast<int>(rng() % 10);
        Graph tree(n);
        for (int v = 1; v < n; ++v) tree.add_edge(v, static_cast<int>(rng() % static_cast<std::uint64_t>(v)));
        const std::vector<int> ends = to_vector(leaves(SubTree::from_edges(tree, tree.edges())));
        const int a = ends[rng() % ends.size()];
        const int b = ends[rng() % ends.size()];
        if (a == b) continue;
        Graph host = tree;
        host.add_edge(a, b);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (rng() % 5 == 0) host.add_edge(u, v);
            }
        }
        const SubTree t = SubTree::from_edges(host, tree.edges());
        ++fixtures;
        try {
            const ExchangeResult r = leaf_edge_reduction(host, t, Edge(a, b));
            if (r.classification == ExchangeKind::became_cycle) {
                ++cycles;
                if (static_cast<int>(r.cycle.size()) != t.order()) ++broken;
                continue;
            }
            const bool valid = r.tree && r.tree->vertices() == t.vertices() &&
                               is_tree_edge_set(host, r.tree->edges()) &&
                               count(leaves(*r.tree)) < count(leaves(t)) &&
                               r.classification == ExchangeKind::fewer_leaves_same_order;
            if (valid) ++reduced; else ++broken;
        } catch (const Error&) {
            ++broken;
        }
    }
    std::ostringstream d;
    d << fixtures << " fixtures: " << reduced << " fewer leaves, " << cycles << " became cycle, "
      << broken << " broken";
    return {broken == 0, d.str()};
}

} // namespace

int main() {
    // 5K2+K2 has 12 vertices, above the default guard.
    ::setenv("KENDED_MAX_N", "12", 0);

    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"exhaustive theorem verification", exhaustive_theorems},
        {"oracle equivalence", oracle_equivalence},
        {"sharpness of G1", sharpness_g1},
        {"sharpness of G2 and the m = k+1 families", sharpness_g2_and_top},
        {"proof replay", replay_claims},
        {"worked fixture g1(2,2)", worked_fixture},
        {"graph6 round trip", graph6_round_trip},
        {"transformation contracts", transformation_contracts},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        if (!v.pass) ++failures;
        std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " ("
                  << criteria[i].first << "): " << v.detail << " [" << ms << " ms]" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
