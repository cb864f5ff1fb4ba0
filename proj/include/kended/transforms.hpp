#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kended/graph.hpp"
#include "kended/subtree.hpp"

namespace kended {

enum class ExchangeKind {
    fewer_leaves_same_order,
    same_leaves_retailed,
    more_leaves_same_order,
    became_cycle,
};

std::string to_string(ExchangeKind kind);

struct ExchangeResult {
    std::optional<SubTree> tree;  ///< absent only for became_cycle
    ExchangeKind classification = ExchangeKind::same_leaves_retailed;
    /// Tailing segments created by the exchange (leaf side first).
    std::vector<std::vector<int>> new_tailings;
    /// The closed cycle, for became_cycle.
    std::vector<int> cycle;
    int leaves_before = 0;
    int leaves_after = 0;
};

/// T' = T + add - remove, with |add| = |remove| in {1, 2}. Added edges must
/// be host edges outside the tree joining tree vertices; removed edges must
/// be tree edges. Throws PreconditionError on a malformed request and
/// InvalidExchangeError when the edited edge set is not a tree on the same
/// vertex set.
ExchangeResult exchange(const Graph& g, const SubTree& t, std::span<const Edge> add,
                        std::span<const Edge> remove);

/// Adds the host edge e between two leaves. If the closed cycle runs through
/// every tree vertex the result is became_cycle; otherwise the first cycle
/// vertex (walking from e.u along the tree to e.v) of degree >= 3 in T + e
/// loses one cycle edge: the one whose other end has the larger degree in
/// T + e, ties to the smaller index.
ExchangeResult leaf_edge_reduction(const Graph& g, const SubTree& t, Edge e);

/// Removes a tailing of minimum order (first by leaf index on ties).
/// Throws NoBranchVertexError below 3 leaves.
SubTree prune_shortest_tailing(const SubTree& t);

/// T' = T + (leaf_j, mu) - (w_i, w_i*) for mu on the tailing A_i of another
/// leaf, mu != xi_i. mu = w_i gives one leaf fewer; otherwise the leaf count
/// is kept and the segments xi_i..mu^- and mu^+..w_i are reported.
ExchangeResult tailing_swap(const Graph& g, const SubTree& t, int leaf_j, int mu);

struct ReplayFailure {
    SubTree tree;
    int claim = 0;
    std::string detail;
};

/// Checks of the structural claims at maximum (k+1)-ended trees when
/// t_k <= t_{k+1} - lambda.
struct ReplayReport {
    int k = 0;
    int lambda = 0;
    int t_k = 0;
    int t_k1 = 0;
    bool precondition_held = false;
    std::size_t trees_checked = 0;
    std::size_t exchanges_checked = 0;
    bool claim1_ok = true;  ///< exactly k+1 leaves
    bool claim2_ok = true;  ///< leaf set independent
    bool claim3_ok = true;  ///< every tailing has order >= lambda
    bool claim6_ok = true;  ///< single re-hanging exchange keeps k+1 leaves, segments >= lambda
    bool claim7_ok = true;  ///< double exchange with the own leaf
    bool claim8_ok = true;  ///< double exchange with two foreign leaves
    std::vector<ReplayFailure> failures;

    bool ok() const { return failures.empty(); }
};

/// Enumerates every maximum (k+1)-ended tree (subject to the solver guard)
/// and checks the claims on each. No trees are checked when the
/// precondition fails.
ReplayReport proof_replay(const Graph& g, int k, int lambda);

} // namespace kended
