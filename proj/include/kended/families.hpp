#pragma once

#include <string>
#include <vector>

#include "kended/graph.hpp"

namespace kended {

/// Description of a named graph family instance. Composite kinds (join,
/// disjoint union) hold their operands in `parts`.
struct FamilySpec {
    enum class Kind {
        complete,           // K_q
        complete_bipartite, // K_{r,s}
        path,               // P_q
        cycle,              // C_q, q >= 3
        star,               // K_{1,q}
        join,               // A + B
        disjoint_union,     // A u B
        g1,                 // (k+1)K_lambda + K_1
        g2,                 // (k+1)K_{lambda-1} + K_1
        g3,                 // (k+2)K_{k-1} + K_2
        krr,                // K_{r,r}
    };

    Kind kind = Kind::complete;
    std::vector<int> params;
    std::vector<FamilySpec> parts;

    static FamilySpec complete(int q) { return {Kind::complete, {q}, {}}; }
    static FamilySpec complete_bipartite(int r, int s) { return {Kind::complete_bipartite, {r, s}, {}}; }
    static FamilySpec path(int q) { return {Kind::path, {q}, {}}; }
    static FamilySpec cycle(int q) { return {Kind::cycle, {q}, {}}; }
    static FamilySpec star(int q) { return {Kind::star, {q}, {}}; }
    static FamilySpec join(FamilySpec a, FamilySpec b) { return {Kind::join, {}, {std::move(a), std::move(b)}}; }
    static FamilySpec disjoint_union(FamilySpec a, FamilySpec b) {
        return {Kind::disjoint_union, {}, {std::move(a), std::move(b)}};
    }
    static FamilySpec g1(int k, int lambda) { return {Kind::g1, {k, lambda}, {}}; }
    static FamilySpec g2(int k, int lambda) { return {Kind::g2, {k, lambda}, {}}; }
    static FamilySpec g3(int k) { return {Kind::g3, {k}, {}}; }
    static FamilySpec krr(int r) { return {Kind::krr, {r}, {}}; }
};

/// Builds the graph described by spec. For join and the g-families the left
/// operand's vertices come first, so the K_1 centre of g1/g2 is the last vertex.
/// Throws ParameterError for malformed parameters.
Graph build_family(const FamilySpec& spec);

/// Human readable name such as "g1(k=2,lambda=2)".
std::string describe(const FamilySpec& spec);

/// copies * K_q as a disjoint union.
Graph clique_copies(int copies, int q);

} // namespace kended
