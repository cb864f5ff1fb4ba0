#include "kended/families.hpp"

#include "kended/errors.hpp"

namespace kended {
namespace {

Graph complete_graph(int q) {
    Graph g(q);
    for (int v = 1; v < q; ++v) {
        for (int u = 0; u < v; ++u) g.add_edge(u, v);
    }
    return g;
}

void expect_params(const FamilySpec& spec, std::size_t count, const char* name) {
    if (spec.params.size() != count) {
        throw ParameterError(std::string(name) + " expects " + std::to_string(count) +
                             " parameter(s)");
    }
}

void require(bool ok, const std::string& message) {
    if (!ok) throw ParameterError(message);
}

} // namespace

Graph clique_copies(int copies, int q) {
    Graph g(0);
    const Graph clique = complete_graph(q);
    for (int i = 0; i < copies; ++i) g = disjoint_union(g, clique);
    return g;
}

Graph build_family(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    switch (spec.kind) {
    case Kind::complete: {
        expect_params(spec, 1, "complete");
        require(spec.params[0] >= 1, "complete(q) requires q >= 1");
        return complete_graph(spec.params[0]);
    }
    case Kind::complete_bipartite: {
        expect_params(spec, 2, "complete-bipartite");
        const int r = spec.params[0];
        const int s = spec.params[1];
        require(r >= 1 && s >= 1, "complete-bipartite(r,s) requires r, s >= 1");
        return join(Graph(r), Graph(s));
    }
    case Kind::path: {
        expect_params(spec, 1, "path");
        const int q = spec.params[0];
        require(q >= 1, "path(q) requires q >= 1");
        Graph g(q);
        for (int v = 1; v < q; ++v) g.add_edge(v - 1, v);
        return g;
    }
    case Kind::cycle: {
        expect_params(spec, 1, "cycle");
        const int q = spec.params[0];
        require(q >= 3, "cycle(q) requires q >= 3");
        Graph g(q);
        for (int v = 0; v < q; ++v) g.add_edge(v, (v + 1) % q);
        return g;
    }
    case Kind::star: {
        expect_params(spec, 1, "star");
        require(spec.params[0] >= 1, "star(q) requires q >= 1");
        return join(Graph(1), Graph(spec.params[0]));
    }
    case Kind::join:
    case Kind::disjoint_union: {
        require(spec.parts.size() == 2, "join/union requires exactly two operands");
        const Graph a = build_family(spec.parts[0]);
        const Graph b = build_family(spec.parts[1]);
        return spec.kind == Kind::join ? join(a, b) : disjoint_union(a, b);
    }
    case Kind::g1: {
        expect_params(spec, 2, "g1");
        const int k = spec.params[0];
        const int lambda = spec.params[1];
        require(k >= 1 && lambda >= 1, "g1(k,lambda) requires k >= 1 and lambda >= 1");
        return join(clique_copies(k + 1, lambda), complete_graph(1));
    }
    case Kind::g2: {
        expect_params(spec, 2, "g2");
        const int k = spec.params[0];
        const int lambda = spec.params[1];
        require(k >= 1 && lambda >= 2, "g2(k,lambda) requires k >= 1 and lambda >= 2");
        return join(clique_copies(k + 1, lambda - 1), complete_graph(1));
    }
    case Kind::g3: {
        expect_params(spec, 1, "g3");
        const int k = spec.params[0];
        require(k >= 2, "g3(k) requires k >= 2");
        return join(clique_copies(k + 2, k - 1), complete_graph(2));
    }
    case Kind::krr: {
        expect_params(spec, 1, "krr");
        const int r = spec.params[0];
        require(r >= 1, "krr(r) requires r >= 1");
        return join(Graph(r), Graph(r));
    }
    }
    throw ParameterError("unknown family kind");
}

std::string describe(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    auto p = [&](std::size_t i) {
        return i < spec.params.size() ? std::to_string(spec.params[i]) : std::string("?");
    };
    switch (spec.kind) {
    case Kind::complete: return "complete(" + p(0) + ")";
    case Kind::complete_bipartite: return "complete-bipartite(" + p(0) + "," + p(1) + ")";
    case Kind::path: return "path(" + p(0) + ")";
    case Kind::cycle: return "cycle(" + p(0) + ")";
    case Kind::star: return "star(" + p(0) + ")";
    case Kind::join:
    case Kind::disjoint_union: {
        const std::string op = spec.kind == Kind::join ? " + " : " u ";
        if (spec.parts.size() != 2) return "(malformed)";
        return "(" + describe(spec.parts[0]) + op + describe(spec.parts[1]) + ")";
    }
    case Kind::g1: return "g1(k=" + p(0) + ",lambda=" + p(1) + ")";
    case Kind::g2: return "g2(k=" + p(0) + ",lambda=" + p(1) + ")";
    case Kind::g3: return "g3(k=" + p(0) + ")";
    case Kind::krr: return "krr(" + p(0) + ")";
    }
    return "unknown";
}

} // namespace kended
