#include "kended/corpus.hpp"

#include <random>

#include "kended/errors.hpp"

namespace kended {
namespace {

// Pairs in graph6 column order: (0,1), (0,2), (1,2), (0,3), ...
// Bit i of the mask (counting from the most significant pair) is pair i.
Graph from_pair_mask(int n, int pairs, std::uint64_t mask) {
    Graph g(n);
    int index = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++index) {
            if ((mask >> (pairs - 1 - index)) & 1U) g.add_edge(u, v);
        }
    }
    return g;
}

double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Graph draw(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (unit_draw(rng) < p) g.add_edge(u, v);
        }
    }
    return g;
}

void check_probability(double p) {
    if (!(p > 0.0 && p <= 1.0)) throw ParameterError("edge probability must lie in (0, 1]");
}

} // namespace

LabeledConnectedGraphs::LabeledConnectedGraphs(int n, int max_n) : n_(n) {
    if (n < 1) throw ParameterError("enumeration requires n >= 1");
    if (n > max_n) {
        throw SizeError("enumeration of n=" + std::to_string(n) + " exceeds the guard of " +
                        std::to_string(max_n));
    }
    if (n > 11) throw SizeError("labeled enumeration beyond n=11 does not fit a 64-bit mask");
    pairs_ = n * (n - 1) / 2;
    end_mask_ = std::uint64_t{1} << pairs_;
}

std::optional<Graph> LabeledConnectedGraphs::next() {
    while (next_mask_ < end_mask_) {
        Graph g = from_pair_mask(n_, pairs_, next_mask_++);
        if (g.is_connected()) return g;
    }
    return std::nullopt;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    check_probability(p);
    if (n < 0) throw ParameterError("graph order must be non-negative");
    std::mt19937_64 rng(seed);
    return draw(n, p, rng);
}

Graph random_connected(int n, double p, std::uint64_t seed, int max_draws) {
    check_probability(p);
    if (n < 1) throw ParameterError("random_connected requires n >= 1");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < max_draws; ++attempt) {
        Graph g = draw(n, p, rng);
        if (g.is_connected()) return g;
    }
    throw SamplingError("no connected G(" + std::to_string(n) + ", " + std::to_string(p) +
                        ") draw in " + std::to_string(max_draws) + " attempts; try a larger p");
}

} // namespace kended
