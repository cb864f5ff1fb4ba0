#pragma once

#include <cstdint>
#include <optional>

#include "kended/graph.hpp"

namespace kended {

inline constexpr int kDefaultEnumerationLimit = 7;

/// Streams every labeled connected graph on n vertices exactly once, in
/// increasing order of the graph6 bit string read as a binary number.
/// Single consumer; independent instances may run concurrently.
class LabeledConnectedGraphs {
public:
    /// Throws SizeError when n > max_n (the explosion guard) and
    /// ParameterError when n < 1.
    explicit LabeledConnectedGraphs(int n, int max_n = kDefaultEnumerationLimit);

    std::optional<Graph> next();

    int order() const { return n_; }

private:
    int n_;
    int pairs_;
    std::uint64_t next_mask_ = 0;
    std::uint64_t end_mask_;
};

/// Erdos-Renyi G(n, p) draw (not conditioned on connectivity).
/// Deterministic for fixed (n, p, seed) on every platform.
Graph random_graph(int n, double p, std::uint64_t seed);

/// G(n, p) conditioned on connectivity by rejection. Throws SamplingError
/// after `max_draws` disconnected draws.
Graph random_connected(int n, double p, std::uint64_t seed, int max_draws = 10000);

} // namespace kended
