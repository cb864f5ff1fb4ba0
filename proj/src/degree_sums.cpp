#include "kended/degree_sums.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "kended/errors.hpp"

namespace kended {

std::int64_t ExtendedCount::value() const {
    if (infinite_) throw std::logic_error("value() of an infinite count");
    return value_;
}

std::string to_string(const ExtendedCount& c) {
    return c.is_infinite() ? std::string("inf") : std::to_string(c.value());
}

namespace {

int max_independent(const Graph& g, VertexSet candidates) {
    if (candidates == 0) return 0;
    // Branch on a vertex of minimum degree within the candidates: taking it
    // or one of its candidate neighbours is always enough.
    int pick = lowest(candidates);
    int pick_deg = count(g.neighbors(pick) & candidates);
    for_each_vertex(candidates, [&](int v) {
        const int d = count(g.neighbors(v) & candidates);
        if (d < pick_deg) {
            pick = v;
            pick_deg = d;
        }
    });
    int best = 0;
    const VertexSet branch = (g.neighbors(pick) & candidates) | bit(pick);
    for_each_vertex(branch, [&](int v) {
        best = std::max(best, 1 + max_independent(g, candidates & ~g.neighbors(v) & ~bit(v)));
    });
    return best;
}

struct SigmaSearch {
    const Graph& g;
    std::vector<int> order;   // vertices by ascending degree
    std::vector<int> degree;  // degree of order[i]
    int m = 0;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();

    void run(std::size_t start, VertexSet allowed, int chosen, std::int64_t sum) {
        if (chosen == m) {
            best = std::min(best, sum);
            return;
        }
        const int needed = m - chosen;
        for (std::size_t i = start; i < order.size(); ++i) {
            // Remaining picks cost at least the next smallest degrees.
            if (order.size() - i < static_cast<std::size_t>(needed)) return;
            std::int64_t bound = sum;
            for (int j = 0; j < needed; ++j) bound += degree[i + static_cast<std::size_t>(j)];
            if (bound >= best) return;
            const int v = order[i];
            if (!contains(allowed, v)) continue;
            run(i + 1, allowed & ~g.neighbors(v), chosen + 1, sum + degree[i]);
        }
    }
};

} // namespace

int independence_number(const Graph& g) { return max_independent(g, g.vertices()); }

ExtendedCount sigma(const Graph& g, int m) {
    if (m < 1) throw ParameterError("sigma requires m >= 1");
    if (m > g.order()) return ExtendedCount::infinity();
    SigmaSearch search{g, {}, {}, m};
    search.order.resize(static_cast<std::size_t>(g.order()));
    std::iota(search.order.begin(), search.order.end(), 0);
    std::stable_sort(search.order.begin(), search.order.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    for (int v : search.order) search.degree.push_back(g.degree(v));
    search.run(0, g.vertices(), 0, 0);
    if (search.best == std::numeric_limits<std::int64_t>::max()) return ExtendedCount::infinity();
    return ExtendedCount(search.best);
}

} // namespace kended
