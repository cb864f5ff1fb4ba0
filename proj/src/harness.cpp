#include "kended/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <thread>
#include <tuple>

#include "kended/degree_sums.hpp"
#include "kended/errors.hpp"
#include "kended/families.hpp"
#include "kended/graph6.hpp"

namespace kended {
namespace {

constexpr std::array<std::string_view, 25> kNames = {
    "prop1", "prop2", "thm1",  "thm2",  "thm3",  "cor1",  "cor2",  "cor3",  "cor4",
    "cor5",  "cor6",  "cor7",  "cor8",  "cor9",  "cor10", "cor11", "cor12", "cor13",
    "cor14", "cor15", "cor16", "cor17", "cor18", "cor19", "cor20",
};

// Which of (k, lambda, m) the caller chooses; the rest are fixed or unused.
int free_params(TheoremId id) {
    using T = TheoremId;
    const int k = 1, l = 2, m = 4;
    switch (id) {
    case T::prop1: case T::prop2: case T::cor2: return k;
    case T::thm1: case T::cor1: return k | l;
    case T::thm2: case T::thm3: case T::cor3: return k | l | m;
    case T::cor4: case T::cor6: case T::cor7: case T::cor8: case T::cor9: return k;
    case T::cor5: case T::cor16: return k | l;
    case T::cor17: case T::cor18: return k;
    default: return 0;
    }
}

void fix(int& slot, int value, const char* name, TheoremId id) {
    if (slot != 0 && slot != value) {
        throw InstanceError(to_string(id) + " fixes " + name + " = " + std::to_string(value));
    }
    slot = value;
}

[[noreturn]] void invalid(const TheoremInstance& inst, const std::string& why) {
    throw InstanceError(to_string(inst.theorem) + " (k=" + std::to_string(inst.k) + ", lambda=" +
                        std::to_string(inst.lambda) + ", m=" + std::to_string(inst.m) +
                        "): " + why);
}

// Conclusion shared by Theorems 1 and 3 and most corollaries.
bool relative_bound(int t_k, int t_k1, int lambda) { return t_k >= t_k1 - lambda + 1; }

} // namespace

std::string to_string(TheoremId id) { return std::string(kNames[static_cast<std::size_t>(id)]); }

std::optional<TheoremId> theorem_from_string(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == name) return static_cast<TheoremId>(i);
    }
    return std::nullopt;
}

std::vector<TheoremId> all_theorems() {
    std::vector<TheoremId> out;
    for (std::size_t i = 0; i < kNames.size(); ++i) out.push_back(static_cast<TheoremId>(i));
    return out;
}

TheoremInstance normalize(TheoremInstance inst) {
    using T = TheoremId;
    switch (inst.theorem) {
    case T::prop1: case T::prop2: case T::cor2:
        inst.lambda = 0;
        inst.m = 0;
        break;
    case T::thm1: case T::cor1:
        inst.m = 0;
        break;
    case T::thm2: case T::thm3: case T::cor3:
        break;
    case T::cor4:
        fix(inst.lambda, inst.k, "lambda", inst.theorem);
        fix(inst.m, inst.k + 1, "m", inst.theorem);
        break;
    case T::cor5:
        fix(inst.m, 2, "m", inst.theorem);
        break;
    case T::cor6: case T::cor7:
        fix(inst.lambda, 1, "lambda", inst.theorem);
        fix(inst.m, 2, "m", inst.theorem);
        break;
    case T::cor8: case T::cor9:
        fix(inst.lambda, 2, "lambda", inst.theorem);
        fix(inst.m, 2, "m", inst.theorem);
        break;
    case T::cor10: case T::cor11:
        fix(inst.k, 1, "k", inst.theorem);
        fix(inst.lambda, 1, "lambda", inst.theorem);
        fix(inst.m, 2, "m", inst.theorem);
        break;
    case T::cor12: case T::cor13:
        fix(inst.k, 2, "k", inst.theorem);
        fix(inst.lambda, 1, "lambda", inst.theorem);
        fix(inst.m, 2, "m", inst.theorem);
        break;
    case T::cor14: case T::cor15:
        fix(inst.k, 2, "k", inst.theorem);
        fix(inst.lambda, 2, "lambda", inst.theorem);
        fix(inst.m, 2, "m", inst.theorem);
        break;
    case T::cor16:
        fix(inst.m, 3, "m", inst.theorem);
        break;
    case T::cor17: case T::cor18:
        fix(inst.lambda, 2, "lambda", inst.theorem);
        fix(inst.m, 3, "m", inst.theorem);
        break;
    case T::cor19: case T::cor20:
        fix(inst.k, 2, "k", inst.theorem);
        fix(inst.lambda, 2, "lambda", inst.theorem);
        fix(inst.m, 3, "m", inst.theorem);
        break;
    }

    if (inst.k < 1) invalid(inst, "k must be positive");
    const bool uses_lambda = inst.lambda != 0 || (free_params(inst.theorem) & 2) != 0;
    if (uses_lambda && inst.lambda < 1) invalid(inst, "lambda must be positive");
    switch (inst.theorem) {
    case T::thm1: case T::cor1: case T::cor2: case T::cor17: case T::cor18:
        if (inst.k < 2) invalid(inst, "requires k >= 2");
        break;
    case T::cor16:
        if (inst.k < 2 || inst.lambda < 2) invalid(inst, "requires k >= 2 and lambda >= 2");
        break;
    default:
        break;
    }
    if (inst.m != 0 || (free_params(inst.theorem) & 4) != 0) {
        const int upper = std::min(inst.k, inst.lambda) + 1;
        const int lower = inst.theorem == T::thm2 ? 2 : 1;
        if (inst.m < lower || inst.m > upper) {
            invalid(inst, "m must lie in " + std::to_string(lower) + ".." + std::to_string(upper));
        }
    }
    return inst;
}

std::optional<TheoremInstance> corollary_parent(const TheoremInstance& inst) {
    using T = TheoremId;
    switch (inst.theorem) {
    case T::prop1: case T::prop2: case T::thm1: case T::thm2: case T::thm3: case T::cor2:
        return std::nullopt;
    case T::cor1:
        return TheoremInstance{T::thm1, inst.k, inst.lambda, 0};
    default:
        return TheoremInstance{T::thm3, inst.k, inst.lambda, inst.m};
    }
}

GraphFacts::GraphFacts(const Graph& g) : table_((require_connected(g), require_within_guard(g), g)) {}

int GraphFacts::t(int k) {
    if (k < 1) throw ParameterError("t_k needs k >= 1");
    if (k > 1) return table_.largest_order(k);
    if (!circumference_) circumference_ = longest_cycle(graph()).order();
    return *circumference_;
}

ExtendedCount GraphFacts::sigma(int m) {
    auto it = sigma_.find(m);
    if (it == sigma_.end()) it = sigma_.emplace(m, kended::sigma(graph(), m)).first;
    return it->second;
}

bool GraphFacts::has_dominating(int k) {
    auto it = dominating_.find(k);
    if (it == dominating_.end()) it = dominating_.emplace(k, has_dominating_k_ended(table_, k)).first;
    return it->second;
}

bool GraphFacts::largest_all_dominating(int k) {
    auto it = largest_dominating_.find(k);
    if (it != largest_dominating_.end()) return it->second;
    bool all = true;
    if (k == 1) {
        for (VertexSet s : longest_cycle_vertex_sets(graph())) all = all && is_dominating(graph(), s);
    } else {
        table_.for_each_largest_set(k, [&](VertexSet s) { all = all && is_dominating(graph(), s); });
    }
    largest_dominating_.emplace(k, all);
    return all;
}

CheckOutcome check_instance(GraphFacts& facts, const TheoremInstance& inst) {
    using T = TheoremId;
    CheckOutcome out;
    const int k = inst.k;
    const int lambda = inst.lambda;
    const int n = facts.n();
    out.n = n;
    out.t_k = facts.t(k);
    out.t_k1 = facts.t(k + 1);
    const int t_k = out.t_k;
    const int t_k1 = out.t_k1;

    switch (inst.theorem) {
    case T::prop1:
        out.condition_holds = true;
        out.conclusion_holds = (t_k == n) == (t_k == t_k1);
        break;
    case T::prop2:
        out.condition_holds = t_k >= t_k1 - 1;
        out.conclusion_holds = !out.condition_holds || facts.largest_all_dominating(k);
        break;
    case T::thm1:
        out.condition_holds = lambda * (k + 1) >= t_k1;
        out.conclusion_holds = relative_bound(t_k, t_k1, lambda);
        break;
    case T::cor1:
        out.condition_holds = lambda * (k + 1) >= n;
        out.conclusion_holds = relative_bound(t_k, t_k1, lambda);
        break;
    case T::cor2:
        out.condition_holds = true;
        out.conclusion_holds = (k + 1) * t_k >= k * t_k1 + 1;
        break;
    case T::thm2: {
        const ExtendedCount s = facts.sigma(inst.m);
        out.sigma_m = s;
        out.condition_holds = true;
        const bool first = s.is_finite() && ExtendedCount(t_k1) >= s + (lambda * (k - inst.m + 1) + 1);
        out.conclusion_holds = first || relative_bound(t_k, t_k1, lambda);
        break;
    }
    default: {
        // Degree-sum conditions: sigma_m >= base - lambda(k - m + 1), with
        // base = n for the "n" corollaries and t_{k+1} otherwise.
        const ExtendedCount s = facts.sigma(inst.m);
        out.sigma_m = s;
        const bool uses_n = inst.theorem == T::cor3 || inst.theorem == T::cor7 ||
                            inst.theorem == T::cor9 || inst.theorem == T::cor11 ||
                            inst.theorem == T::cor13 || inst.theorem == T::cor15 ||
                            inst.theorem == T::cor18 || inst.theorem == T::cor20;
        const int base = uses_n ? n : t_k1;
        out.condition_holds = s >= static_cast<std::int64_t>(base - lambda * (k - inst.m + 1));
        switch (inst.theorem) {
        case T::cor7: case T::cor11: case T::cor13:
            out.conclusion_holds = t_k == n;
            break;
        case T::cor9: case T::cor15: case T::cor18: case T::cor20:
            out.conclusion_holds = !out.condition_holds || facts.has_dominating(k);
            break;
        default:
            out.conclusion_holds = relative_bound(t_k, t_k1, lambda);
            break;
        }
        break;
    }
    }
    out.vacuous = !out.condition_holds;
    return out;
}

CheckOutcome check_instance(const Graph& g, const TheoremInstance& inst) {
    const TheoremInstance normalized = normalize(inst);
    GraphFacts facts(g);
    return check_instance(facts, normalized);
}

std::vector<TheoremInstance> enumerate_instances(const InstanceRanges& ranges) {
    std::vector<TheoremId> theorems = ranges.theorems.empty() ? all_theorems() : ranges.theorems;
    std::sort(theorems.begin(), theorems.end());
    theorems.erase(std::unique(theorems.begin(), theorems.end()), theorems.end());

    std::vector<TheoremInstance> out;
    for (TheoremId id : theorems) {
        const int free = free_params(id);
        const int k_lo = (free & 1) ? ranges.k_min : 0;
        const int k_hi = (free & 1) ? ranges.k_max : 0;
        const int l_lo = (free & 2) ? ranges.lambda_min : 0;
        const int l_hi = (free & 2) ? ranges.lambda_max : 0;
        for (int k = k_lo; k <= k_hi; ++k) {
            for (int lambda = l_lo; lambda <= l_hi; ++lambda) {
                const int m_hi = (free & 4) ? std::min(k, lambda) + 1 : 0;
                for (int m = 0; m <= m_hi; ++m) {
                    if ((free & 4) && m == 0) continue;
                    TheoremInstance inst;
                    try {
                        inst = normalize({id, k, lambda, m});
                    } catch (const InstanceError&) {
                        continue;
                    }
                    if (inst.k < ranges.k_min || inst.k > ranges.k_max) continue;
                    if (inst.lambda != 0 &&
                        (inst.lambda < ranges.lambda_min || inst.lambda > ranges.lambda_max)) {
                        continue;
                    }
                    if (ranges.m && inst.m != 0 && inst.m != *ranges.m) continue;
                    if (std::find(out.begin(), out.end(), inst) == out.end()) out.push_back(inst);
                }
            }
        }
    }
    return out;
}

bool VerificationReport::ok() const {
    if (violation_count != 0) return false;
    return std::all_of(sharpness.begin(), sharpness.end(),
                       [](const SharpnessEntry& e) { return e.status != "failed"; });
}

namespace {

struct Partial {
    std::size_t graphs = 0;
    std::size_t disconnected = 0;
    std::size_t oversized = 0;
    std::size_t instances = 0;
    std::size_t non_vacuous = 0;
    std::vector<Violation> violations;
};

void verify_one(const Graph& g, std::span<const TheoremInstance> instances, Partial& out) {
    if (g.order() < 1 || !g.is_connected()) {
        ++out.disconnected;
        return;
    }
    if (g.order() > solver_size_guard()) {
        ++out.oversized;
        return;
    }
    ++out.graphs;
    GraphFacts facts(g);
    std::string code;
    for (const TheoremInstance& inst : instances) {
        const CheckOutcome outcome = check_instance(facts, inst);
        ++out.instances;
        if (outcome.condition_holds) ++out.non_vacuous;
        if (outcome.violation()) {
            if (code.empty()) code = write_graph6(g);
            out.violations.push_back({code, inst, outcome});
        }
    }
}

auto violation_key(const Violation& v) {
    return std::make_tuple(std::cref(v.graph6), v.instance.theorem, v.instance.k, v.instance.lambda,
                           v.instance.m);
}

} // namespace

VerificationReport verify_corpus(std::span<const Graph> corpus, const std::string& description,
                                 const InstanceRanges& ranges, int jobs) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<TheoremInstance> instances = enumerate_instances(ranges);
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(corpus.size())));
    std::vector<Partial> partials(static_cast<std::size_t>(workers));
    std::atomic<std::size_t> next{0};
    auto work = [&](Partial& part) {
        for (std::size_t i = next++; i < corpus.size(); i = next++) verify_one(corpus[i], instances, part);
    };
    if (workers == 1) {
        work(partials.front());
    } else {
        std::vector<std::jthread> pool;
        for (auto& part : partials) pool.emplace_back([&work, &part] { work(part); });
    }

    Partial total;
    for (Partial& part : partials) {
        total.graphs += part.graphs;
        total.disconnected += part.disconnected;
        total.oversized += part.oversized;
        total.instances += part.instances;
        total.non_vacuous += part.non_vacuous;
        std::move(part.violations.begin(), part.violations.end(), std::back_inserter(total.violations));
    }
    std::sort(total.violations.begin(), total.violations.end(),
              [](const Violation& a, const Violation& b) { return violation_key(a) < violation_key(b); });

    VerificationReport report;
    report.graphs = total.graphs;
    report.skipped = total.disconnected + total.oversized;
    report.instances = total.instances;
    report.non_vacuous = total.non_vacuous;
    report.violation_count = total.violations.size();
    if (total.violations.size() > kMaxListedViolations) total.violations.resize(kMaxListedViolations);
    report.violations = std::move(total.violations);
    report.corpus = description + "; graphs=" + std::to_string(report.graphs) +
                    " skipped=" + std::to_string(report.skipped) + " (disconnected=" +
                    std::to_string(total.disconnected) + " oversized=" +
                    std::to_string(total.oversized) + ") non_vacuous=" +
                    std::to_string(report.non_vacuous);
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

namespace {

SharpnessEntry sharpness_entry(const std::string& family, const FamilySpec& spec, int k, int lambda,
                               int m, std::string assertion) {
    SharpnessEntry e;
    e.family = family;
    e.graph = describe(spec);
    e.k = k;
    e.lambda = lambda;
    e.m = m;
    e.assertion = std::move(assertion);
    return e;
}

// Fills values and the status; `holds` decides confirmed/failed.
template <typename Check>
void evaluate(SharpnessEntry& e, const FamilySpec& spec, int max_order, Check holds) {
    const Graph g = build_family(spec);
    e.n = g.order();
    if (g.order() > max_order || g.order() > kExactCapacity) {
        e.status = "skipped";
        return;
    }
    const LeafTable table(g);
    e.t_k = e.k == 1 ? longest_cycle(g).order() : table.largest_order(e.k);
    e.t_k1 = table.largest_order(e.k + 1);
    e.sigma_m = sigma(g, e.m);
    e.status = holds(*e.t_k, *e.t_k1, *e.sigma_m) ? "confirmed" : "failed";
}

} // namespace

VerificationReport sharpness_suite(int k_min, int k_max, int lambda_min, int lambda_max,
                                   int max_order) {
    if (k_min < 1 || lambda_min < 1 || k_max < k_min || lambda_max < lambda_min) {
        throw ParameterError("sharpness ranges must be nonempty and positive");
    }
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.corpus = "sharpness families k=" + std::to_string(k_min) + ".." + std::to_string(k_max) +
                    " lambda=" + std::to_string(lambda_min) + ".." + std::to_string(lambda_max) +
                    " max_order=" + std::to_string(max_order);
    for (int k = k_min; k <= k_max; ++k) {
        for (int lambda = lambda_min; lambda <= lambda_max; ++lambda) {
            for (int m = 1; m <= std::min(k, lambda) + 1; ++m) {
                const int slack = lambda * (k - m + 1);
                {
                    const FamilySpec spec = FamilySpec::g1(k, lambda);
                    SharpnessEntry e = sharpness_entry(
                        "g1", spec, k, lambda, m,
                        "sigma_m = t_k1 - lambda(k-m+1) - 1 and t_k = t_k1 - lambda");
                    evaluate(e, spec, max_order, [&](int t_k, int t_k1, ExtendedCount s) {
                        return s == static_cast<std::int64_t>(t_k1 - slack - 1) && t_k == t_k1 - lambda;
                    });
                    report.sharpness.push_back(std::move(e));
                }
                if (lambda >= 2 && m <= k) {
                    const FamilySpec spec = FamilySpec::g2(k, lambda);
                    SharpnessEntry e = sharpness_entry(
                        "g2", spec, k, lambda, m,
                        "sigma_m >= t_k1 - lambda(k-m+1) and t_k = t_k1 - lambda + 1");
                    evaluate(e, spec, max_order, [&](int t_k, int t_k1, ExtendedCount s) {
                        return s >= static_cast<std::int64_t>(t_k1 - slack) && t_k == t_k1 - lambda + 1;
                    });
                    report.sharpness.push_back(std::move(e));
                }
                if (m == k + 1 && lambda == k) {
                    const auto tight = [&](int t_k, int t_k1, ExtendedCount s) {
                        return s >= static_cast<std::int64_t>(t_k1) && t_k == t_k1 - k + 1;
                    };
                    if (k >= 2) {
                        const FamilySpec spec = FamilySpec::g3(k);
                        SharpnessEntry e = sharpness_entry(
                            "g3", spec, k, lambda, m,
                            "sigma_m >= t_k1 and t_k = t_k1 - lambda + 1");
                        evaluate(e, spec, max_order, tight);
                        report.sharpness.push_back(std::move(e));
                    } else {
                        for (int r = 2; r <= 4; ++r) {
                            const FamilySpec spec = FamilySpec::krr(r);
                            SharpnessEntry e = sharpness_entry(
                                "krr", spec, k, lambda, m,
                                "sigma_m >= t_k1 and t_1 = t_2 = 2r");
                            evaluate(e, spec, max_order, [&](int t_k, int t_k1, ExtendedCount s) {
                                return tight(t_k, t_k1, s) && t_k == 2 * r && t_k1 == 2 * r;
                            });
                            report.sharpness.push_back(std::move(e));
                        }
                    }
                }
            }
        }
    }
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

} // namespace kended
