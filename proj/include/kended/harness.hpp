#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kended/extended_count.hpp"
#include "kended/graph.hpp"
#include "kended/solver.hpp"

namespace kended {

enum class TheoremId {
    prop1, prop2, thm1, thm2, thm3,
    cor1, cor2, cor3, cor4, cor5, cor6, cor7, cor8, cor9, cor10,
    cor11, cor12, cor13, cor14, cor15, cor16, cor17, cor18, cor19, cor20,
};

std::string to_string(TheoremId id);
/// Accepts the names produced by to_string ("prop1", "thm3", "cor11", ...).
std::optional<TheoremId> theorem_from_string(std::string_view name);
std::vector<TheoremId> all_theorems();

/// Parameters not used by a theorem are 0.
struct TheoremInstance {
    TheoremId theorem = TheoremId::thm3;
    int k = 0;
    int lambda = 0;
    int m = 0;

    friend bool operator==(const TheoremInstance&, const TheoremInstance&) = default;
};

/// Fills the parameters a corollary fixes, zeroes unused ones and checks the
/// ranges. Throws InstanceError on an invalid combination, including a given
/// value that contradicts a fixed one.
TheoremInstance normalize(TheoremInstance inst);

/// The theorem instance whose condition a corollary's condition implies
/// (thm1 for cor1, thm3 otherwise); empty for cor2
/// and for non-corollaries.
std::optional<TheoremInstance> corollary_parent(const TheoremInstance& inst);

struct CheckOutcome {
    bool condition_holds = false;
    bool conclusion_holds = false;  ///< meaningful only when condition_holds
    bool vacuous = true;
    int t_k = 0;
    int t_k1 = 0;
    std::optional<ExtendedCount> sigma_m;  ///< set when the instance uses sigma
    int n = 0;

    bool violation() const { return condition_holds && !conclusion_holds; }
};

/// Cached per-graph quantities shared by all instances on one graph.
class GraphFacts {
public:
    /// Requires a connected graph within the solver guard.
    explicit GraphFacts(const Graph& g);

    const Graph& graph() const { return table_.graph(); }
    int n() const { return table_.graph().order(); }
    /// t_k with the cycle convention at k = 1.
    int t(int k);
    ExtendedCount sigma(int m);
    bool has_dominating(int k);
    /// Whether every largest k-ended tree (longest cycle at k = 1) dominates.
    bool largest_all_dominating(int k);

private:
    LeafTable table_;
    std::optional<int> circumference_;
    std::map<int, ExtendedCount> sigma_;
    std::map<int, bool> dominating_;
    std::map<int, bool> largest_dominating_;
};

/// Evaluates one normalized instance.
CheckOutcome check_instance(GraphFacts& facts, const TheoremInstance& inst);
/// Normalizes inst, then evaluates it on g.
CheckOutcome check_instance(const Graph& g, const TheoremInstance& inst);

struct InstanceRanges {
    int k_min = 1;
    int k_max = 3;
    int lambda_min = 1;
    int lambda_max = 3;
    std::optional<int> m;            ///< restrict to one m where m applies
    std::vector<TheoremId> theorems; ///< empty means all
};

/// Every valid normalized instance whose parameters fall in the ranges,
/// without duplicates, in theorem order then k, lambda, m.
std::vector<TheoremInstance> enumerate_instances(const InstanceRanges& ranges);

struct Violation {
    std::string graph6;
    TheoremInstance instance;
    CheckOutcome outcome;
};

struct SharpnessEntry {
    std::string family;  ///< g1, g2, g3 or krr
    std::string graph;   ///< human-readable family description
    int k = 0;
    int lambda = 0;
    int m = 0;
    int n = 0;
    std::string assertion;
    /// "confirmed", "failed" or "skipped" (order above max_order).
    std::string status;
    std::optional<int> t_k;
    std::optional<int> t_k1;
    std::optional<ExtendedCount> sigma_m;
};

inline constexpr std::size_t kMaxListedViolations = 100;

struct VerificationReport {
    std::string corpus;
    std::size_t graphs = 0;
    std::size_t skipped = 0;
    std::size_t instances = 0;
    std::size_t non_vacuous = 0;
    std::size_t violation_count = 0;
    std::vector<Violation> violations;  ///< first kMaxListedViolations, by graph6
    std::vector<SharpnessEntry> sharpness;
    std::int64_t elapsed_ms = 0;

    bool ok() const;
};

/// Evaluates every instance in `ranges` on every graph. Disconnected graphs
/// and graphs above the solver guard are skipped and counted. The result is
/// independent of `jobs`.
VerificationReport verify_corpus(std::span<const Graph> corpus, const std::string& description,
                                 const InstanceRanges& ranges, int jobs = 1);

/// Equalities of the extremal families for k, lambda in the given ranges and
/// every m in 1..min(k, lambda)+1. Families with more than max_order vertices
/// are reported as skipped.
VerificationReport sharpness_suite(int k_min, int k_max, int lambda_min, int lambda_max,
                                   int max_order);

enum class ReportFormat { json, text };

/// Deterministic apart from elapsed_ms.
std::string render_report(const VerificationReport& report, ReportFormat format);

} // namespace kended
