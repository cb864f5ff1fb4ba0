// kended: t_k profiles, theorem verification campaigns, sharpness checks,
// proof replay and graph generation from the command line.
//
// Exit status: 0 success, 1 violation or claim failure, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "kended/corpus.hpp"
#include "kended/errors.hpp"
#include "kended/families.hpp"
#include "kended/graph6.hpp"
#include "kended/harness.hpp"
#include "kended/solver.hpp"
#include "kended/transforms.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace kended;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Source {
    std::string graph6;
    std::string corpus;
    std::string family;
    int fk = 0;
    int flambda = 0;
    int fr = 0;
    int fs = 0;
    int fq = 0;
    int enumerate = 0;
    bool cumulative = false;
};

struct Options {
    Source source;
    int k = 0;
    int lambda = 0;
    int m = 0;
    int k_max = 0;
    int lambda_max = 0;
    int n = 0;
    double p = 0.5;
    std::uint64_t seed = 1;
    int count = 1;
    int jobs = 1;
    std::vector<std::string> theorems;
    std::string output;
    std::string format = "text";
    bool witness = false;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_source_options(CLI::App* cmd, Source& s, bool allow_enumerate) {
    cmd->add_option("--graph6", s.graph6, "Inline graph6 string");
    cmd->add_option("--corpus", s.corpus, "Newline-delimited graph6 file");
    cmd->add_option("--family", s.family,
                    "complete|complete_bipartite|path|cycle|star|g1|g2|g3|krr");
    cmd->add_option("--fk", s.fk, "Family parameter k");
    cmd->add_option("--flambda", s.flambda, "Family parameter lambda");
    cmd->add_option("--fr", s.fr, "Family parameter r");
    cmd->add_option("--fs", s.fs, "Family parameter s");
    cmd->add_option("--fq", s.fq, "Family parameter q");
    if (allow_enumerate) {
        cmd->add_option("--enumerate", s.enumerate, "All labeled connected graphs on N vertices")
            ->check(CLI::PositiveNumber);
        cmd->add_flag("--cumulative", s.cumulative, "With --enumerate: every order from 1 to N");
    }
}

FamilySpec family_spec(const Source& s) {
    auto need = [&](int value, const char* flag) {
        if (value <= 0) throw UsageError("--family " + s.family + " requires a positive " + flag);
        return value;
    };
    if (s.family == "complete") return FamilySpec::complete(need(s.fq, "--fq"));
    if (s.family == "complete_bipartite") {
        return FamilySpec::complete_bipartite(need(s.fr, "--fr"), need(s.fs, "--fs"));
    }
    if (s.family == "path") return FamilySpec::path(need(s.fq, "--fq"));
    if (s.family == "cycle") return FamilySpec::cycle(need(s.fq, "--fq"));
    if (s.family == "star") return FamilySpec::star(need(s.fq, "--fq"));
    if (s.family == "g1") return FamilySpec::g1(need(s.fk, "--fk"), need(s.flambda, "--flambda"));
    if (s.family == "g2") return FamilySpec::g2(need(s.fk, "--fk"), need(s.flambda, "--flambda"));
    if (s.family == "g3") return FamilySpec::g3(need(s.fk, "--fk"));
    if (s.family == "krr") return FamilySpec::krr(need(s.fr, "--fr"));
    throw UsageError("unknown family '" + s.family + "'");
}

struct Loaded {
    std::vector<Graph> graphs;
    std::string description;
};

// Precedence: --graph6, --corpus, --family, --enumerate.
Loaded load(const Source& s) {
    const int given = !s.graph6.empty() + !s.corpus.empty() + !s.family.empty() + (s.enumerate > 0);
    if (given == 0) throw UsageError("one graph source is required (--graph6, --corpus, --family, --enumerate)");
    if (given > 1) std::cerr << "kended: several graph sources given; using the first by precedence\n";
    if (!s.graph6.empty()) return {{parse_graph6(s.graph6)}, "graph6 " + s.graph6};
    if (!s.corpus.empty()) return {read_graph6_file(s.corpus), "corpus " + s.corpus};
    if (!s.family.empty()) {
        const FamilySpec spec = family_spec(s);
        return {{build_family(spec)}, "family " + describe(spec)};
    }
    Loaded out;
    const int from = s.cumulative ? 1 : s.enumerate;
    for (int n = from; n <= s.enumerate; ++n) {
        LabeledConnectedGraphs stream(n);
        while (auto g = stream.next()) out.graphs.push_back(std::move(*g));
    }
    out.description = "labeled connected graphs n=" +
                      (s.cumulative ? "1.." + std::to_string(s.enumerate) : std::to_string(s.enumerate));
    return out;
}

bool json_format(const Options& o) {
    if (o.format == "json") return true;
    if (o.format == "text") return false;
    throw UsageError("--format must be json or text");
}

void emit(const Options& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output);
    if (!out) throw Error("cannot write " + o.output);
    out << text;
}

std::string graph6_or_blank(const Graph& g) {
    return g.order() <= kGraph6MaxOrder ? write_graph6(g) : std::string();
}

Json witness_json(const TkResult& r) {
    if (const auto* c = std::get_if<Cycle>(&r.witness)) return {{"cycle", c->vertices}};
    Json edges = Json::array();
    for (const Edge& e : std::get<SubTree>(r.witness).edges()) edges.push_back({e.u, e.v});
    return {{"tree_edges", edges}};
}

std::string witness_text(const TkResult& r) {
    std::ostringstream out;
    if (const auto* c = std::get_if<Cycle>(&r.witness)) {
        out << "cycle";
        for (int v : c->vertices) out << ' ' << v;
    } else {
        out << "tree";
        for (const Edge& e : std::get<SubTree>(r.witness).edges()) out << ' ' << to_string(e);
    }
    return out.str();
}

int run_tk(const Options& o) {
    if (o.k < 1) throw UsageError("tk requires --k >= 1");
    const Loaded in = load(o.source);
    const bool json = json_format(o);
    std::ostringstream out;
    for (const Graph& g : in.graphs) {
        const TkResult r = t_k_exact(g, o.k);
        if (json) {
            Json doc{{"graph6", graph6_or_blank(g)}, {"k", r.k}, {"t_k", r.order}};
            doc["witness"] = witness_json(r);
            out << doc.dump() << '\n';
        } else {
            out << r.order;
            if (o.witness) out << '\t' << witness_text(r);
            out << '\n';
        }
    }
    emit(o, out.str());
    return 0;
}

int run_profile(const Options& o) {
    if (o.k_max < 1) throw UsageError("profile requires --kmax >= 1");
    const Loaded in = load(o.source);
    const bool json = json_format(o);
    std::ostringstream out;
    for (const Graph& g : in.graphs) {
        const std::vector<TkResult> profile = t_profile(g, o.k_max);
        std::vector<int> orders;
        for (const TkResult& r : profile) orders.push_back(r.order);
        if (json) {
            out << Json{{"graph6", graph6_or_blank(g)}, {"profile", orders}}.dump() << '\n';
        } else {
            out << '[';
            for (std::size_t i = 0; i < orders.size(); ++i) out << (i ? ", " : "") << orders[i];
            out << "]\n";
        }
    }
    emit(o, out.str());
    return 0;
}

std::vector<TheoremId> parse_theorems(const std::vector<std::string>& names) {
    std::vector<TheoremId> out;
    for (const std::string& name : names) {
        const auto id = theorem_from_string(name);
        if (!id) throw UsageError("unknown theorem '" + name + "'");
        out.push_back(*id);
    }
    return out;
}

int run_verify(const Options& o) {
    const Loaded in = load(o.source);
    InstanceRanges ranges;
    ranges.k_max = o.k_max > 0 ? o.k_max : 3;
    ranges.lambda_max = o.lambda_max > 0 ? o.lambda_max : 3;
    if (o.k > 0) ranges.k_min = ranges.k_max = o.k;
    if (o.lambda > 0) ranges.lambda_min = ranges.lambda_max = o.lambda;
    if (o.m > 0) ranges.m = o.m;
    ranges.theorems = parse_theorems(o.theorems);
    const VerificationReport report = verify_corpus(in.graphs, in.description, ranges, o.jobs);
    emit(o, render_report(report, json_format(o) ? ReportFormat::json : ReportFormat::text));
    return report.ok() ? 0 : kExitViolation;
}

int run_sharpness(const Options& o) {
    const int k_max = o.k_max > 0 ? o.k_max : 3;
    const int lambda_max = o.lambda_max > 0 ? o.lambda_max : 3;
    const VerificationReport report = sharpness_suite(1, k_max, 1, lambda_max, solver_size_guard());
    emit(o, render_report(report, json_format(o) ? ReportFormat::json : ReportFormat::text));
    return report.ok() ? 0 : kExitViolation;
}

int run_replay(const Options& o) {
    if (o.k < 1 || o.lambda < 1) throw UsageError("replay requires --k >= 1 and --lambda >= 1");
    const Loaded in = load(o.source);
    const bool json = json_format(o);
    std::ostringstream out;
    bool ok = true;
    for (const Graph& g : in.graphs) {
        const ReplayReport r = proof_replay(g, o.k, o.lambda);
        ok = ok && r.ok();
        if (json) {
            Json failures = Json::array();
            for (const ReplayFailure& f : r.failures) {
                Json edges = Json::array();
                for (const Edge& e : f.tree.edges()) edges.push_back({e.u, e.v});
                failures.push_back({{"claim", f.claim}, {"detail", f.detail}, {"tree_edges", edges}});
            }
            out << Json{{"graph6", graph6_or_blank(g)},
                        {"k", r.k},
                        {"lambda", r.lambda},
                        {"t_k", r.t_k},
                        {"t_k1", r.t_k1},
                        {"precondition_held", r.precondition_held},
                        {"trees_checked", r.trees_checked},
                        {"exchanges_checked", r.exchanges_checked},
                        {"claims",
                         {{"1", r.claim1_ok}, {"2", r.claim2_ok}, {"3", r.claim3_ok},
                          {"6", r.claim6_ok}, {"7", r.claim7_ok}, {"8", r.claim8_ok}}},
                        {"failures", failures}}
                       .dump()
                << '\n';
        } else {
            out << graph6_or_blank(g) << ": t_k=" << r.t_k << " t_k1=" << r.t_k1;
            if (!r.precondition_held) {
                out << " precondition does not hold\n";
                continue;
            }
            out << " trees=" << r.trees_checked << " exchanges=" << r.exchanges_checked << ' '
                << (r.ok() ? "ok" : "FAILED") << '\n';
            for (const ReplayFailure& f : r.failures) out << "  claim " << f.claim << ": " << f.detail << '\n';
        }
    }
    emit(o, out.str());
    return ok ? 0 : kExitViolation;
}

int run_gen(const Options& o) {
    std::ostringstream out;
    const Source& s = o.source;
    if (s.graph6.empty() && s.corpus.empty() && s.family.empty() && s.enumerate == 0) {
        if (o.n < 1) throw UsageError("gen needs a graph source or --n for random graphs");
        if (o.count < 1) throw UsageError("--count must be positive");
        for (int i = 0; i < o.count; ++i) {
            out << write_graph6(random_connected(o.n, o.p, o.seed + static_cast<std::uint64_t>(i))) << '\n';
        }
    } else {
        for (const Graph& g : load(s).graphs) out << write_graph6(g) << '\n';
    }
    emit(o, out.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Relative orders of largest k-ended trees: exact solver and verification harness"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* cmd) {
        cmd->add_option("--output", o.output, "Write to this path instead of standard output");
        cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    };
    auto positive = CLI::PositiveNumber;

    CLI::App* tk = app.add_subcommand("tk", "Exact t_k with witness");
    add_source_options(tk, o.source, true);
    tk->add_option("--k", o.k, "Leaf bound k")->required()->check(positive);
    tk->add_flag("--witness", o.witness, "Print the witness in text mode");
    common(tk);

    CLI::App* profile = app.add_subcommand("profile", "t_1 .. t_kmax");
    add_source_options(profile, o.source, true);
    profile->add_option("--kmax", o.k_max, "Largest k")->required()->check(positive);
    common(profile);

    CLI::App* verify = app.add_subcommand("verify", "Evaluate the theorem predicates on a corpus");
    add_source_options(verify, o.source, true);
    verify->add_option("--k", o.k, "Only this k")->check(positive);
    verify->add_option("--lambda", o.lambda, "Only this lambda")->check(positive);
    verify->add_option("--m", o.m, "Only this m")->check(positive);
    verify->add_option("--kmax", o.k_max, "Largest k (default 3)")->check(positive);
    verify->add_option("--lmax", o.lambda_max, "Largest lambda (default 3)")->check(positive);
    verify->add_option("--theorem", o.theorems, "Restrict to these ids (prop1, thm3, cor11, ...)");
    verify->add_option("--jobs", o.jobs, "Worker threads")->check(positive);
    common(verify);

    CLI::App* sharp = app.add_subcommand("sharpness", "Equalities on the extremal families");
    sharp->add_option("--kmax", o.k_max, "Largest k (default 3)")->check(positive);
    sharp->add_option("--lmax", o.lambda_max, "Largest lambda (default 3)")->check(positive);
    common(sharp);

    CLI::App* replay = app.add_subcommand("replay", "Check the structural claims at maximum trees");
    add_source_options(replay, o.source, true);
    replay->add_option("--k", o.k, "k")->required()->check(positive);
    replay->add_option("--lambda", o.lambda, "lambda")->required()->check(positive);
    common(replay);

    CLI::App* gen = app.add_subcommand("gen", "Write graphs as graph6 lines");
    add_source_options(gen, o.source, true);
    gen->add_option("--n", o.n, "Order of random connected graphs")->check(positive);
    gen->add_option("--p", o.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", o.seed, "Random seed");
    gen->add_option("--count", o.count, "Number of random graphs")->check(positive);
    common(gen);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*tk) return run_tk(o);
        if (*profile) return run_profile(o);
        if (*verify) return run_verify(o);
        if (*sharp) return run_sharpness(o);
        if (*replay) return run_replay(o);
        if (*gen) return run_gen(o);
    } catch (const UsageError& e) {
        std::cerr << "kended: " << e.what() << '\n';
        return kExitUsage;
    } catch (const kended::Error& e) {
        std::cerr << "kended: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
