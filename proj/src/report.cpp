#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "kended/harness.hpp"

namespace kended {
namespace {

using Json = nlohmann::ordered_json;

Json optional_int(int v) { return v == 0 ? Json(nullptr) : Json(v); }

Json count_json(const std::optional<ExtendedCount>& c) {
    if (!c) return nullptr;
    if (c->is_infinite()) return "inf";
    return c->value();
}

template <typename T>
Json maybe(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

std::string text_count(const std::optional<ExtendedCount>& c) { return c ? to_string(*c) : "-"; }

std::string text_int(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

Json to_json(const VerificationReport& r) {
    Json violations = Json::array();
    for (const Violation& v : r.violations) {
        violations.push_back({
            {"graph6", v.graph6},
            {"theorem", to_string(v.instance.theorem)},
            {"k", v.instance.k},
            {"lambda", optional_int(v.instance.lambda)},
            {"m", optional_int(v.instance.m)},
            {"t_k", v.outcome.t_k},
            {"t_k1", v.outcome.t_k1},
            {"sigma_m", count_json(v.outcome.sigma_m)},
            {"n", v.outcome.n},
        });
    }
    if (r.violation_count > r.violations.size()) {
        violations.push_back({{"omitted", r.violation_count - r.violations.size()}});
    }
    Json sharpness = Json::array();
    for (const SharpnessEntry& e : r.sharpness) {
        sharpness.push_back({
            {"family", e.family},
            {"graph", e.graph},
            {"k", e.k},
            {"lambda", e.lambda},
            {"m", e.m},
            {"n", e.n},
            {"assertion", e.assertion},
            {"status", e.status},
            {"t_k", maybe(e.t_k)},
            {"t_k1", maybe(e.t_k1)},
            {"sigma_m", count_json(e.sigma_m)},
        });
    }
    Json doc;
    doc["corpus"] = r.corpus;
    doc["instances"] = r.instances;
    doc["violations"] = std::move(violations);
    doc["sharpness"] = std::move(sharpness);
    doc["elapsed_ms"] = r.elapsed_ms;
    return doc;
}

std::string to_text(const VerificationReport& r) {
    std::ostringstream out;
    out << "corpus: " << r.corpus << '\n';
    out << "instances: " << r.instances << '\n';
    out << "violations: " << r.violation_count << '\n';
    if (!r.violations.empty()) {
        out << "  " << std::left << std::setw(14) << "graph6" << std::setw(8) << "theorem"
            << std::right << std::setw(4) << "k" << std::setw(7) << "lambda" << std::setw(4) << "m"
            << std::setw(6) << "t_k" << std::setw(6) << "t_k1" << std::setw(8) << "sigma_m"
            << std::setw(4) << "n" << '\n';
        for (const Violation& v : r.violations) {
            out << "  " << std::left << std::setw(14) << v.graph6 << std::setw(8)
                << to_string(v.instance.theorem) << std::right << std::setw(4) << v.instance.k
                << std::setw(7) << v.instance.lambda << std::setw(4) << v.instance.m << std::setw(6)
                << v.outcome.t_k << std::setw(6) << v.outcome.t_k1 << std::setw(8)
                << text_count(v.outcome.sigma_m) << std::setw(4) << v.outcome.n << '\n';
        }
        if (r.violation_count > r.violations.size()) {
            out << "  (" << r.violation_count - r.violations.size() << " more omitted)\n";
        }
    }
    out << "sharpness: " << r.sharpness.size() << '\n';
    if (!r.sharpness.empty()) {
        out << "  " << std::left << std::setw(24) << "graph" << std::right << std::setw(4) << "k"
            << std::setw(7) << "lambda" << std::setw(4) << "m" << std::setw(4) << "n" << std::setw(6)
            << "t_k" << std::setw(6) << "t_k1" << std::setw(8) << "sigma_m" << "  status\n";
        for (const SharpnessEntry& e : r.sharpness) {
            out << "  " << std::left << std::setw(24) << e.graph << std::right << std::setw(4) << e.k
                << std::setw(7) << e.lambda << std::setw(4) << e.m << std::setw(4) << e.n
                << std::setw(6) << text_int(e.t_k) << std::setw(6) << text_int(e.t_k1)
                << std::setw(8) << text_count(e.sigma_m) << "  " << e.status << '\n';
        }
    }
    out << "elapsed_ms: " << r.elapsed_ms << '\n';
    return out.str();
}

} // namespace

std::string render_report(const VerificationReport& report, ReportFormat format) {
    if (format == ReportFormat::text) return to_text(report);
    return to_json(report).dump() + '\n';
}

} // namespace kended
