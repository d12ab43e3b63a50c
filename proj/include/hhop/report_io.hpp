#pragma once

#include "hhop/matrix_io.hpp"
#include "hhop/suites.hpp"

#include <ostream>
#include <string>

namespace hhop {

enum class ReportFormat { kText, kJsonLines };

inline ReportFormat parse_report_format(const std::string& name) {
    if (name == "text") return ReportFormat::kText;
    if (name == "jsonl") return ReportFormat::kJsonLines;
    throw std::invalid_argument("unknown report format '" + name +
                                "'; use text or jsonl");
}

namespace detail {

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

inline std::string join_dims(const std::vector<int>& dims) {
    std::string out;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(dims[i]);
    }
    return out;
}

} // namespace detail

// Stable-ordered, diff-friendly emission. Records are sorted by trial index
// and every real is printed with 17 significant digits; the wall-time field
// is the only line that differs between identical reruns.
inline void emit_report(const RunReport& report, ReportFormat format,
                        std::ostream& out) {
    const SuiteConfig& c = report.config;
    const RunSummary& s = report.summary;

    if (format == ReportFormat::kText) {
        out << "campaign suite=" << c.suite << " eta=" << c.eta << " fn=" << c.fn
            << " dims=" << detail::join_dims(c.dims) << " trials=" << c.trials
            << " seed=" << c.seed << "\n";
        for (const TrialRecord& t : report.trials) {
            out << "trial " << t.index << " digest=" << t.digest
                << " verdict=" << t.verdict;
            for (const auto& [key, value] : t.certificates)
                out << " " << key << "=" << format_real17(value);
            if (!t.message.empty()) out << " message=\"" << t.message << "\"";
            out << "\n";
        }
        out << "summary trials=" << s.trials << " passes=" << s.passes
            << " violations=" << s.violations << " inapplicable=" << s.inapplicable
            << " errors=" << s.errors << " worst_margin="
            << format_real17(s.worst_margin)
            << " expectation=" << (s.expectation_met ? "met" : "unmet")
            << " exit=" << s.exit_code << " seed=" << s.seed << "\n";
        out << "wall_ms " << format_real17(s.wall_ms) << "\n";
        return;
    }

    for (const TrialRecord& t : report.trials) {
        out << "{\"record\":\"trial\",\"index\":" << t.index << ",\"digest\":\""
            << t.digest << "\",\"verdict\":\"" << t.verdict << "\"";
        out << ",\"certificates\":{";
        bool first = true;
        for (const auto& [key, value] : t.certificates) {
            if (!first) out << ",";
            first = false;
            out << "\"" << detail::json_escape(key) << "\":" << format_real17(value);
        }
        out << "}";
        if (!t.message.empty())
            out << ",\"message\":\"" << detail::json_escape(t.message) << "\"";
        out << "}\n";
    }
    out << "{\"record\":\"summary\",\"suite\":\"" << detail::json_escape(c.suite)
        << "\",\"eta\":\"" << detail::json_escape(c.eta) << "\",\"fn\":\""
        << detail::json_escape(c.fn) << "\",\"dims\":\"" << detail::join_dims(c.dims)
        << "\",\"trials\":" << s.trials << ",\"passes\":" << s.passes
        << ",\"violations\":" << s.violations << ",\"inapplicable\":" << s.inapplicable
        << ",\"errors\":" << s.errors << ",\"worst_margin\":"
        << format_real17(s.worst_margin) << ",\"expectation_met\":"
        << (s.expectation_met ? "true" : "false") << ",\"exit\":" << s.exit_code
        << ",\"seed\":" << s.seed << ",\"wall_ms\":" << format_real17(s.wall_ms)
        << "}\n";
}

inline std::string report_to_string(const RunReport& report, ReportFormat format) {
    std::ostringstream os;
    emit_report(report, format, os);
    return os.str();
}

// Emission with the wall-time field removed, for byte-level determinism
// comparisons.
inline std::string report_to_string_stable(const RunReport& report,
                                           ReportFormat format) {
    RunReport copy = report;
    copy.summary.wall_ms = 0.0;
    return report_to_string(copy, format);
}

} // namespace hhop
