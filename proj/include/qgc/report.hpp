#pragma once

#include <cstdio>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qgc {

// Typed cell for report emission.  Numbers are formatted at insertion time
// (%.17g for doubles) so emitted bytes are a pure function of the values.
struct JVal {
    enum class Kind { num, str, boolean, null } kind = Kind::null;
    std::string text;

    static JVal of(double v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return {Kind::num, buf};
    }
    static JVal of(std::uint64_t v) { return {Kind::num, std::to_string(v)}; }
    static JVal of(std::int64_t v) { return {Kind::num, std::to_string(v)}; }
    static JVal of(int v) { return {Kind::num, std::to_string(v)}; }
    static JVal of(const std::string& s) { return {Kind::str, s}; }
    static JVal of(const char* s) { return {Kind::str, s}; }
    static JVal of(bool b) { return {Kind::boolean, b ? "true" : "false"}; }
    static JVal null() { return {Kind::null, "null"}; }
};

struct ExperimentReport {
    std::string experiment;
    std::vector<std::pair<std::string, JVal>> config;  // echo, insertion order
    std::vector<std::string> columns;
    std::vector<std::vector<JVal>> rows;  // one per grid point, aligned with columns
};

namespace detail {

inline void json_escape_into(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += '"';
}

inline void jval_into(std::string& out, const JVal& v) {
    switch (v.kind) {
        case JVal::Kind::num:
        case JVal::Kind::boolean: out += v.text; break;
        case JVal::Kind::null: out += "null"; break;
        case JVal::Kind::str: json_escape_into(out, v.text); break;
    }
}

}  // namespace detail

// Stable field order, one row object per grid point.
inline std::string emit_report(const ExperimentReport& rep, const std::string& format) {
    if (format == "json") {
        std::string out = "{\n  \"experiment\": ";
        detail::json_escape_into(out, rep.experiment);
        out += ",\n  \"config\": {";
        for (std::size_t i = 0; i < rep.config.size(); ++i) {
            if (i) out += ", ";
            detail::json_escape_into(out, rep.config[i].first);
            out += ": ";
            detail::jval_into(out, rep.config[i].second);
        }
        out += "},\n  \"points\": [";
        for (std::size_t r = 0; r < rep.rows.size(); ++r) {
            out += r ? ",\n    {" : "\n    {";
            for (std::size_t c = 0; c < rep.columns.size(); ++c) {
                if (c) out += ", ";
                detail::json_escape_into(out, rep.columns[c]);
                out += ": ";
                detail::jval_into(out, rep.rows[r][c]);
            }
            out += "}";
        }
        out += rep.rows.empty() ? "]\n}\n" : "\n  ]\n}\n";
        return out;
    }
    if (format == "csv") {
        std::string out;
        for (std::size_t c = 0; c < rep.columns.size(); ++c) {
            if (c) out += ',';
            out += rep.columns[c];
        }
        out += '\n';
        for (const auto& row : rep.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) out += ',';
                if (row[c].kind != JVal::Kind::null) out += row[c].text;
            }
            out += '\n';
        }
        return out;
    }
    throw std::invalid_argument("unknown report format: " + format);
}

}  // namespace qgc
