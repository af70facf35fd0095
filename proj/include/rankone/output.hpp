#ifndef RANKONE_OUTPUT_HPP
#define RANKONE_OUTPUT_HPP

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rankone/exact.hpp"

namespace rankone {

/// A fully formatted table: every cell is already a decimal string or an
/// "a/b" rational, so CSV and JSON emission are byte-stable by construction.
struct OutputRecord {
    std::string schema_version = "1";
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

/// 17 significant digits: lossless double round-trip.
inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string fmt_rational(const Rational& r) { return to_string(r); }

inline std::string fmt_long(long v) { return std::to_string(v); }

inline std::string fmt_bool(bool b) { return b ? "true" : "false"; }

/// RFC-4180 field quoting: quote when the field contains a comma, a quote,
/// or a line break; embedded quotes are doubled.
inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline void write_csv(std::ostream& os, const OutputRecord& rec) {
    for (std::size_t i = 0; i < rec.columns.size(); ++i) {
        if (i) os << ',';
        os << csv_escape(rec.columns[i]);
    }
    os << '\n';
    for (const auto& row : rec.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << csv_escape(row[i]);
        }
        os << '\n';
    }
}

inline void write_json(std::ostream& os, const OutputRecord& rec) {
    nlohmann::ordered_json j;
    j["schema_version"] = rec.schema_version;
    j["command"] = rec.command;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rec.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < rec.columns.size() && i < row.size(); ++i)
            obj[rec.columns[i]] = row[i];
        j["rows"].push_back(std::move(obj));
    }
    os << j.dump(2) << '\n';
}

inline void write_record(std::ostream& os, const OutputRecord& rec,
                         const std::string& format) {
    if (format == "json")
        write_json(os, rec);
    else
        write_csv(os, rec);
}

}  // namespace rankone

#endif
