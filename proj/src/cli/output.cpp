#include <cmath>
#include <cstdio>
#include <sstream>

#include "cohpoly/cli.hpp"

namespace cohpoly::cli {

namespace {

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default: out += ch;
        }
    }
    return out + "\"";
}

std::string json_number(double v) { return std::isfinite(v) ? format_number(v) : "null"; }

std::string json_value(const Value& v) {
    if (const auto* s = std::get_if<std::string>(&v)) return json_string(*s);
    if (const auto* d = std::get_if<double>(&v)) return json_number(*d);
    const auto& list = std::get<std::vector<double>>(v);
    std::string out = "[";
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) out += ", ";
        out += json_number(list[i]);
    }
    return out + "]";
}

void json_fields(std::ostringstream& os, const Fields& fields) {
    os << "{";
    for (std::size_t i = 0; i < fields.size(); ++i) {
        os << (i ? ", " : "") << json_string(fields[i].first) << ": " << json_value(fields[i].second);
    }
    os << "}";
}

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_csv(const Table& t) {
    std::ostringstream os;
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            if (row[i]) os << format_number(*row[i]);
        }
        os << '\n';
    }
    return os.str();
}

std::string to_json(const Document& d) {
    std::ostringstream os;
    os << "{\n  \"config\": ";
    json_fields(os, d.config);
    os << ",\n  \"summary\": ";
    json_fields(os, d.summary);
    os << ",\n  \"rows\": [";
    for (std::size_t r = 0; r < d.table.rows.size(); ++r) {
        os << (r ? ",\n    {" : "\n    {");
        const auto& row = d.table.rows[r];
        for (std::size_t i = 0; i < d.table.columns.size(); ++i) {
            os << (i ? ", " : "") << json_string(d.table.columns[i]) << ": "
               << (i < row.size() && row[i] ? json_number(*row[i]) : "null");
        }
        os << "}";
    }
    os << (d.table.rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
    return os.str();
}

std::string render(const Document& d, Format f) { return f == Format::csv ? to_csv(d.table) : to_json(d); }

}  // namespace cohpoly::cli
