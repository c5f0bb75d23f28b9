#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cohpoly::cli {

using Cell = std::optional<double>;  // empty prints as an empty CSV cell / JSON null

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

using Value = std::variant<std::string, double, std::vector<double>>;
using Fields = std::vector<std::pair<std::string, Value>>;  // emitted in insertion order

/// The emitted document: JSON {config, summary, rows}; CSV carries the rows only.
struct Document {
    Fields config;
    Fields summary;
    Table table;
};

enum class Format { csv, json };

/// 17 significant digits, "nan"/"inf"/"-inf" for non-finite values.
std::string format_number(double v);
std::string to_csv(const Table& t);
std::string to_json(const Document& d);
std::string render(const Document& d, Format f);

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumeric = 2;

/// Runs the command line (args excludes the program name). Output goes to
/// `out` or to the --out file; diagnostics go to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cohpoly::cli
