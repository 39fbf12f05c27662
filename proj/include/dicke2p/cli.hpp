#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace dicke2p::cli {

enum ExitCode : int {
    kOk = 0,
    kConfigError = 2,
    kDomainError = 3,
    kOracleMismatch = 4,
};

// Entry point shared by the executable and the tests. `args` excludes the
// program name; the first element is the command.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Flat "key = value" lines. Blank lines and lines starting with '#' are
// skipped; surrounding whitespace is trimmed. Throws std::runtime_error on a
// line without '=' or with an empty key, naming the line number.
std::map<std::string, std::string> parse_config(std::istream& in);

// Inserts "--key=value" for every config entry directly after the command
// so that explicit flags, which come later, take precedence.
std::vector<std::string> apply_config(const std::vector<std::string>& args,
                                      const std::map<std::string, std::string>& config);

enum class Format { Csv, Json };

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

// One output file: the table plus everything needed to reproduce it.
struct Document {
    std::string command;
    std::map<std::string, std::string> config;
    std::map<std::string, std::string> summary;
    Table table;
};

// CSV: '#'-prefixed metadata lines (version, command, config.*, summary.*),
// one header row, comma separator, LF endings, doubles with 15 significant digits.
void write_document(const Document& doc, Format format, std::ostream& out);

std::string format_number(double v);

}  // namespace dicke2p::cli
