#include <fmt/format.h>

#include <json.hpp>
#include <ostream>

#include "dicke2p/cli.hpp"

#ifndef DICKE2P_VERSION
#define DICKE2P_VERSION "0.0.0"
#endif

namespace dicke2p::cli {

std::string format_number(double v) { return fmt::format("{:.15g}", v); }

namespace {

std::string cell_text(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
    if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
    return std::get<std::string>(c);
}

nlohmann::json cell_json(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return *d;
    if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
    return std::get<std::string>(c);
}

void write_csv(const Document& doc, std::ostream& out) {
    out << "# dicke2p " << DICKE2P_VERSION << '\n';
    out << "# command=" << doc.command << '\n';
    for (const auto& [k, v] : doc.config) out << "# config." << k << '=' << v << '\n';
    for (const auto& [k, v] : doc.summary) out << "# summary." << k << '=' << v << '\n';
    for (std::size_t i = 0; i < doc.table.columns.size(); ++i)
        out << (i ? "," : "") << doc.table.columns[i];
    out << '\n';
    for (const auto& row : doc.table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
        out << '\n';
    }
}

void write_json(const Document& doc, std::ostream& out) {
    nlohmann::json j;
    j["version"] = DICKE2P_VERSION;
    j["command"] = doc.command;
    j["config"] = doc.config;
    j["summary"] = doc.summary;
    j["columns"] = doc.table.columns;
    auto rows = nlohmann::json::array();
    for (const auto& row : doc.table.rows) {
        auto r = nlohmann::json::array();
        for (const auto& c : row) r.push_back(cell_json(c));
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    out << j.dump(2) << '\n';
}

}  // namespace

void write_document(const Document& doc, Format format, std::ostream& out) {
    if (format == Format::Json)
        write_json(doc, out);
    else
        write_csv(doc, out);
}

}  // namespace dicke2p::cli
