// output.cpp: dataset serialization

#include "cli/output.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "tidisc/errors.hpp"

#ifndef TIDISC_VERSION
#define TIDISC_VERSION "unknown"
#endif

namespace tidisc::cli {

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void ensure_parent(const std::string& path) {
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) {
        std::filesystem::create_directories(parent);
    }
}

std::ofstream open_out(const std::string& path) {
    ensure_parent(path);
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        throw InvalidInput("cannot open '" + path + "' for writing");
    }
    return os;
}

} // namespace

Format format_from_string(const std::string& name) {
    if (name == "csv") {
        return Format::Csv;
    }
    if (name == "json") {
        return Format::Json;
    }
    throw InvalidParameter("format must be 'csv' or 'json'");
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const Table& table) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        os << (i ? "," : "") << table.columns[i];
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) {
                os << ',';
            }
            if (const auto* d = std::get_if<double>(&row[i])) {
                os << format_double(*d);
            } else {
                os << std::get<std::string>(row[i]);
            }
        }
        os << '\n';
    }
}

json dataset_json(const Dataset& ds) {
    json rows = json::array();
    for (const auto& row : ds.table.rows) {
        json r = json::array();
        for (const auto& cell : row) {
            std::visit([&](const auto& v) { r.push_back(v); }, cell);
        }
        rows.push_back(std::move(r));
    }
    return {{"metadata", ds.metadata}, {"columns", ds.table.columns}, {"rows", std::move(rows)}};
}

json make_metadata(const std::string& command, const std::string& model, json params, json grid,
                   const std::string& units) {
    return {{"command", command},
            {"model", model},
            {"params", std::move(params)},
            {"grid", std::move(grid)},
            {"units", units},
            {"version", TIDISC_VERSION},
            {"timestamp", utc_timestamp()}};
}

std::vector<std::string> emit(const Dataset& ds, const std::optional<std::string>& stem,
                              Format format, std::ostream& out) {
    if (!stem) {
        if (format == Format::Csv) {
            write_csv(out, ds.table);
        } else {
            out << dataset_json(ds).dump(2) << '\n';
        }
        return {};
    }
    if (format == Format::Json) {
        const std::string path = *stem + ".json";
        write_json_file(path, dataset_json(ds));
        return {path};
    }
    const std::string csv = *stem + ".csv";
    auto os = open_out(csv);
    write_csv(os, ds.table);
    const std::string meta = *stem + ".meta.json";
    write_json_file(meta, ds.metadata);
    return {csv, meta};
}

void write_json_file(const std::string& path, const json& doc) {
    auto os = open_out(path);
    os << doc.dump(2) << '\n';
}

json read_metadata_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) {
        throw InvalidInput("cannot read '" + path + "'");
    }
    try {
        json doc = json::parse(is);
        // A full JSON dataset nests its metadata.
        if (doc.contains("metadata") && doc.contains("rows")) {
            return doc.at("metadata");
        }
        return doc;
    } catch (const json::exception& e) {
        throw InvalidInput("malformed JSON in '" + path + "': " + e.what());
    }
}

} // namespace tidisc::cli
