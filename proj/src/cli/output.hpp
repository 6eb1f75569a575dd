// output.hpp: CSV and JSON emitters
//
// CSV: header row, comma separated, LF line endings, doubles with 17 significant digits
// written locale-independently. JSON datasets carry {metadata, columns, rows}.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace tidisc::cli {

using json = nlohmann::json;

using Cell = std::variant<double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

struct Dataset {
    Table table;
    json metadata;
};

enum class Format { Csv, Json };

Format format_from_string(const std::string& name);

/// 17 significant digits with a "." decimal point in every locale.
std::string format_double(double v);

void write_csv(std::ostream& os, const Table& table);
json dataset_json(const Dataset& ds);

/// Metadata skeleton {model, params, grid, units, version, timestamp}.
json make_metadata(const std::string& command, const std::string& model, json params, json grid,
                   const std::string& units);

/// With a stem: csv → <stem>.csv + <stem>.meta.json, json → <stem>.json. Without: stdout.
/// Returns the paths written.
std::vector<std::string> emit(const Dataset& ds, const std::optional<std::string>& stem,
                              Format format, std::ostream& out);

void write_json_file(const std::string& path, const json& doc);
/// Accepts a .meta.json file or a full JSON dataset and returns the metadata object.
json read_metadata_file(const std::string& path);

} // namespace tidisc::cli
