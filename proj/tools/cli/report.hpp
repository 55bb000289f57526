#pragma once

#include <json.hpp>

#include <deque>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace resonance::cli {

using Value = nlohmann::ordered_json;

enum class Format { Human, Json, Csv };

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Value>> rows;
};

// Rendered once all results are collected, so output never depends on
// scheduling.
struct Report {
    std::string command;
    std::vector<std::pair<std::string, Value>> fields;
    std::deque<Table> tables;  // stable references across table()
    std::vector<std::string> notes;

    void field(std::string key, Value v) { fields.emplace_back(std::move(key), std::move(v)); }
    Table& table(std::string name, std::vector<std::string> columns);
};

void render(const Report& report, Format format, std::ostream& out);

std::string cell_text(const Value& v);

}  // namespace resonance::cli
