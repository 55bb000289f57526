#include "cli/report.hpp"

#include <algorithm>

namespace resonance::cli {

Table& Report::table(std::string name, std::vector<std::string> columns) {
    tables.push_back(Table{std::move(name), std::move(columns), {}});
    return tables.back();
}

std::string cell_text(const Value& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    if (v.is_array()) {
        std::string s;
        for (const auto& e : v) {
            if (!s.empty()) s += ' ';
            s += cell_text(e);
        }
        return s.empty() ? "{}" : s;
    }
    return v.dump();
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void render_human(const Report& r, std::ostream& out) {
    out << "command: " << r.command << '\n';
    for (const auto& [k, v] : r.fields) out << k << ": " << cell_text(v) << '\n';
    for (const auto& t : r.tables) {
        out << '\n' << t.name << '\n';
        std::vector<std::size_t> width(t.columns.size());
        for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
        std::vector<std::vector<std::string>> text;
        for (const auto& row : t.rows) {
            text.emplace_back();
            for (std::size_t c = 0; c < row.size(); ++c) {
                text.back().push_back(cell_text(row[c]));
                width[c] = std::max(width[c], text.back().back().size());
            }
        }
        auto line = [&](const std::vector<std::string>& cells) {
            std::string s;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c) s += "  ";
                s += cells[c];
                if (c + 1 < cells.size()) s.append(width[c] - cells[c].size(), ' ');
            }
            out << s << '\n';
        };
        line(t.columns);
        for (const auto& row : text) line(row);
    }
    if (!r.notes.empty()) out << '\n';
    for (const auto& n : r.notes) out << "note: " << n << '\n';
}

void render_csv(const Report& r, std::ostream& out) {
    bool first = true;
    for (const auto& t : r.tables) {
        if (!first) out << '\n';
        first = false;
        out << "# " << t.name << '\n';
        for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << csv_escape(t.columns[c]);
        out << '\n';
        for (const auto& row : t.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_escape(cell_text(row[c]));
            out << '\n';
        }
    }
}

void render_json(const Report& r, std::ostream& out) {
    Value doc = Value::object();
    doc["command"] = r.command;
    for (const auto& [k, v] : r.fields) doc[k] = v;
    Value tables = Value::object();
    for (const auto& t : r.tables) {
        Value rows = Value::array();
        for (const auto& row : t.rows) {
            Value obj = Value::object();
            for (std::size_t c = 0; c < row.size(); ++c) obj[t.columns[c]] = row[c];
            rows.push_back(std::move(obj));
        }
        tables[t.name] = std::move(rows);
    }
    doc["tables"] = std::move(tables);
    if (!r.notes.empty()) doc["notes"] = r.notes;
    out << doc.dump(2) << '\n';
}

}  // namespace

void render(const Report& report, Format format, std::ostream& out) {
    switch (format) {
        case Format::Human: render_human(report, out); break;
        case Format::Json: render_json(report, out); break;
        case Format::Csv: render_csv(report, out); break;
    }
}

}  // namespace resonance::cli
