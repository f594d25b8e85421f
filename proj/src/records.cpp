#include "parrondo/records.hpp"

#include <json.hpp>

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace parrondo {

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string value_to_text(const Value& v) {
    if (std::holds_alternative<std::int64_t>(v)) return std::to_string(std::get<std::int64_t>(v));
    if (std::holds_alternative<double>(v)) return format_double(std::get<double>(v));
    if (std::holds_alternative<bool>(v)) return std::get<bool>(v) ? "true" : "false";
    return std::get<std::string>(v);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cell += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cell += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            cells.push_back(std::move(cell));
            cell.clear();
        } else {
            cell += c;
        }
    }
    cells.push_back(std::move(cell));
    return cells;
}

Value parse_value(const std::string& text, FieldType type, const std::string& field) {
    switch (type) {
        case FieldType::integer: {
            try {
                return Value{static_cast<std::int64_t>(std::stoll(text))};
            } catch (const std::exception&) {
                throw ConfigError(field + ": not an integer: '" + text + "'");
            }
        }
        case FieldType::real: return Value{parse_double(text, field)};
        case FieldType::boolean: {
            if (text == "true") return Value{true};
            if (text == "false") return Value{false};
            throw ConfigError(field + ": not a boolean: '" + text + "'");
        }
        case FieldType::text: return Value{text};
    }
    throw ConfigError(field + ": unknown field type");
}

}  // namespace

Format format_from_name(std::string_view name) {
    if (name == "csv") return Format::csv;
    if (name == "jsonl") return Format::jsonl;
    throw ConfigError("format must be 'csv' or 'jsonl', got '" + std::string(name) + "'");
}

std::string_view format_name(Format f) { return f == Format::csv ? "csv" : "jsonl"; }

RecordWriter::RecordWriter(std::ostream& out, Format format) : out_(out), format_(format) {}

RecordWriter::RecordWriter(std::ostream& out, Format format,
                           const std::vector<std::string>& header)
    : out_(out), format_(format), header_(header) {
    if (format_ == Format::csv) {
        for (std::size_t i = 0; i < header_.size(); ++i) {
            out_ << (i ? "," : "") << csv_escape(header_[i]);
        }
        out_ << '\n';
    }
}

void RecordWriter::write(const Record& record) {
    if (format_ == Format::csv) {
        if (count_ == 0 && header_.empty()) {
            header_.reserve(record.size());
            for (std::size_t i = 0; i < record.size(); ++i) {
                header_.push_back(record[i].name);
                out_ << (i ? "," : "") << csv_escape(record[i].name);
            }
            out_ << '\n';
        } else {
            if (record.size() != header_.size()) {
                throw std::invalid_argument("record field count differs from header");
            }
            for (std::size_t i = 0; i < record.size(); ++i) {
                if (record[i].name != header_[i]) {
                    throw std::invalid_argument("record field '" + record[i].name +
                                                "' does not match header column '" +
                                                header_[i] + "'");
                }
            }
        }
        for (std::size_t i = 0; i < record.size(); ++i) {
            out_ << (i ? "," : "") << csv_escape(value_to_text(record[i].value));
        }
        out_ << '\n';
    } else {
        // JSON lines. nlohmann serializes doubles with round-trip precision;
        // NaN (used for not-applicable fields) becomes null.
        nlohmann::ordered_json obj;
        for (const auto& field : record) {
            if (std::holds_alternative<std::int64_t>(field.value)) {
                obj[field.name] = std::get<std::int64_t>(field.value);
            } else if (std::holds_alternative<double>(field.value)) {
                obj[field.name] = std::get<double>(field.value);
            } else if (std::holds_alternative<bool>(field.value)) {
                obj[field.name] = std::get<bool>(field.value);
            } else {
                obj[field.name] = std::get<std::string>(field.value);
            }
        }
        out_ << obj.dump() << '\n';
    }
    ++count_;
}

std::vector<Record> read_records(std::istream& in, Format format, const Schema& schema) {
    std::vector<Record> records;
    std::string line;

    if (format == Format::csv) {
        if (!std::getline(in, line)) return records;
        const auto header = split_csv_line(line);
        if (header.size() != schema.size()) {
            throw ConfigError("csv header has " + std::to_string(header.size()) +
                              " columns, schema expects " + std::to_string(schema.size()));
        }
        for (std::size_t i = 0; i < schema.size(); ++i) {
            if (header[i] != schema[i].name) {
                throw ConfigError("csv column '" + header[i] + "' does not match schema '" +
                                  schema[i].name + "'");
            }
        }
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const auto cells = split_csv_line(line);
            if (cells.size() != schema.size()) {
                throw ConfigError("csv row has " + std::to_string(cells.size()) + " cells");
            }
            Record rec;
            rec.reserve(schema.size());
            for (std::size_t i = 0; i < schema.size(); ++i) {
                rec.push_back(Field{schema[i].name,
                                    parse_value(cells[i], schema[i].type, schema[i].name)});
            }
            records.push_back(std::move(rec));
        }
        return records;
    }

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw ConfigError(std::string("jsonl parse error: ") + e.what());
        }
        Record rec;
        rec.reserve(schema.size());
        for (const auto& field : schema) {
            if (!obj.contains(field.name)) {
                throw ConfigError("jsonl record missing field '" + field.name + "'");
            }
            const auto& v = obj.at(field.name);
            switch (field.type) {
                case FieldType::integer:
                    rec.push_back(Field{field.name, Value{v.get<std::int64_t>()}});
                    break;
                case FieldType::real:
                    // null round-trips the NaN of not-applicable fields.
                    rec.push_back(Field{field.name,
                                        Value{v.is_null()
                                                  ? std::numeric_limits<double>::quiet_NaN()
                                                  : v.get<double>()}});
                    break;
                case FieldType::boolean:
                    rec.push_back(Field{field.name, Value{v.get<bool>()}});
                    break;
                case FieldType::text:
                    rec.push_back(Field{field.name, Value{v.get<std::string>()}});
                    break;
            }
        }
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace parrondo
