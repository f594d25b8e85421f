// records.hpp
// Machine-readable result emission: CSV with a fixed header or JSON lines,
// both carrying the same field names. Reals print with 17 significant
// digits so that re-ingesting an emitted file reproduces the records.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "parrondo/common.hpp"

namespace parrondo {

enum class Format { csv, jsonl };

Format format_from_name(std::string_view name);
std::string_view format_name(Format f);

using Value = std::variant<std::int64_t, double, bool, std::string>;

struct Field {
    std::string name;
    Value value;
};

// One output row; fields keep their declared order.
using Record = std::vector<Field>;

// Streams records to an ostream. CSV writes the header from the first
// record's field names and requires every later record to match it. The
// three-argument form pins the header up front, so a CSV stream with zero
// records still carries its header line.
class RecordWriter {
public:
    RecordWriter(std::ostream& out, Format format);
    RecordWriter(std::ostream& out, Format format, const std::vector<std::string>& header);

    void write(const Record& record);
    std::size_t count() const { return count_; }

private:
    std::ostream& out_;
    Format format_;
    std::size_t count_ = 0;
    std::vector<std::string> header_;
};

// Schema for reading back: field name -> expected value kind.
enum class FieldType { integer, real, boolean, text };

struct SchemaField {
    std::string name;
    FieldType type;
};

using Schema = std::vector<SchemaField>;

// Parses a whole stream previously produced by RecordWriter.
std::vector<Record> read_records(std::istream& in, Format format, const Schema& schema);

}  // namespace parrondo
