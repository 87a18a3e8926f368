// Copyright 2026 The qread Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "qread/coherent.hpp"
#include "qread/errors.hpp"

namespace qread {

using Cell = std::variant<double, std::string>;

enum class OutputFormat { csv, json };

/// 17 significant digits, locale-independent; round-trips any double.
inline std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

/// One record of an experiment table: named cells in insertion order.
/// Complex values are stored as two cells, name_re and name_im.
class ResultRow {
 public:
  ResultRow& set(const std::string& name, double v) {
    cells_.emplace_back(name, Cell(v));
    return *this;
  }
  ResultRow& set(const std::string& name, const std::string& v) {
    cells_.emplace_back(name, Cell(v));
    return *this;
  }
  ResultRow& set(const std::string& name, const char* v) {
    return set(name, std::string(v));
  }
  ResultRow& set(const std::string& name, Complex v) {
    set(name + "_re", v.real());
    return set(name + "_im", v.imag());
  }

  const std::vector<std::pair<std::string, Cell>>& cells() const {
    return cells_;
  }

  const Cell* find(std::string_view name) const {
    for (const auto& [n, c] : cells_)
      if (n == name) return &c;
    return nullptr;
  }

  double number(std::string_view name) const {
    const Cell* c = find(name);
    if (!c || !std::holds_alternative<double>(*c))
      throw Error("ResultRow: no numeric cell named '" + std::string(name) +
                  "'");
    return std::get<double>(*c);
  }

  std::string text(std::string_view name) const {
    const Cell* c = find(name);
    if (!c || !std::holds_alternative<std::string>(*c))
      throw Error("ResultRow: no text cell named '" + std::string(name) + "'");
    return std::get<std::string>(*c);
  }

 private:
  std::vector<std::pair<std::string, Cell>> cells_;
};

using Table = std::vector<ResultRow>;

namespace detail {

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline void check_schema(const Table& rows) {
  if (rows.empty()) throw DomainError("emit: empty table");
  for (const ResultRow& r : rows) {
    if (r.cells().size() != rows.front().cells().size())
      throw Error("emit: rows have inconsistent schemas");
    for (std::size_t i = 0; i < r.cells().size(); ++i)
      if (r.cells()[i].first != rows.front().cells()[i].first)
        throw Error("emit: rows have inconsistent schemas");
  }
}

}  // namespace detail

/// CSV: header row, comma separators, LF line endings, doubles with 17
/// significant digits.
inline void emit_csv(const Table& rows, std::ostream& out) {
  detail::check_schema(rows);
  const auto& header = rows.front().cells();
  for (std::size_t i = 0; i < header.size(); ++i)
    out << (i ? "," : "") << detail::csv_escape(header[i].first);
  out << '\n';
  for (const ResultRow& r : rows) {
    for (std::size_t i = 0; i < r.cells().size(); ++i) {
      if (i) out << ',';
      const Cell& c = r.cells()[i].second;
      if (std::holds_alternative<double>(c))
        out << format_double(std::get<double>(c));
      else
        out << detail::csv_escape(std::get<std::string>(c));
    }
    out << '\n';
  }
}

/// JSON: array of flat objects, field names identical to the CSV header.
/// NaN serializes as null (JSON has no NaN).
inline void emit_json(const Table& rows, std::ostream& out) {
  detail::check_schema(rows);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ResultRow& r : rows) {
    nlohmann::ordered_json obj;
    for (const auto& [name, cell] : r.cells()) {
      if (std::holds_alternative<double>(cell))
        obj[name] = std::get<double>(cell);
      else
        obj[name] = std::get<std::string>(cell);
    }
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << '\n';
}

inline void emit(const Table& rows, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::csv)
    emit_csv(rows, out);
  else
    emit_json(rows, out);
  if (!out) throw IoError("emit: write failed");
}

/// Write to a file, or to standard output when path is empty or "-".
inline void emit(const Table& rows, OutputFormat format,
                 const std::string& path) {
  if (path.empty() || path == "-") {
    emit(rows, format, std::cout);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("emit: cannot open '" + path + "' for writing");
  emit(rows, format, f);
}

namespace detail {

inline Cell parse_cell(const std::string& field) {
  double v = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec == std::errc() && ptr == end && !field.empty()) return Cell(v);
  return Cell(field);
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

}  // namespace detail

inline Table parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("parse_csv: missing header");
  const std::vector<std::string> header = detail::split_csv_line(line);
  Table rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> fields = detail::split_csv_line(line);
    if (fields.size() != header.size())
      throw IoError("parse_csv: row width does not match header");
    ResultRow row;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      const Cell c = detail::parse_cell(fields[i]);
      if (std::holds_alternative<double>(c))
        row.set(header[i], std::get<double>(c));
      else
        row.set(header[i], std::get<std::string>(c));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Table parse_json(std::istream& in) {
  nlohmann::ordered_json arr;
  try {
    arr = nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("parse_json: ") + e.what());
  }
  if (!arr.is_array()) throw IoError("parse_json: expected an array of rows");
  Table rows;
  for (const auto& obj : arr) {
    ResultRow row;
    for (const auto& [name, value] : obj.items()) {
      if (value.is_null())
        row.set(name, std::numeric_limits<double>::quiet_NaN());
      else if (value.is_number())
        row.set(name, value.get<double>());
      else if (value.is_string())
        row.set(name, value.get<std::string>());
      else
        throw IoError("parse_json: unsupported cell type for '" + name + "'");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qread
