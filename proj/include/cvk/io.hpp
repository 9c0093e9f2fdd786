// Copyright 2026 The cvkernels Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Plain-text data files: headered CSV with columns x1_1,x2_1,...,x1_N,x2_N[,label].

#pragma once

#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cvk/learning.hpp"
#include "cvk/types.hpp"

namespace cvk::io {

/// Shortest form that round-trips a double: 17 significant digits.
inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::string cell;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cell);
      cell.clear();
    } else if (ch != '\r') {
      cell.push_back(ch);
    }
  }
  out.push_back(cell);
  for (std::string& c : out) {
    const auto b = c.find_first_not_of(" \t");
    const auto e = c.find_last_not_of(" \t");
    c = b == std::string::npos ? std::string() : c.substr(b, e - b + 1);
  }
  return out;
}

inline double parse_cell(const std::string& cell, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(cell, &used);
    if (used != cell.size()) throw std::invalid_argument(cell);
    return v;
  } catch (const std::exception&) {
    throw DataError("line " + std::to_string(line_no) + ": '" + cell + "' is not a number");
  }
}

/// Points with optional labels; `labels` is empty when the header has no label column.
struct Table {
  std::vector<DataPoint> points;
  std::vector<double> labels;
  bool labeled = false;
};

inline Table read_points(std::istream& in) {
  Table t;
  std::string line;
  std::size_t line_no = 0;
  std::size_t columns = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::vector<std::string> cells = split_csv_line(line);
    if (columns == 0) {
      columns = cells.size();
      t.labeled = cells.back() == "label";
      const std::size_t coords = t.labeled ? columns - 1 : columns;
      if (coords == 0 || coords % 2 != 0) {
        throw DataError("line " + std::to_string(line_no) + ": header needs 2N coordinate columns, found " +
                        std::to_string(coords));
      }
      continue;
    }
    if (cells.size() != columns) {
      throw DataError("line " + std::to_string(line_no) + ": expected " + std::to_string(columns) + " fields, found " +
                      std::to_string(cells.size()));
    }
    std::vector<double> values;
    values.reserve(cells.size());
    for (const std::string& c : cells) values.push_back(parse_cell(c, line_no));
    if (t.labeled) {
      t.labels.push_back(values.back());
      values.pop_back();
    }
    try {
      t.points.emplace_back(std::move(values));
    } catch (const UsageError& e) {
      throw DataError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (columns == 0) throw DataError("missing CSV header");
  return t;
}

inline Table read_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return read_points(in);
}

inline LabeledDataset read_dataset(const std::string& path) {
  Table t = read_points(path);
  if (!t.labeled) throw DataError(path + ": training data needs a trailing 'label' column");
  LabeledDataset ds{std::move(t.points), std::move(t.labels)};
  ds.validate();
  return ds;
}

inline std::string coordinate_header(std::size_t modes) {
  std::string h;
  for (std::size_t j = 1; j <= modes; ++j) {
    if (j > 1) h += ',';
    h += "x1_" + std::to_string(j) + ",x2_" + std::to_string(j);
  }
  return h;
}

inline void write_row(std::ostream& out, std::span<const double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ',';
    out << format_number(values[i]);
  }
  out << '\n';
}

inline void write_dataset(std::ostream& out, const LabeledDataset& ds) {
  out << coordinate_header(ds.points.front().modes()) << ",label\n";
  for (std::size_t i = 0; i < ds.size(); ++i) {
    std::vector<double> row(ds.points[i].coords().begin(), ds.points[i].coords().end());
    row.push_back(ds.labels[i]);
    write_row(out, row);
  }
}

}  // namespace cvk::io
