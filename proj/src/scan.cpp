// Copyright 2026 The UPB Dimer Authors
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

#include "upb/scan.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "upb/types.hpp"

namespace upb {

std::size_t ScanResult::size() const {
  if (axes.empty()) return 0;
  std::size_t n = 1;
  for (const Axis& a : axes) n *= a.values.size();
  return n;
}

std::vector<double> ScanResult::point(std::size_t index) const {
  std::vector<double> coords(axes.size());
  for (std::size_t k = axes.size(); k-- > 0;) {
    const std::size_t len = axes[k].values.size();
    coords[k] = axes[k].values[index % len];
    index /= len;
  }
  return coords;
}

Column& ScanResult::add_column(std::string name, bool display) {
  columns.push_back(Column{std::move(name), std::vector<std::optional<double>>(size()), display});
  return columns.back();
}

const Column& ScanResult::column(const std::string& name) const {
  for (const Column& c : columns) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no column named " + name);
}

void ScanResult::add_metadata(std::string key, std::string value) {
  metadata.emplace_back(std::move(key), std::move(value));
}

void ScanResult::add_metadata(std::string key, double value) {
  add_metadata(std::move(key), format_value(value));
}

void ScanResult::validate() const {
  const std::size_t n = size();
  for (const Column& c : columns) {
    if (c.values.size() != n) {
      throw std::logic_error("column " + c.name + " has " + std::to_string(c.values.size()) +
                             " values for a grid of " + std::to_string(n));
    }
  }
}

std::size_t CsvTable::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw std::out_of_range("no CSV column named " + name);
}

std::string format_value(std::optional<double> v) {
  if (!v || !std::isfinite(*v)) return kUndefinedMarker;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.16e", *v);
  return buf;
}

namespace {

std::string format_display(std::optional<double> v) {
  if (!v || !std::isfinite(*v)) return kUndefinedMarker;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", *v);
  return buf;
}

}  // namespace

void write_csv(std::ostream& out, const ScanResult& scan) {
  scan.validate();
  for (const auto& [key, value] : scan.metadata) out << "# " << key << " = " << value << '\n';

  std::vector<std::string> header;
  for (const Axis& a : scan.axes) header.push_back(a.name);
  for (const Column& c : scan.columns) {
    header.push_back(c.name);
    if (c.display) header.push_back(c.name + "_display");
  }
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';

  for (std::size_t row = 0; row < scan.size(); ++row) {
    bool first = true;
    auto cell = [&](const std::string& s) {
      out << (first ? "" : ",") << s;
      first = false;
    };
    for (double x : scan.point(row)) cell(format_value(x));
    for (const Column& c : scan.columns) {
      cell(format_value(c.values[row]));
      if (c.display) cell(format_display(c.values[row]));
    }
    out << '\n';
  }
}

void write_csv(const std::string& path, const ScanResult& scan) {
  if (path.empty() || path == "-") {
    write_csv(std::cout, scan);
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw OutputError("cannot open output file " + path);
  write_csv(file, scan);
  file.flush();
  if (!file) throw OutputError("failed writing output file " + path);
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::size_t start = line.size() > 1 && line[1] == ' ' ? 2 : 1;
      table.comments.push_back(line.substr(start));
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!have_header) {
      table.header = std::move(cells);
      have_header = true;
      continue;
    }
    if (cells.size() != table.header.size()) {
      throw std::runtime_error("CSV row has " + std::to_string(cells.size()) +
                               " cells, header has " + std::to_string(table.header.size()));
    }
    std::vector<std::optional<double>> row;
    row.reserve(cells.size());
    for (const std::string& c : cells) {
      if (c == kUndefinedMarker) {
        row.emplace_back();
      } else {
        std::size_t used = 0;
        const double v = std::stod(c, &used);
        if (used != c.size()) throw std::runtime_error("malformed CSV number: " + c);
        row.emplace_back(v);
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace upb
