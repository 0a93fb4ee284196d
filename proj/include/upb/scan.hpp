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

#pragma once

#include <cstddef>
#include <deque>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace upb {

struct Axis {
  std::string name;
  std::vector<double> values;
};

/// A value column over the scan grid; empty entries are undefined points
/// (no solution, 0/0 correlator, or a failed solve).
struct Column {
  std::string name;
  std::vector<std::optional<double>> values;
  /// Also emit a rounded `<name>_display` column.
  bool display = false;
};

/// Values over the Cartesian product of the axes, first axis slowest.
struct ScanResult {
  std::vector<Axis> axes;
  /// Deque so references from add_column stay valid as columns are added.
  std::deque<Column> columns;
  /// Ordered key/value pairs written to the CSV comment block.
  std::vector<std::pair<std::string, std::string>> metadata;

  std::size_t size() const;
  /// Grid coordinates of flat point `index`, one per axis.
  std::vector<double> point(std::size_t index) const;
  Column& add_column(std::string name, bool display = false);
  const Column& column(const std::string& name) const;
  void add_metadata(std::string key, std::string value);
  void add_metadata(std::string key, double value);
  /// Throws std::logic_error when a column length differs from size().
  void validate() const;
};

/// Parsed CSV: comment lines without the leading '#', header, and rows.
struct CsvTable {
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::vector<std::optional<double>>> rows;

  std::size_t column_index(const std::string& name) const;
};

inline constexpr const char* kUndefinedMarker = "undefined";

/// Formats with 17 significant digits (%.16e); "undefined" for empty.
std::string format_value(std::optional<double> v);

void write_csv(std::ostream& out, const ScanResult& scan);
/// Writes to `path` ("-" means stdout). Throws OutputError when the file
/// cannot be opened or written.
void write_csv(const std::string& path, const ScanResult& scan);
CsvTable read_csv(std::istream& in);

}  // namespace upb
