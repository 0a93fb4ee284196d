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

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "upb/config.hpp"
#include "upb/scan.hpp"
#include "upb/types.hpp"

using namespace upb;

namespace {

RunConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

ScanResult sample_scan() {
  ScanResult s;
  s.axes.push_back({"x", {0.1, 0.2}});
  s.axes.push_back({"y", {1.0, 2.0, 3.0}});
  auto& c = s.add_column("value", true);
  for (std::size_t i = 0; i < s.size(); ++i) c.values[i] = 1.0 / (3.0 + static_cast<double>(i));
  c.values[4].reset();
  s.add_metadata("gamma", 1.0);
  s.add_metadata("note", "plain text");
  return s;
}

}  // namespace

TEST_SUITE("scan") {

TEST_CASE("grid points are row-major over axes") {
  const auto s = sample_scan();
  CHECK(s.size() == 6);
  CHECK(s.point(0) == std::vector<double>{0.1, 1.0});
  CHECK(s.point(2) == std::vector<double>{0.1, 3.0});
  CHECK(s.point(3) == std::vector<double>{0.2, 1.0});
  CHECK_THROWS(s.column("missing"));
  ScanResult bad = s;
  bad.columns[0].values.pop_back();
  CHECK_THROWS_AS(bad.validate(), std::logic_error);
}

TEST_CASE("value formatting") {
  CHECK(format_value(std::nullopt) == kUndefinedMarker);
  CHECK(std::stod(format_value(0.1)) == 0.1);
}

TEST_CASE("CSV round trip keeps full precision") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  ScanResult s;
  s.axes.push_back({"i", {}});
  for (int i = 0; i < 50; ++i) s.axes[0].values.push_back(i);
  auto& c = s.add_column("v");
  for (auto& v : c.values) v = u(rng) * std::pow(10.0, static_cast<int>(u(rng)) % 12);
  std::stringstream buf;
  write_csv(buf, s);
  const auto table = read_csv(buf);
  const std::size_t col = table.column_index("v");
  REQUIRE(table.rows.size() == 50);
  for (std::size_t i = 0; i < 50; ++i) CHECK(*table.rows[i][col] == *c.values[i]);
}

TEST_CASE("CSV layout") {
  std::stringstream buf;
  write_csv(buf, sample_scan());
  const std::string text = buf.str();
  CHECK(text.rfind("# gamma = ", 0) == 0);
  CHECK(text.find("x,y,value,value_display") != std::string::npos);
  CHECK(text.find(kUndefinedMarker) != std::string::npos);
  CHECK(text.find("nan") == std::string::npos);

  const auto table = read_csv(buf);
  CHECK(table.comments.size() == 2);
  CHECK(table.header.size() == 4);
  CHECK_FALSE(table.rows[4][table.column_index("value")].has_value());
  CHECK(std::abs(*table.rows[0][table.column_index("value_display")] - 0.333) < 1e-12);
  CHECK_THROWS(table.column_index("nope"));
}

TEST_CASE("CSV to an unwritable path") {
  CHECK_THROWS_AS(write_csv("/nonexistent-dir/out.csv", sample_scan()), OutputError);
  const auto path = std::filesystem::temp_directory_path() / "upb_scan_test.csv";
  write_csv(path.string(), sample_scan());
  std::ifstream in(path);
  CHECK(read_csv(in).rows.size() == 6);
  std::filesystem::remove(path);
}

}  // TEST_SUITE

TEST_SUITE("config") {

TEST_CASE("full configuration") {
  const auto cfg = parse(R"(
[dimer]
J = 0.4
U = 0.05
Delta = 0.077
gamma = 2.0
Ux = 0.01
delta_Delta = 0.02
delta_gamma = 0.03
delta_U = 0.004

[drive]
F1 = 0.01
phi = 90
ratio = 1.2
sigma = 10

[numerics]
Ncut = 9

[output]
path = out.csv

[grid.F1]
start = 0.01
stop = 0.2
count = 20

[disorder]
axis = delta_gamma
)");
  CHECK(*cfg.hopping == 0.4);
  CHECK(*cfg.kerr == 0.05);
  CHECK(*cfg.detuning == 0.077);
  CHECK(*cfg.decay == 2.0);
  CHECK(*cfg.cross_kerr == 0.01);
  CHECK(*cfg.detuning_mismatch == 0.02);
  CHECK(*cfg.decay_mismatch == 0.03);
  CHECK(*cfg.kerr_mismatch == 0.004);
  CHECK(*cfg.amplitude == 0.01);
  CHECK(*cfg.phase_deg == 90.0);
  CHECK(*cfg.ratio == 1.2);
  CHECK(*cfg.pulse_width == 10.0);
  CHECK(*cfg.cutoff == 9);
  CHECK(*cfg.output_path == "out.csv");
  const auto g = cfg.grids.at("F1").values();
  CHECK(g.size() == 20);
  CHECK(g.front() == 0.01);
  CHECK(g.back() == 0.2);
  CHECK(*cfg.option("disorder", "axis") == "delta_gamma");
  CHECK_FALSE(cfg.option("disorder", "threshold").has_value());
}

TEST_CASE("merge lets later values win") {
  RunConfig base = parse("[dimer]\nJ = 0.4\nU = 0.1\n");
  RunConfig over;
  over.kerr = 0.2;
  over.amplitude = 0.05;
  base.merge(over);
  CHECK(*base.hopping == 0.4);
  CHECK(*base.kerr == 0.2);
  CHECK(*base.amplitude == 0.05);
}

TEST_CASE("grid ranges") {
  GridRange g{0.0, 1.0, 1};
  CHECK(g.values() == std::vector<double>{0.0});
  CHECK_THROWS_AS(GridRange({1.0, 0.0, 5}).validate("x"), ConfigError);
  CHECK_THROWS_AS(GridRange({0.0, 1.0, 0}).validate("x"), ConfigError);
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(parse("[dimer]\nJ = abc\n"), ConfigError);
  CHECK_THROWS_AS(parse("[dimer]\nK = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse("[nonsense]\nx = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse("[grid.J]\ncount = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse("[grid.J]\ncount = -3\n"), ConfigError);
  CHECK_THROWS_AS(parse("[numerics]\nNcut = 7.5\n"), ConfigError);
  CHECK_THROWS_AS(parse("[dimer\nJ = 1\n"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/upb.ini"), ConfigError);
}

}  // TEST_SUITE
