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
#include <cstdlib>
#include <vector>

#include "helpers.hpp"
#include "upb/experiments.hpp"
#include "upb/optimize.hpp"
#include "upb/parallel.hpp"

using namespace upb;

TEST_SUITE("parallel") {

TEST_CASE("serial and parallel maps agree element by element") {
  auto fn = [](std::size_t i) { return std::sin(0.1 * static_cast<double>(i)) * std::exp(-1e-3 * i); };
  const auto a = map_points_serial<double>(1000, fn);
  const auto b = map_points_parallel<double>(1000, fn);
  CHECK(a == b);
  CHECK(map_points<double>(1000, fn, Execution::parallel) == a);
  CHECK(map_points_parallel<double>(0, fn).empty());
}

TEST_CASE("thread limit honours the environment") {
  ::setenv("UPB_THREADS", "3", 1);
  CHECK(thread_limit() == 3);
  ::setenv("UPB_THREADS", "1", 1);
  CHECK(thread_limit() == 1);
  ::unsetenv("UPB_THREADS");
  CHECK(thread_limit() >= 1);
  CHECK(to_string(Execution::serial) == "serial");
  CHECK(to_string(Execution::parallel) == "parallel");
}

TEST_CASE("landscape is bitwise identical in serial and parallel") {
  const auto f = experiments::linspace(0.01, 0.2, 4);
  const auto delta = experiments::linspace(-0.2, 0.3, 5);
  experiments::LandscapeOptions serial;
  serial.cutoff = 4;
  serial.exec = Execution::serial;
  experiments::LandscapeOptions parallel = serial;
  parallel.exec = Execution::parallel;
  ::setenv("UPB_THREADS", "4", 1);
  const auto a = experiments::landscape_scan(f, delta, testing::locus_point_04(), testing::cw(0.01), serial);
  const auto b = experiments::landscape_scan(f, delta, testing::locus_point_04(), testing::cw(0.01), parallel);
  ::unsetenv("UPB_THREADS");
  for (const char* name : {"g2_11", "g2_22", "g2_12", "log10_n1", "log10_n2"}) {
    CHECK(a.column(name).values == b.column(name).values);
  }
}

TEST_CASE("overshoot scan is identical in serial and parallel") {
  const std::vector<double> j{0.3, 0.6, 0.9};
  const auto a = experiments::overshoot_scan(j, 1.0, Execution::serial);
  const auto b = experiments::overshoot_scan(j, 1.0, Execution::parallel);
  CHECK(a.column("g2_max").values == b.column("g2_max").values);
}

}  // TEST_SUITE

TEST_SUITE("optimize") {

TEST_CASE("simplex finds the Rosenbrock minimum") {
  const optimize::Objective rosen = [](const std::vector<double>& x) {
    return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
  };
  optimize::SimplexOptions opts;
  opts.max_iterations = 5000;
  opts.initial_step = 0.5;
  const auto m = optimize::nelder_mead_restarts(rosen, {-1.2, 1.0}, 3, opts);
  CHECK(m.converged);
  CHECK(std::abs(m.x[0] - 1.0) < 1e-4);
  CHECK(std::abs(m.x[1] - 1.0) < 1e-4);
  CHECK(m.value < 1e-8);
}

TEST_CASE("simplex in one dimension") {
  const optimize::Objective f = [](const std::vector<double>& x) { return std::pow(x[0] - 0.3, 2); };
  const auto m = optimize::nelder_mead(f, {2.0});
  CHECK(std::abs(m.x[0] - 0.3) < 1e-4);
  CHECK(m.iterations > 0);
}

TEST_CASE("restarts never worsen the result") {
  const optimize::Objective f = [](const std::vector<double>& x) {
    return std::cos(3 * x[0]) + 0.1 * x[0] * x[0] + std::pow(x[1], 2);
  };
  const auto once = optimize::nelder_mead(f, {0.2, 0.5});
  const auto many = optimize::nelder_mead_restarts(f, {0.2, 0.5}, 4);
  CHECK(many.value <= once.value + 1e-15);
}

}  // TEST_SUITE
