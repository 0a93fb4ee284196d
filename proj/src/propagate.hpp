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

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "upb/lindblad.hpp"

// Adaptive Dormand-Prince 5(4) with dense output, sampled on a time grid.

namespace upb::lindblad::detail {

using State = std::vector<cplx>;

template <class Rhs, class Observer>
void propagate(Rhs&& rhs, State& state, std::span<const double> times,
               const IntegratorOptions& opts, Observer&& observe) {
  namespace odeint = boost::numeric::odeint;
  if (times.empty()) return;
  double reached = times.front();
  std::size_t index = 0;
  auto stepper = odeint::make_dense_output(opts.atol, opts.rtol,
                                           odeint::runge_kutta_dopri5<State>());
  auto observer = [&](const State& x, double t) {
    for (const cplx& v : x) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw PropagationError("non-finite state in master-equation propagation",
                               reached);
      }
    }
    observe(index++, x);
    reached = t;
  };
  try {
    odeint::integrate_times(stepper, rhs, state, times.begin(), times.end(),
                            opts.initial_step, observer,
                            odeint::max_step_checker(static_cast<int>(opts.max_steps)));
  } catch (const odeint::no_progress_error& e) {
    throw PropagationError(std::string("integrator made no progress: ") + e.what(),
                           reached);
  } catch (const odeint::step_adjustment_error& e) {
    throw PropagationError(std::string("step size underflow: ") + e.what(), reached);
  }
}

}  // namespace upb::lindblad::detail
