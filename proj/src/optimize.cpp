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

#include "upb/optimize.hpp"

#include <cmath>
#include <stdexcept>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

namespace upb::optimize {

namespace {

double trampoline(const gsl_vector* v, void* params) {
  const auto& f = *static_cast<const Objective*>(params);
  std::vector<double> x(v->size);
  for (std::size_t i = 0; i < v->size; ++i) x[i] = gsl_vector_get(v, i);
  const double y = f(x);
  return std::isfinite(y) ? y : GSL_POSINF;
}

}  // namespace

Minimum nelder_mead(const Objective& f, std::vector<double> start, SimplexOptions opts) {
  if (start.empty()) throw std::invalid_argument("nelder_mead needs a non-empty start");
  static const gsl_error_handler_t* previous = gsl_set_error_handler_off();
  (void)previous;
  const std::size_t n = start.size();
  gsl_multimin_function fn{&trampoline, n, const_cast<Objective*>(&f)};
  gsl_vector* x = gsl_vector_alloc(n);
  gsl_vector* step = gsl_vector_alloc(n);
  for (std::size_t i = 0; i < n; ++i) {
    gsl_vector_set(x, i, start[i]);
    gsl_vector_set(step, i, opts.initial_step);
  }
  gsl_multimin_fminimizer* s =
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n);
  gsl_multimin_fminimizer_set(s, &fn, x, step);

  Minimum out;
  int status = GSL_CONTINUE;
  while (status == GSL_CONTINUE && out.iterations < opts.max_iterations) {
    ++out.iterations;
    if (gsl_multimin_fminimizer_iterate(s) != GSL_SUCCESS) break;
    status = gsl_multimin_test_size(gsl_multimin_fminimizer_size(s), opts.size_tolerance);
  }
  out.converged = status == GSL_SUCCESS;
  out.x.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.x[i] = gsl_vector_get(s->x, i);
  out.value = s->fval;

  gsl_multimin_fminimizer_free(s);
  gsl_vector_free(step);
  gsl_vector_free(x);
  return out;
}

Minimum nelder_mead_restarts(const Objective& f, std::vector<double> start,
                             int restarts, SimplexOptions opts) {
  Minimum best = nelder_mead(f, std::move(start), opts);
  for (int k = 0; k < restarts; ++k) {
    Minimum next = nelder_mead(f, best.x, opts);
    if (!(next.value < best.value)) {
      best.iterations += next.iterations;
      best.converged = best.converged || next.converged;
      break;
    }
    next.iterations += best.iterations;
    best = std::move(next);
  }
  return best;
}

}  // namespace upb::optimize
