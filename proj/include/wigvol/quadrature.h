// Copyright 2026 The wigvol Authors
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

#ifndef WIGVOL_QUADRATURE_H
#define WIGVOL_QUADRATURE_H

#include <functional>

namespace wigvol {

struct QuadratureSpec {
    double rel_tol = 1e-8;
    double abs_tol = 1e-300;
    int max_subdivisions = 2000;

    /// Throws DomainError unless both tolerances are positive and
    /// max_subdivisions >= 1.
    void validate() const;
    QuadratureSpec tightened(double factor) const;
};

struct QuadratureResult {
    double value = 0;
    double error = 0;
    int subdivisions = 0;
    long evaluations = 0;
};

/// Globally adaptive 21-point Gauss-Kronrod integration of f over [a, b].
/// The interval with the largest error estimate is bisected until the total
/// error is below max(abs_tol, rel_tol |I|). The integrand is never evaluated
/// at the endpoints. Throws ConvergenceError (carrying the best estimate) when
/// max_subdivisions is exhausted.
QuadratureResult integrate_adaptive(const std::function<double(double)> &f, double a, double b,
                                    const QuadratureSpec &spec);

/// Golden-section search for a minimum of f on [a, b]; stops when the bracket
/// is narrower than x_tol.
struct MinimumResult {
    double x = 0;
    double value = 0;
    int iterations = 0;
};
MinimumResult golden_section_minimize(const std::function<double(double)> &f, double a, double b, double x_tol);

}  // namespace wigvol

#endif
