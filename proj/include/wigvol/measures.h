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

#ifndef WIGVOL_MEASURES_H
#define WIGVOL_MEASURES_H

#include <span>

#include "wigvol/spectra.h"

namespace wigvol {

/// Morozova-Chentsov weight c_f(x, y) = 1/(y f(x/y)).
///   Bures: 2/(x + y)
///   BKM:   ln(x/y)/(x - y), with the series (1 + u/2 + u^2/3)/x near x = y
///   HS:    1 (the flat metric has no such weight)
double morozova_chentsov(MetricKind metric, double x, double y);

/// Unnormalized orbit-space density of the metric's volume form, as a function
/// of the eigenvalues (any order):
///   HS:         prod_{i<j} (r_i - r_j)^2
///   Bures, BKM: prod_i r_i^{-1/2} prod_{i<j} c_f(r_i, r_j) (r_i - r_j)^2
/// Normalization constants are dropped; only ratios are meaningful.
/// Bures and BKM require every r_i > 0.
double radial_density(MetricKind metric, std::span<const double> r);
double radial_density(MetricKind metric, const StateSpectrum &r);

/// Density as a callable for a fixed metric and dimension.
struct RadialDensity {
    MetricKind metric;
    int n;
    double operator()(std::span<const double> r) const;
};

/// Qubit density in the Bloch radius rho (1/4 of radial_density for Bures/BKM):
///   HS: rho^2, Bures: rho^2/sqrt(1-rho^2), BKM: rho artanh(rho)/sqrt(1-rho^2).
double qubit_radial_density(MetricKind metric, double rho);

/// Antiderivative of qubit_radial_density on [0, R]:
///   HS: R^3/3
///   Bures: (arcsin R - R sqrt(1-R^2))/2
///   BKM: arcsin R - sqrt(1-R^2) artanh R
double qubit_ball_volume(MetricKind metric, double radius);

}  // namespace wigvol

#endif
