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

#ifndef WIGVOL_INDICATORS_H
#define WIGVOL_INDICATORS_H

#include <optional>
#include <string>
#include <vector>

#include "wigvol/integrate.h"
#include "wigvol/quadrature.h"
#include "wigvol/sampling.h"
#include "wigvol/spectra.h"

namespace wigvol {

/// How an indicator is evaluated.
///   ClosedForm - N=2 (any metric) and N=3 HS only.
///   Quadrature - N=2 in the Bloch radius, N=3 in polar coordinates,
///                N>=4 by nested integration over the ordered simplex.
///   MonteCarlo - matrix-model sampler for HS/Bures, Metropolis for BKM.
///   Mcmc       - Metropolis chain for any metric.
struct EvalOptions {
    EstimateMethod method = EstimateMethod::Quadrature;
    QuadratureSpec quad;
    McSpec mc;
    McmcSpec mcmc;
};

/// Relative volume of the Wigner-positive part of the orbit space.
struct IndicatorResult {
    double value = 0;
    double error = 0;
    MetricKind metric = MetricKind::HS;
    int n = 2;
    /// Empty when the value is a moduli-space average.
    std::optional<ModuliPoint> moduli;
    EstimateMethod method = EstimateMethod::Quadrature;
    long samples = 0;
    std::vector<std::string> diagnostics;
};

IndicatorResult global_indicator(MetricKind metric, int n, const ModuliPoint &m, const EvalOptions &options = {});

/// Qubit indicator Vol(1/sqrt3)/Vol(1) from the closed-form ball volumes.
double qubit_indicator_closed_form(MetricKind metric);

/// HS qutrit indicator (1/128)(1 + 20c^2)/(4c^2 - 1)^5, c = cos(zeta - pi/6).
double qutrit_indicator_closed_form(double zeta);

/// Moduli average (3/pi) * integral_0^{pi/3} Q_3(zeta) dzeta.
/// Supports ClosedForm (HS) and Quadrature; N must be 3.
IndicatorResult average_indicator(MetricKind metric, int n, const EvalOptions &options = {});

struct MinimizeResult {
    double zeta = 0;
    double value = 0;
    int iterations = 0;
};

/// Golden-section minimization of zeta -> Q_3(zeta) on [0, pi/3].
MinimizeResult minimize_indicator(MetricKind metric, int n, const EvalOptions &options = {}, double zeta_tol = 1e-6);

/// Conditional probability that a qubit drawn from the metric's ensemble
/// restricted to the Bloch ball of radius R has a non-negative Wigner function:
/// Vol(min(R, 1/sqrt3))/Vol(R); 1 at R = 0.
double qubit_positivity_probability(MetricKind metric, double radius);

}  // namespace wigvol

#endif
