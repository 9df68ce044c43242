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

#ifndef WIGVOL_INTEGRATE_H
#define WIGVOL_INTEGRATE_H

#include <optional>
#include <string_view>

#include "wigvol/quadrature.h"
#include "wigvol/spectra.h"

namespace wigvol {

enum class EstimateMethod { ClosedForm, Quadrature, MonteCarlo, Mcmc };

/// "closed", "quad", "mc", "mcmc".
std::string_view method_name(EstimateMethod method);
EstimateMethod parse_method(std::string_view text);

/// An orbit-space volume (or a ratio of two).
///   std_error  - statistical standard error; 0 for deterministic methods.
///   quad_error - quadrature error estimate; 0 for sampling methods.
struct VolumeEstimate {
    double value = 0;
    double std_error = 0;
    EstimateMethod method = EstimateMethod::Quadrature;
    double quad_error = 0;
};

/// Unnormalized volume of the Bloch ball of radius R under the metric.
/// Integrates qubit_radial_density after substituting rho = sin(theta), which
/// removes the pure-state singularity of Bures and BKM.
VolumeEstimate orbit_volume_qubit(MetricKind metric, double radius, const QuadratureSpec &spec = {});

/// Region of the qutrit orbit space: the full ordered simplex, or its
/// Wigner-positive part for the kernel with apex angle zeta.
struct QutritRegion {
    std::optional<double> zeta;

    static QutritRegion full() {
        return {};
    }
    static QutritRegion positive(double zeta) {
        return {zeta};
    }
};

/// Polar-coordinate integrand: radial_density(metric, spectrum(r, phi)) * r.
/// For HS this equals 4 r^7 sin^2(phi).
double qutrit_polar_integrand(MetricKind metric, double r, double phi);

/// 2-D volume over phi in [0, pi] and r in [0, bound(phi)], where bound is the
/// orbit-space boundary, clipped by the positivity boundary for a positive
/// region. The inner variable is substituted as r = bound (1 - t^2) so the
/// r_min^{-1/2} edge singularity of Bures/BKM becomes smooth.
VolumeEstimate orbit_volume_qutrit(MetricKind metric, const QutritRegion &region, const QuadratureSpec &spec = {});

/// General-N volume by nested adaptive integration over the ordered simplex
/// (coordinates r_N <= ... <= r_2, r_1 = 1 - rest). If kernel is given only the
/// Wigner-positive part is integrated; that constraint is linear in the
/// innermost coordinate and clips its lower limit. Cost grows as roughly
/// (#nodes)^(N-1); practical up to N=5.
VolumeEstimate orbit_volume_simplex(MetricKind metric, int n, const KernelSpectrum *kernel,
                                    const QuadratureSpec &spec = {});

}  // namespace wigvol

#endif
