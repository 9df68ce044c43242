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

#ifndef WIGVOL_POSITIVITY_H
#define WIGVOL_POSITIVITY_H

#include <array>
#include <limits>

#include "wigvol/spectra.h"

namespace wigvol {

/// Default slack for positivity tests on analytically exact inputs.
inline constexpr double kPositivityTol = 1e-12;

/// Returned by qutrit_positivity_bound when a ray never leaves the positive cone.
inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

/// Bloch vector of a qubit density matrix (I + xi.sigma)/2.
class BlochVector {
   public:
    explicit BlochVector(std::array<double, 3> xi);
    const std::array<double, 3> &xi() const {
        return xi_;
    }
    double radius() const;
    /// Eigenvalues ((1 + |xi|)/2, (1 - |xi|)/2).
    StateSpectrum spectrum() const;

   private:
    std::array<double, 3> xi_;
};

/// Minimum of tr(rho U Delta U^dagger) over unitaries U: the descending state
/// spectrum paired index-by-index with the ascending kernel spectrum.
double min_wigner_value(const StateSpectrum &r, const KernelSpectrum &k);

/// True iff the Wigner function of every state with spectrum r is >= -tol.
bool in_positive_cone(const StateSpectrum &r, const KernelSpectrum &k, double tol = kPositivityTol);

/// Largest polar radius of the qutrit orbit space along phi: 1/(2 sqrt3 cos(phi/3)).
double qutrit_orbit_bound(double phi);

/// Largest polar radius with a non-negative Wigner function along phi for the
/// kernel with apex angle zeta: 1/(4 sqrt3 cos(phi/3 + zeta - pi/3)), or
/// kUnbounded if the cosine is not positive.
double qutrit_positivity_bound(double phi, double zeta);

/// Qubit Wigner function on the 2-sphere: 1/2 + (sqrt3/2) xi.n.
double qubit_wigner(const BlochVector &xi, const std::array<double, 3> &n);

}  // namespace wigvol

#endif
