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

#ifndef WIGVOL_SW_KERNEL_H
#define WIGVOL_SW_KERNEL_H

#include <span>
#include <vector>

#include "wigvol/spectra.h"

namespace wigvol {

/// The unique qubit kernel spectrum ((1 - sqrt3)/2, (1 + sqrt3)/2).
KernelSpectrum qubit_kernel_spectrum();

/// Qutrit kernel spectrum as a function of the apex angle zeta in [0, pi/3]:
///   1/3 + (2/sqrt3) sin zeta + (2/3) cos zeta,
///   1/3 - (2/sqrt3) sin zeta + (2/3) cos zeta,
///   1/3 - (4/3) cos zeta.
KernelSpectrum qutrit_kernel_spectrum(double zeta);

/// Point of the sphere {sum = 1, sum of squares = N}: 1/N + sqrt(N - 1/N) u.
/// u must have N components, zero sum and unit norm (within kRoundTripTol).
KernelSpectrum kernel_spectrum_from_direction(int n, std::span<const double> unit_traceless);

/// Inverse of kernel_spectrum_from_direction (up to ordering).
std::vector<double> direction_from_kernel(const KernelSpectrum &k);

/// Kernel spectrum for the representation labelled by m in dimension n.
KernelSpectrum kernel_spectrum(int n, const ModuliPoint &m);

}  // namespace wigvol

#endif
