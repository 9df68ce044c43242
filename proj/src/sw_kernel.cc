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

#include "wigvol/sw_kernel.h"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "wigvol/errors.h"

namespace wigvol {

KernelSpectrum qubit_kernel_spectrum() {
    constexpr double s3 = std::numbers::sqrt3;
    return KernelSpectrum({(1 - s3) / 2, (1 + s3) / 2});
}

KernelSpectrum qutrit_kernel_spectrum(double zeta) {
    if (!std::isfinite(zeta) || zeta < -kInvariantTol || zeta > std::numbers::pi / 3 + kInvariantTol) {
        std::ostringstream msg;
        msg << "qutrit_kernel_spectrum: zeta=" << zeta << " outside [0, pi/3]";
        throw DomainError(msg.str());
    }
    const double s = std::sin(zeta);
    const double c = std::cos(zeta);
    constexpr double s3 = std::numbers::sqrt3;
    return KernelSpectrum({
        1.0 / 3 + 2 / s3 * s + 2.0 / 3 * c,
        1.0 / 3 - 2 / s3 * s + 2.0 / 3 * c,
        1.0 / 3 - 4.0 / 3 * c,
    });
}

KernelSpectrum kernel_spectrum_from_direction(int n, std::span<const double> unit_traceless) {
    if (n < 2 || unit_traceless.size() != static_cast<size_t>(n)) {
        throw DomainError("kernel_spectrum_from_direction: need N >= 2 and a direction with N components");
    }
    double norm2 = std::inner_product(unit_traceless.begin(), unit_traceless.end(), unit_traceless.begin(), 0.0);
    double total = std::accumulate(unit_traceless.begin(), unit_traceless.end(), 0.0);
    if (std::abs(std::sqrt(norm2) - 1) > kRoundTripTol || std::abs(total) > kRoundTripTol) {
        throw DomainError("kernel_spectrum_from_direction: direction must be unit and traceless");
    }
    const double dn = n;
    const double radius = std::sqrt(dn - 1 / dn);
    std::vector<double> values(unit_traceless.size());
    for (size_t i = 0; i < values.size(); i++) {
        values[i] = 1 / dn + radius * unit_traceless[i];
    }
    return KernelSpectrum(std::move(values));
}

std::vector<double> direction_from_kernel(const KernelSpectrum &k) {
    const double dn = static_cast<double>(k.dim());
    const double radius = std::sqrt(dn - 1 / dn);
    std::vector<double> u(k.dim());
    for (size_t i = 0; i < u.size(); i++) {
        u[i] = (k[i] - 1 / dn) / radius;
    }
    return u;
}

KernelSpectrum kernel_spectrum(int n, const ModuliPoint &m) {
    switch (m.kind()) {
        case ModuliPoint::Kind::Unique:
            if (n != 2) {
                throw DomainError("the unique-kernel moduli point only exists for N=2");
            }
            return qubit_kernel_spectrum();
        case ModuliPoint::Kind::Apex:
            if (n != 3) {
                throw DomainError("the apex-angle moduli point only exists for N=3");
            }
            return qutrit_kernel_spectrum(m.zeta());
        case ModuliPoint::Kind::Direction:
            return kernel_spectrum_from_direction(n, m.direction());
    }
    throw DomainError("unknown moduli point kind");
}

}  // namespace wigvol
