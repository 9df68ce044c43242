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

#include "wigvol/positivity.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "wigvol/errors.h"

namespace wigvol {

namespace {

void require_phi(double phi) {
    if (!std::isfinite(phi) || phi < -kInvariantTol || phi > std::numbers::pi + kInvariantTol) {
        std::ostringstream msg;
        msg << "polar angle phi=" << phi << " outside [0, pi]";
        throw DomainError(msg.str());
    }
}

}  // namespace

BlochVector::BlochVector(std::array<double, 3> xi) : xi_(xi) {
    double n2 = xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2];
    if (!std::isfinite(n2) || n2 > 1 + kInvariantTol) {
        throw DomainError("Bloch vector must lie in the unit ball");
    }
}

double BlochVector::radius() const {
    return std::min(1.0, std::sqrt(xi_[0] * xi_[0] + xi_[1] * xi_[1] + xi_[2] * xi_[2]));
}

StateSpectrum BlochVector::spectrum() const {
    double rho = radius();
    return StateSpectrum({(1 + rho) / 2, (1 - rho) / 2});
}

double min_wigner_value(const StateSpectrum &r, const KernelSpectrum &k) {
    if (r.dim() != k.dim()) {
        throw DomainError("min_wigner_value: state and kernel dimensions differ");
    }
    double total = 0;
    for (size_t i = 0; i < r.dim(); i++) {
        total += r[i] * k[i];
    }
    return total;
}

bool in_positive_cone(const StateSpectrum &r, const KernelSpectrum &k, double tol) {
    return min_wigner_value(r, k) >= -tol;
}

double qutrit_orbit_bound(double phi) {
    require_phi(phi);
    return 1 / (2 * std::numbers::sqrt3 * std::cos(phi / 3));
}

double qutrit_positivity_bound(double phi, double zeta) {
    require_phi(phi);
    if (!std::isfinite(zeta) || zeta < -kInvariantTol || zeta > std::numbers::pi / 3 + kInvariantTol) {
        std::ostringstream msg;
        msg << "moduli angle zeta=" << zeta << " outside [0, pi/3]";
        throw DomainError(msg.str());
    }
    double c = std::cos(phi / 3 + zeta - std::numbers::pi / 3);
    if (c <= 0) {
        return kUnbounded;
    }
    return 1 / (4 * std::numbers::sqrt3 * c);
}

double qubit_wigner(const BlochVector &xi, const std::array<double, 3> &n) {
    double n2 = n[0] * n[0] + n[1] * n[1] + n[2] * n[2];
    if (std::abs(n2 - 1) > kInvariantTol) {
        throw DomainError("qubit_wigner: direction must be a unit vector");
    }
    const auto &x = xi.xi();
    return 0.5 + std::numbers::sqrt3 / 2 * (x[0] * n[0] + x[1] * n[1] + x[2] * n[2]);
}

}  // namespace wigvol
