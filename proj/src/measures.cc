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

#include "wigvol/measures.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "wigvol/errors.h"

namespace wigvol {

double morozova_chentsov(MetricKind metric, double x, double y) {
    if (!(x > 0) || !(y > 0) || !std::isfinite(x) || !std::isfinite(y)) {
        std::ostringstream msg;
        msg << "morozova_chentsov: arguments must be positive, got (" << x << ", " << y << ")";
        throw DomainError(msg.str());
    }
    switch (metric) {
        case MetricKind::HS:
            return 1;
        case MetricKind::Bures:
            return 2 / (x + y);
        case MetricKind::BKM: {
            const double u = (x - y) / x;
            if (std::abs(u) < 1e-9) {
                return (1 + u / 2 + u * u / 3) / x;
            }
            if (std::abs(u) < 0.5) {
                return -std::log1p(-u) / (x - y);
            }
            return std::log(x / y) / (x - y);
        }
    }
    return 0;
}

double radial_density(MetricKind metric, std::span<const double> r) {
    const size_t n = r.size();
    double vandermonde = 1;
    if (metric == MetricKind::HS) {
        for (size_t i = 0; i < n; i++) {
            for (size_t j = i + 1; j < n; j++) {
                double d = r[i] - r[j];
                vandermonde *= d * d;
            }
        }
        return vandermonde;
    }

    double diag = 1;
    for (double v : r) {
        if (!(v > 0)) {
            std::ostringstream msg;
            msg << "radial_density: " << metric_name(metric) << " density needs strictly positive eigenvalues, got "
                << v;
            throw DomainError(msg.str());
        }
        diag *= v;
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            double d = r[i] - r[j];
            if (d == 0) {
                return 0;
            }
            vandermonde *= morozova_chentsov(metric, r[i], r[j]) * d * d;
        }
    }
    return vandermonde / std::sqrt(diag);
}

double radial_density(MetricKind metric, const StateSpectrum &r) {
    return radial_density(metric, r.values());
}

double RadialDensity::operator()(std::span<const double> r) const {
    if (r.size() != static_cast<size_t>(n)) {
        throw DomainError("RadialDensity: dimension mismatch");
    }
    return radial_density(metric, r);
}

double qubit_radial_density(MetricKind metric, double rho) {
    const bool pure_ok = metric == MetricKind::HS;
    if (!(rho >= 0) || rho > 1 || (!pure_ok && rho >= 1)) {
        std::ostringstream msg;
        msg << "qubit_radial_density: Bloch radius " << rho << " out of range for " << metric_name(metric);
        throw DomainError(msg.str());
    }
    switch (metric) {
        case MetricKind::HS:
            return rho * rho;
        case MetricKind::Bures:
            return rho * rho / std::sqrt(1 - rho * rho);
        case MetricKind::BKM:
            return rho * std::atanh(rho) / std::sqrt(1 - rho * rho);
    }
    return 0;
}

double qubit_ball_volume(MetricKind metric, double radius) {
    if (!(radius >= 0) || radius > 1) {
        std::ostringstream msg;
        msg << "qubit_ball_volume: radius " << radius << " outside [0, 1]";
        throw DomainError(msg.str());
    }
    const double R = radius;
    switch (metric) {
        case MetricKind::HS:
            return R * R * R / 3;
        case MetricKind::Bures:
            return (std::asin(R) - R * std::sqrt(1 - R * R)) / 2;
        case MetricKind::BKM:
            if (R == 1) {
                return std::numbers::pi / 2;
            }
            return std::asin(R) - std::sqrt(1 - R * R) * std::atanh(R);
    }
    return 0;
}

}  // namespace wigvol
