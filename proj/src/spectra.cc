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

#include "wigvol/spectra.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>

#include "wigvol/errors.h"

namespace wigvol {

namespace {

void require_finite(std::span<const double> values, const char *what) {
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw DomainError(std::string(what) + ": non-finite entry");
        }
    }
}

}  // namespace

std::string_view metric_name(MetricKind metric) {
    switch (metric) {
        case MetricKind::HS:
            return "hs";
        case MetricKind::Bures:
            return "bures";
        case MetricKind::BKM:
            return "bkm";
    }
    return "?";
}

MetricKind parse_metric(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    if (lower == "hs" || lower == "hilbert-schmidt") {
        return MetricKind::HS;
    }
    if (lower == "bures" || lower == "b") {
        return MetricKind::Bures;
    }
    if (lower == "bkm") {
        return MetricKind::BKM;
    }
    throw DomainError("unknown metric '" + std::string(text) + "' (expected hs, bures or bkm)");
}

StateSpectrum::StateSpectrum(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2) {
        throw DomainError("StateSpectrum: dimension must be at least 2");
    }
    require_finite(values_, "StateSpectrum");
    for (double &v : values_) {
        if (v < -kInvariantTol || v > 1 + kInvariantTol) {
            std::ostringstream msg;
            msg << "StateSpectrum: eigenvalue " << v << " outside [0, 1]";
            throw DomainError(msg.str());
        }
        v = std::clamp(v, 0.0, 1.0);
    }
    double total = std::accumulate(values_.begin(), values_.end(), 0.0);
    if (std::abs(total - 1) > kInvariantTol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "StateSpectrum: eigenvalues sum to " << total << ", not 1";
        throw DomainError(msg.str());
    }
    std::sort(values_.begin(), values_.end(), std::greater<>());
}

StateSpectrum StateSpectrum::maximally_mixed(size_t n) {
    return StateSpectrum(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

KernelSpectrum::KernelSpectrum(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2) {
        throw DomainError("KernelSpectrum: dimension must be at least 2");
    }
    require_finite(values_, "KernelSpectrum");
    double n = static_cast<double>(values_.size());
    double total = std::accumulate(values_.begin(), values_.end(), 0.0);
    double squares = std::inner_product(values_.begin(), values_.end(), values_.begin(), 0.0);
    if (std::abs(total - 1) > kInvariantTol || std::abs(squares - n) > kInvariantTol * n) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "KernelSpectrum: need sum 1 and sum of squares " << n << ", got " << total << " and " << squares;
        throw DomainError(msg.str());
    }
    std::sort(values_.begin(), values_.end());
}

ModuliPoint ModuliPoint::qubit() {
    return ModuliPoint();
}

ModuliPoint ModuliPoint::qutrit(double zeta) {
    constexpr double upper = std::numbers::pi / 3;
    if (!std::isfinite(zeta) || zeta < -kInvariantTol || zeta > upper + kInvariantTol) {
        std::ostringstream msg;
        msg << "qutrit moduli angle zeta=" << zeta << " outside [0, pi/3]";
        throw DomainError(msg.str());
    }
    ModuliPoint p;
    p.kind_ = Kind::Apex;
    p.zeta_ = std::clamp(zeta, 0.0, upper);
    return p;
}

ModuliPoint ModuliPoint::direction(std::vector<double> unit_traceless) {
    if (unit_traceless.size() < 2) {
        throw DomainError("moduli direction needs at least 2 components");
    }
    require_finite(unit_traceless, "moduli direction");
    double norm2 = std::inner_product(unit_traceless.begin(), unit_traceless.end(), unit_traceless.begin(), 0.0);
    double total = std::accumulate(unit_traceless.begin(), unit_traceless.end(), 0.0);
    if (std::abs(std::sqrt(norm2) - 1) > kInvariantTol || std::abs(total) > kInvariantTol) {
        throw DomainError("moduli direction must be a unit vector with zero component sum");
    }
    ModuliPoint p;
    p.kind_ = Kind::Direction;
    p.direction_ = std::move(unit_traceless);
    return p;
}

std::string ModuliPoint::describe() const {
    std::ostringstream out;
    out.precision(12);
    switch (kind_) {
        case Kind::Unique:
            out << "unique";
            break;
        case Kind::Apex:
            out << "zeta=" << zeta_;
            break;
        case Kind::Direction:
            out << "direction=(";
            for (size_t i = 0; i < direction_.size(); i++) {
                out << (i ? "," : "") << direction_[i];
            }
            out << ")";
            break;
    }
    return out.str();
}

QutritPolar::QutritPolar(double r, double phi) : r_(r), phi_(phi) {
    if (!std::isfinite(r) || !std::isfinite(phi) || r < 0 || phi < -kInvariantTol ||
        phi > std::numbers::pi + kInvariantTol) {
        std::ostringstream msg;
        msg << "QutritPolar: need r >= 0 and phi in [0, pi], got r=" << r << " phi=" << phi;
        throw DomainError(msg.str());
    }
    phi_ = std::clamp(phi, 0.0, std::numbers::pi);
}

std::array<double, 3> polar_eigenvalues(double r, double phi) noexcept {
    constexpr double two_pi = 2 * std::numbers::pi;
    const double c = 2 * r / std::numbers::sqrt3;
    return {
        1.0 / 3 - c * std::cos((phi + two_pi) / 3),
        1.0 / 3 - c * std::cos((phi + 2 * two_pi) / 3),
        1.0 / 3 - c * std::cos(phi / 3),
    };
}

StateSpectrum spectrum_from_polar(const QutritPolar &p) {
    auto ev = polar_eigenvalues(p.r(), p.phi());
    for (double v : ev) {
        if (v < -kInvariantTol) {
            std::ostringstream msg;
            msg << "polar point (r=" << p.r() << ", phi=" << p.phi() << ") lies outside the qutrit orbit space";
            throw DomainError(msg.str());
        }
    }
    return StateSpectrum({ev[0], ev[1], ev[2]});
}

QutritPolar polar_from_spectrum(const StateSpectrum &s) {
    if (s.dim() != 3) {
        throw DomainError("polar_from_spectrum requires a qutrit spectrum");
    }
    // Discrete Fourier component of the centred spectrum. With
    // x_k = -c cos(theta + 2 pi k/3) the sum x_0 + x_1 w + x_2 w^2 equals
    // -(3c/2) exp(-i theta), w = exp(2 pi i/3).
    using cd = std::complex<double>;
    const cd w = std::polar(1.0, 2 * std::numbers::pi / 3);
    const double x0 = s[2] - 1.0 / 3;
    const double x1 = s[0] - 1.0 / 3;
    const double x2 = s[1] - 1.0 / 3;
    const cd z = x0 + x1 * w + x2 * w * w;
    const double r = std::abs(z) / std::numbers::sqrt3;
    if (r < 1e-15) {
        return QutritPolar(0, 0);
    }
    double theta = -std::arg(-z);
    theta = std::clamp(theta, 0.0, std::numbers::pi / 3);
    return QutritPolar(r, 3 * theta);
}

}  // namespace wigvol
