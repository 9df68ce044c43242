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

#include "wigvol/integrate.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <vector>

#include "wigvol/errors.h"
#include "wigvol/measures.h"
#include "wigvol/positivity.h"

namespace wigvol {

std::string_view method_name(EstimateMethod method) {
    switch (method) {
        case EstimateMethod::ClosedForm:
            return "closed";
        case EstimateMethod::Quadrature:
            return "quad";
        case EstimateMethod::MonteCarlo:
            return "mc";
        case EstimateMethod::Mcmc:
            return "mcmc";
    }
    return "?";
}

EstimateMethod parse_method(std::string_view text) {
    if (text == "closed" || text == "closed-form") {
        return EstimateMethod::ClosedForm;
    }
    if (text == "quad" || text == "quadrature") {
        return EstimateMethod::Quadrature;
    }
    if (text == "mc") {
        return EstimateMethod::MonteCarlo;
    }
    if (text == "mcmc") {
        return EstimateMethod::Mcmc;
    }
    throw DomainError("unknown method '" + std::string(text) + "' (expected closed, quad, mc or mcmc)");
}

VolumeEstimate orbit_volume_qubit(MetricKind metric, double radius, const QuadratureSpec &spec) {
    if (!(radius >= 0) || radius > 1) {
        throw DomainError("orbit_volume_qubit: radius outside [0, 1]");
    }
    // rho = sin(theta); each integrand is qubit_radial_density(sin t) cos t,
    // written so that nothing cancels near theta = pi/2.
    std::function<double(double)> f;
    switch (metric) {
        case MetricKind::HS:
            f = [](double t) {
                double s = std::sin(t);
                return s * s * std::cos(t);
            };
            break;
        case MetricKind::Bures:
            f = [](double t) {
                double s = std::sin(t);
                return s * s;
            };
            break;
        case MetricKind::BKM:
            f = [](double t) {
                double s = std::sin(t);
                // artanh(sin t) = ln((1 + sin t)/cos t)
                return s * std::log((1 + s) / std::cos(t));
            };
            break;
    }
    auto q = integrate_adaptive(f, 0, std::asin(radius), spec);
    return {q.value, 0, EstimateMethod::Quadrature, q.error};
}

double qutrit_polar_integrand(MetricKind metric, double r, double phi) {
    auto ev = polar_eigenvalues(r, phi);
    return radial_density(metric, ev) * r;
}

VolumeEstimate orbit_volume_qutrit(MetricKind metric, const QutritRegion &region, const QuadratureSpec &spec) {
    spec.validate();
    if (region.zeta && (*region.zeta < -kInvariantTol || *region.zeta > std::numbers::pi / 3 + kInvariantTol)) {
        throw DomainError("orbit_volume_qutrit: zeta outside [0, pi/3]");
    }
    const QuadratureSpec inner_spec = spec.tightened(0.1);
    constexpr double two_pi = 2 * std::numbers::pi;
    constexpr double s3 = std::numbers::sqrt3;

    auto inner = [&](double phi) {
        double bound = qutrit_orbit_bound(phi);
        if (region.zeta) {
            bound = std::min(bound, qutrit_positivity_bound(phi, *region.zeta));
        }
        const std::array<double, 3> cosines = {
            std::cos((phi + two_pi) / 3),
            std::cos((phi + 2 * two_pi) / 3),
            std::cos(phi / 3),
        };
        // Eigenvalues on the boundary; at the orbit boundary the smallest one
        // is zero up to rounding.
        std::array<double, 3> at_bound;
        for (int k = 0; k < 3; k++) {
            at_bound[k] = std::max(0.0, 1.0 / 3 - 2 * bound / s3 * cosines[k]);
        }
        auto g = [&](double t) {
            // r = bound (1 - t^2); lambda_k(r) = lambda_k(bound) + (2 bound t^2/sqrt3) cos_k
            const double t2 = t * t;
            const double r = bound * (1 - t2);
            std::array<double, 3> ev;
            for (int k = 0; k < 3; k++) {
                ev[k] = at_bound[k] + 2 * bound * t2 / s3 * cosines[k];
            }
            if (metric != MetricKind::HS && (ev[0] <= 0 || ev[1] <= 0 || ev[2] <= 0)) {
                return 0.0;
            }
            return radial_density(metric, ev) * r * 2 * t * bound;
        };
        return integrate_adaptive(g, 0, 1, inner_spec).value;
    };
    auto q = integrate_adaptive(inner, 0, std::numbers::pi, spec);
    return {q.value, 0, EstimateMethod::Quadrature, q.error + inner_spec.rel_tol * std::abs(q.value)};
}

namespace {

class SimplexIntegrator {
   public:
    SimplexIntegrator(MetricKind metric, int n, const KernelSpectrum *kernel, const QuadratureSpec &spec)
        : metric_(metric), n_(n), kernel_(kernel), outer_spec_(spec), inner_spec_(spec.tightened(0.1)), r_(n, 0.0) {
    }

    QuadratureResult outer() {
        return level(n_, 1.0, true);
    }

   private:
    // Integrates over r_k (1-based) given r_{k+1..N} fixed and remaining mass.
    QuadratureResult level(int k, double remaining, bool outermost) {
        const size_t idx = static_cast<size_t>(k - 1);
        double lo = (k == n_) ? 0.0 : r_[idx + 1];
        double hi = remaining / k;
        if (k == 2 && kernel_ != nullptr) {
            const auto &pi = *kernel_;
            double rest = pi[0] * remaining;
            for (int j = 3; j <= n_; j++) {
                rest += r_[j - 1] * pi[j - 1];
            }
            double slope = pi[1] - pi[0];
            if (slope > 0) {
                lo = std::max(lo, -rest / slope);
            } else if (rest < 0) {
                return {};
            }
        }
        if (!(hi > lo)) {
            return {};
        }
        const QuadratureSpec &spec = outermost ? outer_spec_ : inner_spec_;

        auto body = [&](double rk) {
            r_[idx] = rk;
            if (k == 2) {
                r_[0] = remaining - rk;
                if (metric_ != MetricKind::HS && !(r_[0] > 0 && r_[n_ - 1] > 0)) {
                    return 0.0;
                }
                return radial_density(metric_, r_);
            }
            return level(k - 1, remaining - rk, false).value;
        };

        if (k == n_) {
            // r_N = s^2 removes the r_N^{-1/2} singularity of the monotone metrics.
            auto sub = [&](double s) {
                return body(s * s) * 2 * s;
            };
            return integrate_adaptive(sub, std::sqrt(lo), std::sqrt(hi), spec);
        }
        return integrate_adaptive(body, lo, hi, spec);
    }

    MetricKind metric_;
    int n_;
    const KernelSpectrum *kernel_;
    QuadratureSpec outer_spec_;
    QuadratureSpec inner_spec_;
    std::vector<double> r_;
};

}  // namespace

VolumeEstimate orbit_volume_simplex(MetricKind metric, int n, const KernelSpectrum *kernel,
                                    const QuadratureSpec &spec) {
    spec.validate();
    if (n < 2) {
        throw DomainError("orbit_volume_simplex: N must be at least 2");
    }
    if (kernel != nullptr && kernel->dim() != static_cast<size_t>(n)) {
        throw DomainError("orbit_volume_simplex: kernel dimension differs from N");
    }
    SimplexIntegrator integrator(metric, n, kernel, spec);
    auto q = integrator.outer();
    return {q.value, 0, EstimateMethod::Quadrature, q.error + spec.rel_tol * 0.1 * std::abs(q.value)};
}

}  // namespace wigvol
