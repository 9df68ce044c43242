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

#include "wigvol/indicators.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wigvol/errors.h"
#include "wigvol/measures.h"
#include "wigvol/positivity.h"
#include "wigvol/sw_kernel.h"

namespace wigvol {

namespace {

constexpr double kQubitPositiveRadius = 1 / std::numbers::sqrt3;

// Bloch radius where the qubit pairing 1/2 - rho (pi_2 - pi_1)/2 vanishes.
double qubit_positive_radius(const KernelSpectrum &k) {
    return std::min(1.0, 1 / (k[1] - k[0]));
}

double ratio_error(const VolumeEstimate &num, const VolumeEstimate &den) {
    double q = num.value / den.value;
    double rel = 0;
    if (num.value != 0) {
        rel += num.quad_error / std::abs(num.value);
    }
    rel += den.quad_error / std::abs(den.value);
    return std::abs(q) * rel;
}

void require_qutrit(int n, const char *what) {
    if (n != 3) {
        std::ostringstream msg;
        msg << what << " is only available for N=3 (the moduli space for other N is not parametrized here)";
        throw DomainError(msg.str());
    }
}

IndicatorResult quadrature_indicator(MetricKind metric, int n, const ModuliPoint &m, const KernelSpectrum &k,
                                     const QuadratureSpec &spec) {
    VolumeEstimate num;
    VolumeEstimate den;
    if (n == 2) {
        num = orbit_volume_qubit(metric, qubit_positive_radius(k), spec);
        den = orbit_volume_qubit(metric, 1.0, spec);
    } else if (n == 3 && m.kind() == ModuliPoint::Kind::Apex) {
        num = orbit_volume_qutrit(metric, QutritRegion::positive(m.zeta()), spec);
        den = orbit_volume_qutrit(metric, QutritRegion::full(), spec);
    } else {
        num = orbit_volume_simplex(metric, n, &k, spec);
        den = orbit_volume_simplex(metric, n, nullptr, spec);
    }
    IndicatorResult out;
    out.value = num.value / den.value;
    out.error = ratio_error(num, den);
    out.method = EstimateMethod::Quadrature;
    return out;
}

// zeta -> Q_3(zeta) for the chosen evaluation path. The full-space volume is
// computed once and shared by every evaluation.
class QutritIndicatorFunction {
   public:
    QutritIndicatorFunction(MetricKind metric, const EvalOptions &options) : metric_(metric), options_(options) {
        if (options.method == EstimateMethod::ClosedForm) {
            if (metric != MetricKind::HS) {
                throw DomainError("a closed form for the qutrit indicator exists for the HS metric only");
            }
        } else if (options.method == EstimateMethod::Quadrature) {
            full_ = orbit_volume_qutrit(metric, QutritRegion::full(), options.quad.tightened(0.1));
        } else {
            throw DomainError("moduli averaging and minimization support the closed and quad methods");
        }
    }

    double operator()(double zeta) const {
        zeta = std::clamp(zeta, 0.0, std::numbers::pi / 3);
        if (options_.method == EstimateMethod::ClosedForm) {
            return qutrit_indicator_closed_form(zeta);
        }
        auto pos = orbit_volume_qutrit(metric_, QutritRegion::positive(zeta), options_.quad.tightened(0.1));
        return pos.value / full_.value;
    }

   private:
    MetricKind metric_;
    EvalOptions options_;
    VolumeEstimate full_;
};

}  // namespace

double qubit_indicator_closed_form(MetricKind metric) {
    return qubit_ball_volume(metric, kQubitPositiveRadius) / qubit_ball_volume(metric, 1.0);
}

double qutrit_indicator_closed_form(double zeta) {
    if (!std::isfinite(zeta) || zeta < -kInvariantTol || zeta > std::numbers::pi / 3 + kInvariantTol) {
        std::ostringstream msg;
        msg << "qutrit_indicator_closed_form: zeta=" << zeta << " outside [0, pi/3]";
        throw DomainError(msg.str());
    }
    double c = std::cos(zeta - std::numbers::pi / 6);
    double c2 = c * c;
    return (1 + 20 * c2) / (128 * std::pow(4 * c2 - 1, 5));
}

IndicatorResult global_indicator(MetricKind metric, int n, const ModuliPoint &m, const EvalOptions &options) {
    if (n < 2) {
        throw DomainError("global_indicator: N must be at least 2");
    }
    const KernelSpectrum k = kernel_spectrum(n, m);
    IndicatorResult out;

    switch (options.method) {
        case EstimateMethod::ClosedForm:
            if (n == 2) {
                double radius = qubit_positive_radius(k);
                out.value = qubit_ball_volume(metric, radius) / qubit_ball_volume(metric, 1.0);
            } else if (n == 3 && metric == MetricKind::HS && m.kind() == ModuliPoint::Kind::Apex) {
                out.value = qutrit_indicator_closed_form(m.zeta());
            } else {
                throw DomainError("closed form available for N=2 (all metrics) and N=3 with the HS metric");
            }
            out.method = EstimateMethod::ClosedForm;
            break;
        case EstimateMethod::Quadrature:
            out = quadrature_indicator(metric, n, m, k, options.quad);
            break;
        case EstimateMethod::MonteCarlo:
        case EstimateMethod::Mcmc: {
            SamplerKind sampler =
                options.method == EstimateMethod::Mcmc ? SamplerKind::Mcmc : default_sampler(metric);
            auto frac = estimate_fraction(sampler, metric, n, options.mc, options.mcmc, [&](const StateSpectrum &s) {
                return in_positive_cone(s, k);
            });
            out.value = frac.value;
            out.error = frac.std_error;
            out.samples = frac.samples;
            out.diagnostics = std::move(frac.diagnostics);
            out.method = sampler == SamplerKind::Mcmc ? EstimateMethod::Mcmc : EstimateMethod::MonteCarlo;
            break;
        }
    }
    out.metric = metric;
    out.n = n;
    out.moduli = m;
    return out;
}

IndicatorResult average_indicator(MetricKind metric, int n, const EvalOptions &options) {
    require_qutrit(n, "moduli averaging");
    QutritIndicatorFunction q(metric, options);
    auto integral = integrate_adaptive(q, 0, std::numbers::pi / 3, options.quad);
    IndicatorResult out;
    const double norm = 3 / std::numbers::pi;
    out.value = norm * integral.value;
    out.error = norm * integral.error;
    if (options.method == EstimateMethod::Quadrature) {
        // Inner volumes carry relative error ~ rel_tol/10 each.
        out.error += 0.2 * options.quad.rel_tol * out.value;
    }
    out.metric = metric;
    out.n = n;
    out.method = options.method;
    return out;
}

MinimizeResult minimize_indicator(MetricKind metric, int n, const EvalOptions &options, double zeta_tol) {
    require_qutrit(n, "moduli minimization");
    QutritIndicatorFunction q(metric, options);
    auto best = golden_section_minimize(q, 0, std::numbers::pi / 3, zeta_tol);
    return {best.x, best.value, best.iterations};
}

double qubit_positivity_probability(MetricKind metric, double radius) {
    if (!(radius >= 0) || radius > 1) {
        throw DomainError("qubit_positivity_probability: radius outside [0, 1]");
    }
    if (radius <= kQubitPositiveRadius) {
        return 1;
    }
    return qubit_ball_volume(metric, kQubitPositiveRadius) / qubit_ball_volume(metric, radius);
}

}  // namespace wigvol
