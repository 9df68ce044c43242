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

#include "wigvol/quadrature.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "wigvol/errors.h"

namespace wigvol {

namespace {

struct Panel {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Panel &other) const {
        return error < other.error;
    }
};

// Kronrod-21 and embedded Gauss-10 rule on [a, b].
Panel apply_rule(const std::function<double(double)> &f, double a, double b) {
    using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
    using Gauss = boost::math::quadrature::gauss<double, 10>;
    const auto &x = Kronrod::abscissa();
    const auto &wk = Kronrod::weights();
    const auto &wg = Gauss::weights();

    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double f0 = f(center);
    double kronrod = f0 * wk[0];
    double gauss = 0;
    for (size_t i = 1; i < x.size(); i++) {
        double pair = f(center + half * x[i]) + f(center - half * x[i]);
        kronrod += pair * wk[i];
        if (i % 2 == 1) {
            gauss += pair * wg[i / 2];
        }
    }
    kronrod *= half;
    gauss *= half;
    double err = std::abs(kronrod - gauss);
    if (!std::isfinite(kronrod)) {
        std::ostringstream msg;
        msg << "integrand is not finite on [" << a << ", " << b << "]";
        throw ConvergenceError(msg.str(), kronrod, err);
    }
    return {a, b, kronrod, err};
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(rel_tol > 0) || !(abs_tol > 0) || max_subdivisions < 1) {
        throw DomainError("QuadratureSpec: tolerances must be positive and max_subdivisions >= 1");
    }
}

QuadratureSpec QuadratureSpec::tightened(double factor) const {
    QuadratureSpec s = *this;
    s.rel_tol *= factor;
    s.abs_tol *= factor;
    return s;
}

QuadratureResult integrate_adaptive(const std::function<double(double)> &f, double a, double b,
                                    const QuadratureSpec &spec) {
    spec.validate();
    QuadratureResult result;
    if (a == b) {
        return result;
    }
    double sign = 1;
    if (b < a) {
        std::swap(a, b);
        sign = -1;
    }

    std::priority_queue<Panel> panels;
    Panel first = apply_rule(f, a, b);
    panels.push(first);
    double total = first.value;
    double total_err = first.error;
    result.evaluations = 21;

    auto converged = [&] {
        return total_err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    };
    while (!converged()) {
        if (result.subdivisions >= spec.max_subdivisions) {
            std::ostringstream msg;
            msg << "adaptive quadrature did not reach tolerance within " << spec.max_subdivisions
                << " subdivisions (estimate " << total << ", error " << total_err << ")";
            throw ConvergenceError(msg.str(), sign * total, total_err);
        }
        Panel worst = panels.top();
        double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // Interval cannot be split further in double precision.
            std::ostringstream msg;
            msg << "adaptive quadrature hit the resolution limit near x=" << mid;
            throw ConvergenceError(msg.str(), sign * total, total_err);
        }
        panels.pop();
        Panel left = apply_rule(f, worst.a, mid);
        Panel right = apply_rule(f, mid, worst.b);
        result.evaluations += 42;
        result.subdivisions++;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }

    // Re-sum to shed drift from the incremental updates.
    total = 0;
    total_err = 0;
    while (!panels.empty()) {
        total += panels.top().value;
        total_err += panels.top().error;
        panels.pop();
    }
    result.value = sign * total;
    result.error = total_err;
    return result;
}

MinimumResult golden_section_minimize(const std::function<double(double)> &f, double a, double b, double x_tol) {
    if (!(b > a) || !(x_tol > 0)) {
        throw DomainError("golden_section_minimize: need a < b and x_tol > 0");
    }
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    MinimumResult out;
    while (b - a > x_tol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        out.iterations++;
    }
    out.x = 0.5 * (a + b);
    out.value = f(out.x);
    return out;
}

}  // namespace wigvol
