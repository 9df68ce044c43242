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

#ifndef WIGVOL_TESTS_TEST_UTIL_H
#define WIGVOL_TESTS_TEST_UTIL_H

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "wigvol/spectra.h"

namespace wigvol::test_util {

/// Uniform point of the probability simplex (normalized exponentials), unsorted.
inline std::vector<double> random_simplex_point(int n, std::mt19937_64 &rng) {
    std::exponential_distribution<double> exp1(1.0);
    std::vector<double> v(static_cast<size_t>(n));
    double total = 0;
    for (double &x : v) {
        x = exp1(rng);
        total += x;
    }
    for (double &x : v) {
        x /= total;
    }
    return v;
}

inline StateSpectrum random_state_spectrum(int n, std::mt19937_64 &rng) {
    return StateSpectrum(random_simplex_point(n, rng));
}

/// Uniform unit vector in the zero-sum hyperplane of R^n.
inline std::vector<double> random_traceless_direction(int n, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    std::vector<double> u(static_cast<size_t>(n));
    double mean = 0;
    for (double &x : u) {
        x = normal(rng);
        mean += x;
    }
    mean /= n;
    double norm2 = 0;
    for (double &x : u) {
        x -= mean;
        norm2 += x * x;
    }
    double norm = std::sqrt(norm2);
    for (double &x : u) {
        x /= norm;
    }
    return u;
}

/// Composite Simpson rule with `panels` (even) panels. Independent of the
/// library's adaptive Gauss-Kronrod driver.
inline double simpson(const std::function<double(double)> &f, double a, double b, int panels) {
    double h = (b - a) / panels;
    double total = f(a) + f(b);
    for (int i = 1; i < panels; i++) {
        total += f(a + i * h) * ((i % 2) ? 4 : 2);
    }
    return total * h / 3;
}

}  // namespace wigvol::test_util

#endif
