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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "test_util.h"
#include "wigvol/errors.h"

using namespace wigvol;

TEST(measures, morozova_chentsov_examples) {
    EXPECT_NEAR(morozova_chentsov(MetricKind::Bures, 1, 3), 0.5, 1e-15);
    EXPECT_NEAR(morozova_chentsov(MetricKind::BKM, 2, 2), 0.5, 1e-15);
    EXPECT_NEAR(morozova_chentsov(MetricKind::BKM, std::numbers::e, 1), 1 / (std::numbers::e - 1), 1e-15);
    EXPECT_EQ(morozova_chentsov(MetricKind::HS, 0.2, 0.7), 1.0);
    EXPECT_THROW(morozova_chentsov(MetricKind::Bures, 0, 1), DomainError);
    EXPECT_THROW(morozova_chentsov(MetricKind::BKM, 1, -1), DomainError);
}

TEST(measures, bkm_weight_is_continuous_across_diagonal) {
    for (double x : {1e-6, 0.01, 0.3, 1.0}) {
        for (double rel : {1e-12, 1e-10, 1e-9, 2e-9, 1e-7, 1e-4, 1e-2}) {
            double y = x * (1 + rel);
            double expected = std::log(y / x) / (y - x);
            if (rel < 1e-6) {
                // Direct formula loses digits here; compare with the series.
                double u = (x - y) / x;
                expected = (1 + u / 2 + u * u / 3) / x;
            }
            EXPECT_NEAR(morozova_chentsov(MetricKind::BKM, x, y) / expected, 1, 1e-9) << x << " " << rel;
        }
    }
    // Widely separated arguments.
    EXPECT_NEAR(morozova_chentsov(MetricKind::BKM, 1, 1e-300), std::log(1e300) / (1 - 1e-300), 1e-12);
}

TEST(measures, radial_density_examples) {
    std::vector<double> r = {0.5, 1.0 / 3, 1.0 / 6};
    EXPECT_NEAR(radial_density(MetricKind::HS, r), 1.0 / 11664, 1e-18);
    for (auto m : kAllMetrics) {
        std::vector<double> degenerate = {0.4, 0.4, 0.2};
        EXPECT_EQ(radial_density(m, degenerate), 0.0) << metric_name(m);
    }
    std::vector<double> boundary = {0.7, 0.3, 0.0};
    EXPECT_THROW(radial_density(MetricKind::Bures, boundary), DomainError);
    EXPECT_THROW(radial_density(MetricKind::BKM, boundary), DomainError);
    EXPECT_NEAR(radial_density(MetricKind::HS, boundary), 0.16 * 0.49 * 0.09, 1e-15);
}

TEST(measures, qubit_density_examples) {
    EXPECT_NEAR(qubit_radial_density(MetricKind::HS, 0.5), 0.25, 1e-15);
    EXPECT_EQ(qubit_radial_density(MetricKind::BKM, 0), 0.0);
    EXPECT_NO_THROW(qubit_radial_density(MetricKind::HS, 1));
    EXPECT_THROW(qubit_radial_density(MetricKind::Bures, 1), DomainError);
    EXPECT_THROW(qubit_radial_density(MetricKind::BKM, 1), DomainError);
    EXPECT_THROW(qubit_radial_density(MetricKind::HS, -0.1), DomainError);
}

TEST(measures, qubit_ball_volume_examples) {
    EXPECT_NEAR(qubit_ball_volume(MetricKind::HS, 1), 1.0 / 3, 1e-15);
    EXPECT_NEAR(qubit_ball_volume(MetricKind::Bures, 1), std::numbers::pi / 4, 1e-15);
    EXPECT_NEAR(qubit_ball_volume(MetricKind::BKM, 1), std::numbers::pi / 2, 1e-15);
    double edge = 1 / std::numbers::sqrt3;
    double bures = qubit_ball_volume(MetricKind::Bures, edge) / qubit_ball_volume(MetricKind::Bures, 1);
    double bkm = qubit_ball_volume(MetricKind::BKM, edge) / qubit_ball_volume(MetricKind::BKM, 1);
    EXPECT_NEAR(bures, 2 / std::numbers::pi * (std::asin(edge) - std::sqrt(2.0) / 3), 1e-14);
    EXPECT_NEAR(bures, 0.09172, 1e-5);
    double arcoth_sqrt3 = std::atanh(1 / std::numbers::sqrt3);
    EXPECT_NEAR(bkm, 2 / std::numbers::pi * (std::asin(edge) - std::sqrt(2.0 / 3) * arcoth_sqrt3), 1e-14);
    EXPECT_NEAR(bkm, 0.0495506, 1e-7);
    EXPECT_THROW(qubit_ball_volume(MetricKind::HS, 1.1), DomainError);
}

TEST(measures, ball_volume_is_antiderivative_of_density) {
    const double h = 2e-4;
    for (auto m : kAllMetrics) {
        for (int i = 0; i < 100; i++) {
            double rho = 0.05 + 0.9 * i / 99;
            auto v = [&](double x) { return qubit_ball_volume(m, x); };
            double derivative = (-v(rho + 2 * h) + 8 * v(rho + h) - 8 * v(rho - h) + v(rho - 2 * h)) / (12 * h);
            double density = qubit_radial_density(m, rho);
            ASSERT_NEAR(derivative / density, 1, 1e-8) << metric_name(m) << " rho=" << rho;
        }
    }
}

TEST(measures, two_level_density_is_proportional_to_qubit_density) {
    for (auto m : kAllMetrics) {
        double first_ratio = 0;
        for (int i = 1; i <= 99; i++) {
            double rho = 0.01 * i;
            std::vector<double> r = {(1 + rho) / 2, (1 - rho) / 2};
            double ratio = radial_density(m, r) / qubit_radial_density(m, rho);
            if (i == 1) {
                first_ratio = ratio;
            }
            ASSERT_NEAR(ratio / first_ratio, 1, 1e-10) << metric_name(m) << " rho=" << rho;
        }
        if (m != MetricKind::HS) {
            EXPECT_NEAR(first_ratio, 4, 1e-10);
        }
    }
}

TEST(measures, reduced_two_level_density_integrates_to_ball_volume) {
    for (auto m : {MetricKind::Bures, MetricKind::BKM}) {
        for (double radius : {0.3, 1 / std::numbers::sqrt3, 0.9}) {
            // rho = sin(theta) keeps the integrand smooth near the pure states.
            auto integrand = [&](double theta) {
                double rho = std::sin(theta);
                std::vector<double> r = {(1 + rho) / 2, (1 - rho) / 2};
                return rho == 0 ? 0.0 : radial_density(m, r) / 4 * std::cos(theta);
            };
            double numeric = test_util::simpson(integrand, 0, std::asin(radius), 2000);
            EXPECT_NEAR(numeric / qubit_ball_volume(m, radius), 1, 1e-10) << metric_name(m) << " R=" << radius;
        }
    }
}

TEST(measures, hs_density_is_squared_vandermonde_determinant) {
    std::mt19937_64 rng(41);
    for (int n = 2; n <= 6; n++) {
        for (int trial = 0; trial < 200; trial++) {
            auto r = test_util::random_simplex_point(n, rng);
            Eigen::MatrixXd v(n, n);
            for (int i = 0; i < n; i++) {
                for (int j = 0; j < n; j++) {
                    v(i, j) = std::pow(r[static_cast<size_t>(i)], j);
                }
            }
            double det = v.fullPivLu().determinant();
            ASSERT_NEAR(radial_density(MetricKind::HS, r) / (det * det), 1, 1e-8) << "n=" << n;
        }
    }
}

TEST(measures, densities_are_permutation_symmetric) {
    std::mt19937_64 rng(42);
    for (auto m : kAllMetrics) {
        for (int n = 2; n <= 5; n++) {
            for (int trial = 0; trial < 500; trial++) {
                auto r = test_util::random_simplex_point(n, rng);
                double base = radial_density(m, r);
                std::shuffle(r.begin(), r.end(), rng);
                ASSERT_NEAR(radial_density(m, r) / base, 1, 1e-12);
                ASSERT_GT(base, 0);
            }
        }
    }
}

TEST(measures, state_spectrum_overload_and_functor_agree) {
    StateSpectrum s({0.5, 0.3, 0.2});
    RadialDensity bures{MetricKind::Bures, 3};
    EXPECT_EQ(bures(s.values()), radial_density(MetricKind::Bures, s));
    std::vector<double> wrong = {0.5, 0.5};
    EXPECT_THROW(bures(wrong), DomainError);
}
