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

#include "wigvol/sampling.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "test_util.h"
#include "wigvol/errors.h"
#include "wigvol/measures.h"
#include "wigvol/positivity.h"
#include "wigvol/sw_kernel.h"

using namespace wigvol;

namespace {

const double kEdge = 1 / std::numbers::sqrt3;

bool qubit_positive(const StateSpectrum &s) {
    return min_wigner_value(s, qubit_kernel_spectrum()) >= 0;
}

McSpec mc(long samples, std::uint64_t seed, int workers = 1) {
    McSpec spec;
    spec.samples = samples;
    spec.seed = seed;
    spec.workers = workers;
    return spec;
}

}  // namespace

TEST(sampling, splitmix64_reference_output) {
    std::uint64_t state = 0;
    EXPECT_EQ(splitmix64(state), 0xE220A8397B1DCDAFULL);
    EXPECT_EQ(splitmix64(state), 0x6E789E6AA1B965F4ULL);
    EXPECT_NE(worker_seed(1, 0), worker_seed(1, 1));
    EXPECT_NE(worker_seed(1, 0), worker_seed(2, 0));
}

TEST(sampling, worker_counts_split) {
    EXPECT_EQ(worker_counts(10, 3), (std::vector<long>{4, 3, 3}));
    EXPECT_EQ(worker_counts(2, 4), (std::vector<long>{1, 1, 0, 0}));
    EXPECT_EQ(worker_counts(7, 1), (std::vector<long>{7}));
}

TEST(sampling, spec_validation) {
    EXPECT_THROW(mc(0, 1).validate(), DomainError);
    EXPECT_THROW(mc(10, 1, 0).validate(), DomainError);
    McmcSpec bad;
    bad.thin = 0;
    EXPECT_THROW(bad.validate(), DomainError);
    EXPECT_THROW(sample_hs_spectrum(1, mc(10, 1)), DomainError);
    EXPECT_THROW(estimate_fraction(SamplerKind::Ginibre, MetricKind::Bures, 2, mc(10, 1), {}, qubit_positive),
                 DomainError);
    EXPECT_THROW(estimate_fraction(SamplerKind::Bures, MetricKind::HS, 2, mc(10, 1), {}, qubit_positive),
                 DomainError);
}

TEST(sampling, samples_are_valid_spectra) {
    for (int n = 2; n <= 5; n++) {
        for (const auto &s : sample_bures_spectrum(n, mc(200, 5))) {
            ASSERT_EQ(s.dim(), static_cast<size_t>(n));
        }
        auto run = sample_spectrum_mcmc(MetricKind::BKM, n, mc(200, 5));
        ASSERT_EQ(run.samples.size(), 200u);
    }
}

TEST(sampling, fixed_seed_is_deterministic) {
    for (int workers : {1, 3}) {
        auto a = sample_hs_spectrum(3, mc(1000, 17, workers));
        auto b = sample_hs_spectrum(3, mc(1000, 17, workers));
        EXPECT_EQ(a, b);
        auto c = sample_bures_spectrum(3, mc(1000, 17, workers));
        auto d = sample_bures_spectrum(3, mc(1000, 17, workers));
        EXPECT_EQ(c, d);
        auto e = sample_spectrum_mcmc(MetricKind::BKM, 3, mc(1000, 17, workers));
        auto f = sample_spectrum_mcmc(MetricKind::BKM, 3, mc(1000, 17, workers));
        EXPECT_EQ(e.samples, f.samples);
        EXPECT_EQ(e.acceptance_rate, f.acceptance_rate);
    }
    EXPECT_NE(sample_hs_spectrum(3, mc(100, 1)), sample_hs_spectrum(3, mc(100, 2)));
}

TEST(sampling, workers_follow_fixed_split) {
    // Worker w's stream is the single-worker stream seeded by worker_seed(seed, w).
    auto joint = sample_hs_spectrum(2, mc(10, 99, 3));
    GinibreSampler w0(2, worker_seed(99, 0));
    GinibreSampler w2(2, worker_seed(99, 2));
    EXPECT_EQ(joint[0], w0.next());
    EXPECT_EQ(joint[1], w0.next());
    std::vector<StateSpectrum> tail;
    for (int i = 0; i < 3; i++) {
        tail.push_back(w2.next());
    }
    EXPECT_EQ(std::vector<StateSpectrum>(joint.begin() + 7, joint.end()), tail);
}

TEST(sampling, ginibre_qubit_positive_fraction) {
    auto f = estimate_fraction(SamplerKind::Ginibre, MetricKind::HS, 2, mc(200000, 1), {}, qubit_positive);
    double expected = 1 / (3 * std::numbers::sqrt3);
    EXPECT_NEAR(f.value, expected, 3 * f.std_error);
    EXPECT_NEAR(f.std_error, std::sqrt(expected * (1 - expected) / 200000), 1e-5);
    EXPECT_EQ(f.samples, 200000);
}

TEST(sampling, ginibre_qubit_mean_largest_eigenvalue) {
    // Reference from the radial density rho^2 on [0, 1]: E[(1 + rho)/2].
    double oracle = test_util::simpson([](double rho) { return (1 + rho) / 2 * rho * rho; }, 0, 1, 200) /
                    test_util::simpson([](double rho) { return rho * rho; }, 0, 1, 200);
    EXPECT_NEAR(oracle, 7.0 / 8, 1e-12);
    auto samples = sample_hs_spectrum(2, mc(200000, 2));
    double sum = 0;
    double sum2 = 0;
    for (const auto &s : samples) {
        sum += s[0];
        sum2 += s[0] * s[0];
    }
    double n = static_cast<double>(samples.size());
    double mean = sum / n;
    double se = std::sqrt((sum2 / n - mean * mean) / n);
    EXPECT_NEAR(mean, oracle, 3 * se);
}

TEST(sampling, bures_qubit_radius_distribution) {
    auto samples = sample_bures_spectrum(2, mc(100000, 3));
    std::vector<double> radii;
    for (const auto &s : samples) {
        radii.push_back(s[0] - s[1]);
    }
    std::sort(radii.begin(), radii.end());
    auto cdf = [](double r) {
        return qubit_ball_volume(MetricKind::Bures, std::min(r, 1.0)) / qubit_ball_volume(MetricKind::Bures, 1);
    };
    double n = static_cast<double>(radii.size());
    double ks = 0;
    for (size_t i = 0; i < radii.size(); i++) {
        double f = cdf(radii[i]);
        ks = std::max({ks, (i + 1) / n - f, f - i / n});
    }
    // Asymptotic 1% critical value of the Kolmogorov distribution.
    EXPECT_LT(ks * std::sqrt(n), 1.628);
    for (double r : {0.25, 0.5, 0.75}) {
        double empirical = (std::upper_bound(radii.begin(), radii.end(), r) - radii.begin()) / n;
        EXPECT_NEAR(empirical, cdf(r), 1.628 / std::sqrt(n)) << "R=" << r;
    }
}

TEST(sampling, bures_qubit_positive_fraction) {
    auto f = estimate_fraction(SamplerKind::Bures, MetricKind::Bures, 2, mc(200000, 4), {}, qubit_positive);
    double expected = qubit_ball_volume(MetricKind::Bures, kEdge) / qubit_ball_volume(MetricKind::Bures, 1);
    EXPECT_NEAR(f.value, expected, 3 * f.std_error);
}

TEST(sampling, mcmc_bkm_qubit_positive_fraction) {
    auto f = estimate_fraction(SamplerKind::Mcmc, MetricKind::BKM, 2, mc(200000, 5), {}, qubit_positive);
    EXPECT_NEAR(f.value, 0.0495506, 3 * f.std_error);
    EXPECT_TRUE(f.diagnostics.empty());
}

TEST(sampling, mcmc_and_ginibre_agree_for_hs_qubit) {
    auto chain = estimate_fraction(SamplerKind::Mcmc, MetricKind::HS, 2, mc(200000, 6), {}, qubit_positive);
    auto exact = estimate_fraction(SamplerKind::Ginibre, MetricKind::HS, 2, mc(200000, 7), {}, qubit_positive);
    double combined = std::hypot(chain.std_error, exact.std_error);
    EXPECT_NEAR(chain.value, exact.value, 3 * combined);
}

TEST(sampling, mcmc_hs_qutrit_positive_fraction) {
    auto k = qutrit_kernel_spectrum(std::numbers::pi / 6);
    auto f = estimate_fraction(SamplerKind::Mcmc, MetricKind::HS, 3, mc(500000, 8), {},
                               [&](const StateSpectrum &s) { return min_wigner_value(s, k) >= 0; });
    EXPECT_NEAR(f.value, 21.0 / 31104, 3 * f.std_error);
    EXPECT_GT(f.value, 0);
}

TEST(sampling, mcmc_adapts_into_target_window) {
    McmcSampler chain(MetricKind::Bures, 3, 9);
    for (int i = 0; i < 2000; i++) {
        chain.next();
    }
    EXPECT_GT(chain.acceptance_rate(), 0.2);
    EXPECT_LT(chain.acceptance_rate(), 0.6);
    EXPECT_TRUE(chain.diagnostics().empty());
}

TEST(sampling, mcmc_warns_on_poor_acceptance) {
    McmcSpec spec;
    spec.burn_in = 0;
    spec.initial_scale = 200;
    McmcSampler chain(MetricKind::HS, 3, 10, spec);
    for (int i = 0; i < 500; i++) {
        chain.next();
    }
    EXPECT_LT(chain.acceptance_rate(), 0.1);
    ASSERT_EQ(chain.diagnostics().size(), 1u);
    EXPECT_NE(chain.diagnostics()[0].find("acceptance"), std::string::npos);
}

TEST(sampling, default_sampler_choice) {
    EXPECT_EQ(default_sampler(MetricKind::HS), SamplerKind::Ginibre);
    EXPECT_EQ(default_sampler(MetricKind::Bures), SamplerKind::Bures);
    EXPECT_EQ(default_sampler(MetricKind::BKM), SamplerKind::Mcmc);
}
