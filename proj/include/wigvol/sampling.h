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

#ifndef WIGVOL_SAMPLING_H
#define WIGVOL_SAMPLING_H

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "wigvol/spectra.h"

namespace wigvol {

/// Monte Carlo run parameters. Samples are split across workers in fixed
/// order (worker w gets samples/workers, the first samples%workers get one
/// extra); each worker owns a generator seeded by worker_seed(seed, w).
/// Results depend on the worker count but not on thread scheduling.
struct McSpec {
    long samples = 1'000'000;
    std::uint64_t seed = 0;
    int workers = 1;

    void validate() const;
};

/// Metropolis chain settings.
struct McmcSpec {
    long burn_in = 10'000;
    int thin = 10;
    double initial_scale = 0.5;
    /// Burn-in adapts the proposal scale toward this acceptance window.
    double target_low = 0.3;
    double target_high = 0.5;
    int adapt_interval = 100;

    void validate() const;
};

/// SplitMix64 step; advances state and returns the next output.
std::uint64_t splitmix64(std::uint64_t &state);
/// Seed of worker w derived from the master seed.
std::uint64_t worker_seed(std::uint64_t master, int worker);
/// Per-worker sample counts (see McSpec).
std::vector<long> worker_counts(long samples, int workers);

/// Spectra of rho = G G^dagger / tr(G G^dagger), G an N x N complex Ginibre
/// matrix. Distributed according to the Hilbert-Schmidt measure.
class GinibreSampler {
   public:
    GinibreSampler(int n, std::uint64_t seed);
    StateSpectrum next();

   private:
    int n_;
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_;
};

/// Spectra of rho proportional to (I + U) G G^dagger (I + U)^dagger with U Haar
/// random and G Ginibre. Distributed according to the Bures measure.
class BuresSampler {
   public:
    BuresSampler(int n, std::uint64_t seed);
    StateSpectrum next();

   private:
    int n_;
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_;
};

/// Random-walk Metropolis chain whose stationary law on the ordered simplex is
/// radial_density(metric, .). The chain moves in additive log-ratio
/// coordinates z_i = ln(r_i / r_N), where the target picks up the Jacobian
/// prod_i r_i; the density is permutation symmetric, so sorting the unordered
/// state gives the ordered-simplex law. Burn-in runs on the first next().
class McmcSampler {
   public:
    McmcSampler(MetricKind metric, int n, std::uint64_t seed, const McmcSpec &spec = {});
    StateSpectrum next();

    /// Acceptance rate after burn-in (NaN before any post-burn-in step).
    double acceptance_rate() const;
    double scale() const {
        return scale_;
    }
    /// Warnings, e.g. acceptance outside [0.1, 0.9] after adaptation.
    std::vector<std::string> diagnostics() const;

   private:
    bool step();
    double log_target(const std::vector<double> &z, std::vector<double> &r) const;
    void burn_in();

    MetricKind metric_;
    int n_;
    McmcSpec spec_;
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_;
    std::uniform_real_distribution<double> uniform_;
    std::vector<double> z_;
    std::vector<double> r_;
    std::vector<double> z_prop_;
    std::vector<double> r_prop_;
    double log_p_ = 0;
    double scale_;
    bool burned_in_ = false;
    long steps_ = 0;
    long accepted_ = 0;
};

enum class SamplerKind { Ginibre, Bures, Mcmc };

std::vector<StateSpectrum> sample_hs_spectrum(int n, const McSpec &spec);
std::vector<StateSpectrum> sample_bures_spectrum(int n, const McSpec &spec);

struct McmcRun {
    std::vector<StateSpectrum> samples;
    double acceptance_rate = 0;
    std::vector<std::string> diagnostics;
};
McmcRun sample_spectrum_mcmc(MetricKind metric, int n, const McSpec &spec, const McmcSpec &mcmc = {});

/// Fraction of sampled spectra satisfying a predicate.
struct FractionEstimate {
    double value = 0;
    /// Binomial for independent samplers, batch means for Metropolis chains.
    double std_error = 0;
    long samples = 0;
    std::vector<std::string> diagnostics;
};

/// Streams samples from the chosen sampler (Ginibre requires HS, Bures requires
/// Bures, Mcmc targets `metric`) without storing them.
FractionEstimate estimate_fraction(SamplerKind sampler, MetricKind metric, int n, const McSpec &spec,
                                   const McmcSpec &mcmc, const std::function<bool(const StateSpectrum &)> &predicate);

/// Matrix-model sampler for a metric if one exists (HS, Bures), else Mcmc.
SamplerKind default_sampler(MetricKind metric);

}  // namespace wigvol

#endif
