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

#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include <Eigen/Dense>

#include "wigvol/errors.h"
#include "wigvol/measures.h"

namespace wigvol {

namespace {

using CMatrix = Eigen::MatrixXcd;

CMatrix ginibre(int n, std::mt19937_64 &rng, std::normal_distribution<double> &normal) {
    CMatrix g(n, n);
    for (int j = 0; j < n; j++) {
        for (int i = 0; i < n; i++) {
            double re = normal(rng);
            double im = normal(rng);
            g(i, j) = {re, im};
        }
    }
    return g;
}

StateSpectrum spectrum_of_gram(const CMatrix &a) {
    CMatrix rho = a * a.adjoint();
    rho /= rho.trace().real();
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho, Eigen::EigenvaluesOnly);
    const auto &ev = solver.eigenvalues();
    std::vector<double> values(ev.data(), ev.data() + ev.size());
    // Eigenvalues of a normalized Gram matrix sum to 1 up to rounding; absorb
    // the residual so the simplex invariant holds exactly.
    double total = 0;
    for (double v : values) {
        total += v;
    }
    for (double &v : values) {
        v /= total;
    }
    return StateSpectrum(std::move(values));
}

void require_dimension(int n) {
    if (n < 2) {
        throw DomainError("samplers need N >= 2");
    }
}

// Runs job(worker, count) for every worker on its own thread and rethrows the
// first failure in worker order.
template <typename Job>
void run_workers(const McSpec &spec, Job job) {
    auto counts = worker_counts(spec.samples, spec.workers);
    std::vector<std::exception_ptr> errors(counts.size());
    std::vector<std::thread> threads;
    threads.reserve(counts.size());
    for (size_t w = 0; w < counts.size(); w++) {
        threads.emplace_back([&, w] {
            try {
                job(static_cast<int>(w), counts[w]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &t : threads) {
        t.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace

void McSpec::validate() const {
    if (samples < 1) {
        throw DomainError("McSpec: samples must be >= 1");
    }
    if (workers < 1) {
        throw DomainError("McSpec: workers must be >= 1");
    }
}

void McmcSpec::validate() const {
    if (burn_in < 0 || thin < 1 || !(initial_scale > 0) || adapt_interval < 1 || !(target_low < target_high)) {
        throw DomainError("McmcSpec: invalid chain settings");
    }
}

std::uint64_t splitmix64(std::uint64_t &state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t worker_seed(std::uint64_t master, int worker) {
    std::uint64_t state = master;
    std::uint64_t out = 0;
    for (int i = 0; i <= worker; i++) {
        out = splitmix64(state);
    }
    return out;
}

std::vector<long> worker_counts(long samples, int workers) {
    std::vector<long> counts(static_cast<size_t>(workers), samples / workers);
    for (long i = 0; i < samples % workers; i++) {
        counts[static_cast<size_t>(i)]++;
    }
    return counts;
}

GinibreSampler::GinibreSampler(int n, std::uint64_t seed) : n_(n), rng_(seed) {
    require_dimension(n);
}

StateSpectrum GinibreSampler::next() {
    return spectrum_of_gram(ginibre(n_, rng_, normal_));
}

BuresSampler::BuresSampler(int n, std::uint64_t seed) : n_(n), rng_(seed) {
    require_dimension(n);
}

StateSpectrum BuresSampler::next() {
    // Haar unitary from the QR decomposition of a Ginibre matrix, with the
    // phases of diag(R) divided out.
    CMatrix z = ginibre(n_, rng_, normal_);
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ();
    for (int j = 0; j < n_; j++) {
        std::complex<double> d = qr.matrixQR()(j, j);
        q.col(j) *= d / std::abs(d);
    }
    CMatrix g = ginibre(n_, rng_, normal_);
    CMatrix a = (CMatrix::Identity(n_, n_) + q) * g;
    return spectrum_of_gram(a);
}

McmcSampler::McmcSampler(MetricKind metric, int n, std::uint64_t seed, const McmcSpec &spec)
    : metric_(metric),
      n_(n),
      spec_(spec),
      rng_(seed),
      uniform_(0.0, 1.0),
      z_(static_cast<size_t>(n - 1)),
      r_(static_cast<size_t>(n)),
      z_prop_(static_cast<size_t>(n - 1)),
      r_prop_(static_cast<size_t>(n)),
      scale_(spec.initial_scale) {
    require_dimension(n);
    spec_.validate();
    // The uniform point is a zero of every density (equal eigenvalues), so
    // start from a jittered point with finite log density.
    for (int attempt = 0;; attempt++) {
        for (double &v : z_) {
            v = normal_(rng_);
        }
        log_p_ = log_target(z_, r_);
        if (std::isfinite(log_p_)) {
            break;
        }
        if (attempt > 1000) {
            throw DomainError("McmcSampler: could not find a starting point with positive density");
        }
    }
}

double McmcSampler::log_target(const std::vector<double> &z, std::vector<double> &r) const {
    // Inverse additive log-ratio transform, shifted for stability.
    double m = 0;
    for (double v : z) {
        m = std::max(m, v);
    }
    double denom = std::exp(-m);
    for (double v : z) {
        denom += std::exp(v - m);
    }
    const double log_norm = m + std::log(denom);
    double log_jacobian = 0;
    for (size_t i = 0; i + 1 < r.size(); i++) {
        r[i] = std::exp(z[i] - log_norm);
        log_jacobian += z[i] - log_norm;
    }
    r.back() = std::exp(-log_norm);
    log_jacobian += -log_norm;
    for (double v : r) {
        if (!(v > 0)) {
            return -std::numeric_limits<double>::infinity();
        }
    }
    double p = radial_density(metric_, r);
    if (!(p > 0) || !std::isfinite(p)) {
        return -std::numeric_limits<double>::infinity();
    }
    return std::log(p) + log_jacobian;
}

bool McmcSampler::step() {
    for (size_t i = 0; i < z_.size(); i++) {
        z_prop_[i] = z_[i] + scale_ * normal_(rng_);
    }
    double log_q = log_target(z_prop_, r_prop_);
    double u = uniform_(rng_);
    if (std::isfinite(log_q) && std::log(u) < log_q - log_p_) {
        std::swap(z_, z_prop_);
        std::swap(r_, r_prop_);
        log_p_ = log_q;
        return true;
    }
    return false;
}

void McmcSampler::burn_in() {
    long window_accepted = 0;
    for (long i = 1; i <= spec_.burn_in; i++) {
        window_accepted += step();
        if (i % spec_.adapt_interval == 0) {
            double rate = static_cast<double>(window_accepted) / spec_.adapt_interval;
            if (rate < spec_.target_low) {
                scale_ *= 0.8;
            } else if (rate > spec_.target_high) {
                scale_ *= 1.25;
            }
            window_accepted = 0;
        }
    }
    burned_in_ = true;
}

StateSpectrum McmcSampler::next() {
    if (!burned_in_) {
        burn_in();
    }
    for (int i = 0; i < spec_.thin; i++) {
        accepted_ += step();
        steps_++;
    }
    // r_ sums to 1 up to rounding; renormalize before validation.
    double total = 0;
    for (double v : r_) {
        total += v;
    }
    std::vector<double> values(r_);
    for (double &v : values) {
        v /= total;
    }
    return StateSpectrum(std::move(values));
}

double McmcSampler::acceptance_rate() const {
    if (steps_ == 0) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return static_cast<double>(accepted_) / static_cast<double>(steps_);
}

std::vector<std::string> McmcSampler::diagnostics() const {
    std::vector<std::string> out;
    double rate = acceptance_rate();
    if (std::isfinite(rate) && (rate < 0.1 || rate > 0.9)) {
        std::ostringstream msg;
        msg << "acceptance rate " << rate << " outside [0.1, 0.9] after adaptation (scale " << scale_ << ")";
        out.push_back(msg.str());
    }
    return out;
}

namespace {

template <typename Sampler>
std::vector<StateSpectrum> collect(int n, const McSpec &spec) {
    spec.validate();
    require_dimension(n);
    std::vector<std::vector<StateSpectrum>> parts(static_cast<size_t>(spec.workers));
    run_workers(spec, [&](int w, long count) {
        Sampler sampler(n, worker_seed(spec.seed, w));
        auto &out = parts[static_cast<size_t>(w)];
        out.reserve(static_cast<size_t>(count));
        for (long i = 0; i < count; i++) {
            out.push_back(sampler.next());
        }
    });
    std::vector<StateSpectrum> all;
    all.reserve(static_cast<size_t>(spec.samples));
    for (auto &part : parts) {
        for (auto &s : part) {
            all.push_back(std::move(s));
        }
    }
    return all;
}

}  // namespace

std::vector<StateSpectrum> sample_hs_spectrum(int n, const McSpec &spec) {
    return collect<GinibreSampler>(n, spec);
}

std::vector<StateSpectrum> sample_bures_spectrum(int n, const McSpec &spec) {
    return collect<BuresSampler>(n, spec);
}

McmcRun sample_spectrum_mcmc(MetricKind metric, int n, const McSpec &spec, const McmcSpec &mcmc) {
    spec.validate();
    mcmc.validate();
    require_dimension(n);
    const size_t workers = static_cast<size_t>(spec.workers);
    std::vector<std::vector<StateSpectrum>> parts(workers);
    std::vector<double> rates(workers);
    std::vector<std::vector<std::string>> notes(workers);
    run_workers(spec, [&](int w, long count) {
        McmcSampler chain(metric, n, worker_seed(spec.seed, w), mcmc);
        auto &out = parts[static_cast<size_t>(w)];
        out.reserve(static_cast<size_t>(count));
        for (long i = 0; i < count; i++) {
            out.push_back(chain.next());
        }
        rates[static_cast<size_t>(w)] = chain.acceptance_rate();
        notes[static_cast<size_t>(w)] = chain.diagnostics();
    });
    McmcRun run;
    run.samples.reserve(static_cast<size_t>(spec.samples));
    for (size_t w = 0; w < workers; w++) {
        for (auto &s : parts[w]) {
            run.samples.push_back(std::move(s));
        }
        run.acceptance_rate += rates[w] / static_cast<double>(workers);
        for (auto &note : notes[w]) {
            run.diagnostics.push_back("worker " + std::to_string(w) + ": " + note);
        }
    }
    return run;
}

SamplerKind default_sampler(MetricKind metric) {
    switch (metric) {
        case MetricKind::HS:
            return SamplerKind::Ginibre;
        case MetricKind::Bures:
            return SamplerKind::Bures;
        case MetricKind::BKM:
            return SamplerKind::Mcmc;
    }
    return SamplerKind::Mcmc;
}

FractionEstimate estimate_fraction(SamplerKind sampler, MetricKind metric, int n, const McSpec &spec,
                                   const McmcSpec &mcmc, const std::function<bool(const StateSpectrum &)> &predicate) {
    spec.validate();
    require_dimension(n);
    if (sampler == SamplerKind::Ginibre && metric != MetricKind::HS) {
        throw DomainError("the Ginibre sampler realizes the HS measure only");
    }
    if (sampler == SamplerKind::Bures && metric != MetricKind::Bures) {
        throw DomainError("the (I+U)G sampler realizes the Bures measure only");
    }
    if (sampler == SamplerKind::Mcmc) {
        mcmc.validate();
    }

    constexpr long kBatches = 20;
    struct WorkerResult {
        long count = 0;
        long hits = 0;
        double variance = 0;  // of this worker's mean
        std::vector<std::string> notes;
    };
    std::vector<WorkerResult> results(static_cast<size_t>(spec.workers));

    run_workers(spec, [&](int w, long count) {
        auto &res = results[static_cast<size_t>(w)];
        res.count = count;
        const std::uint64_t seed = worker_seed(spec.seed, w);
        if (sampler != SamplerKind::Mcmc) {
            auto count_hits = [&](auto &&source) {
                for (long i = 0; i < count; i++) {
                    res.hits += predicate(source.next());
                }
            };
            if (sampler == SamplerKind::Ginibre) {
                count_hits(GinibreSampler(n, seed));
            } else {
                count_hits(BuresSampler(n, seed));
            }
            double p = count ? static_cast<double>(res.hits) / count : 0;
            res.variance = count ? p * (1 - p) / count : 0;
            return;
        }
        McmcSampler chain(metric, n, seed, mcmc);
        const long per_batch = count / kBatches;
        std::vector<double> batch_means;
        long batch_hits = 0;
        long in_batch = 0;
        for (long i = 0; i < count; i++) {
            bool hit = predicate(chain.next());
            res.hits += hit;
            if (per_batch > 0) {
                batch_hits += hit;
                if (++in_batch == per_batch && static_cast<long>(batch_means.size()) < kBatches) {
                    batch_means.push_back(static_cast<double>(batch_hits) / per_batch);
                    batch_hits = 0;
                    in_batch = 0;
                }
            }
        }
        double p = count ? static_cast<double>(res.hits) / count : 0;
        if (batch_means.size() >= 2) {
            double mean = 0;
            for (double m : batch_means) {
                mean += m;
            }
            mean /= static_cast<double>(batch_means.size());
            double ss = 0;
            for (double m : batch_means) {
                ss += (m - mean) * (m - mean);
            }
            double b = static_cast<double>(batch_means.size());
            res.variance = ss / (b * (b - 1));
        } else {
            res.variance = count ? p * (1 - p) / count : 0;
        }
        res.notes = chain.diagnostics();
    });

    FractionEstimate out;
    double variance = 0;
    long hits = 0;
    for (size_t w = 0; w < results.size(); w++) {
        const auto &res = results[w];
        out.samples += res.count;
        hits += res.hits;
        double weight = static_cast<double>(res.count) / static_cast<double>(spec.samples);
        variance += weight * weight * res.variance;
        for (const auto &note : res.notes) {
            out.diagnostics.push_back("worker " + std::to_string(w) + ": " + note);
        }
    }
    out.value = static_cast<double>(hits) / static_cast<double>(out.samples);
    out.std_error = std::sqrt(variance);
    return out;
}

}  // namespace wigvol
