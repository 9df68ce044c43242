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

#ifndef WIGVOL_SPECTRA_H
#define WIGVOL_SPECTRA_H

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wigvol {

/// Tolerance for algebraic invariants (normalization, trace constraints).
inline constexpr double kInvariantTol = 1e-12;
/// Tolerance for coordinate round-trips.
inline constexpr double kRoundTripTol = 1e-10;

enum class MetricKind { HS, Bures, BKM };

inline constexpr std::array<MetricKind, 3> kAllMetrics = {MetricKind::HS, MetricKind::Bures, MetricKind::BKM};

/// Short lowercase name: "hs", "bures", "bkm".
std::string_view metric_name(MetricKind metric);
/// Accepts the short names (case-insensitive) plus "b" for Bures.
MetricKind parse_metric(std::string_view text);

/// Eigenvalues of a density matrix, stored in descending order.
/// A point of the ordered simplex.
class StateSpectrum {
   public:
    /// Sorts the input descending. Entries within kInvariantTol below zero
    /// are snapped to zero; anything further off the simplex throws DomainError.
    explicit StateSpectrum(std::vector<double> values);

    std::span<const double> values() const {
        return values_;
    }
    size_t dim() const {
        return values_.size();
    }
    double operator[](size_t i) const {
        return values_[i];
    }
    bool operator==(const StateSpectrum &other) const = default;

    /// The uniform spectrum (1/N, ..., 1/N).
    static StateSpectrum maximally_mixed(size_t n);

   private:
    std::vector<double> values_;
};

/// Eigenvalues of a Stratonovich-Weyl kernel, stored in ascending order.
/// Satisfies sum = 1 and sum of squares = N.
class KernelSpectrum {
   public:
    explicit KernelSpectrum(std::vector<double> values);

    std::span<const double> values() const {
        return values_;
    }
    size_t dim() const {
        return values_.size();
    }
    double operator[](size_t i) const {
        return values_[i];
    }
    bool operator==(const KernelSpectrum &other) const = default;

   private:
    std::vector<double> values_;
};

/// Label of a Wigner representation within the moduli space.
///  - N=2: unique kernel, no parameters.
///  - N=3: apex angle zeta in [0, pi/3].
///  - general N: unit direction with N components summing to zero.
class ModuliPoint {
   public:
    enum class Kind { Unique, Apex, Direction };

    static ModuliPoint qubit();
    static ModuliPoint qutrit(double zeta);
    static ModuliPoint direction(std::vector<double> unit_traceless);

    Kind kind() const {
        return kind_;
    }
    /// Only meaningful for Kind::Apex.
    double zeta() const {
        return zeta_;
    }
    std::span<const double> direction() const {
        return direction_;
    }
    std::string describe() const;

   private:
    ModuliPoint() = default;
    Kind kind_ = Kind::Unique;
    double zeta_ = 0;
    std::vector<double> direction_;
};

/// Polar coordinates of a qutrit spectrum around the maximally mixed point.
/// phi is the tripled chamber angle; the ordered chamber is phi in [0, pi].
class QutritPolar {
   public:
    QutritPolar(double r, double phi);
    double r() const {
        return r_;
    }
    double phi() const {
        return phi_;
    }

   private:
    double r_;
    double phi_;
};

/// Eigenvalues 1/3 - (2r/sqrt3) cos((phi + 2 pi k)/3) for k = 1, 2, 0.
/// For phi in [0, pi] this order is already descending. No validation.
std::array<double, 3> polar_eigenvalues(double r, double phi) noexcept;

StateSpectrum spectrum_from_polar(const QutritPolar &p);
QutritPolar polar_from_spectrum(const StateSpectrum &s);

}  // namespace wigvol

#endif
