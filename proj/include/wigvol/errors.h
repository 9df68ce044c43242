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

#ifndef WIGVOL_ERRORS_H
#define WIGVOL_ERRORS_H

#include <stdexcept>
#include <string>

namespace wigvol {

/// Raised when an argument lies outside the domain of an operation
/// (out-of-range angle, spectrum off the simplex, dimension mismatch, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Raised when a numerical procedure fails to reach its tolerance.
/// Carries the best estimate obtained before giving up.
struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string &what, double best_estimate, double error_estimate)
        : std::runtime_error(what), best_estimate(best_estimate), error_estimate(error_estimate) {
    }
    double best_estimate;
    double error_estimate;
};

}  // namespace wigvol

#endif
