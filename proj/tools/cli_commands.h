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

#ifndef WIGVOL_TOOLS_CLI_COMMANDS_H
#define WIGVOL_TOOLS_CLI_COMMANDS_H

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wigvol/indicators.h"

namespace wigvol::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

/// Name of the environment variable holding the default worker count.
inline constexpr const char *kWorkersEnv = "WIGVOL_WORKERS";

enum class OutputFormat { Json, Csv };

/// Parsed command line.
struct RunConfig {
    std::string command;
    int n = 2;
    std::optional<MetricKind> metric;
    std::optional<double> zeta;
    std::vector<double> direction;
    EvalOptions eval;
    OutputFormat format = OutputFormat::Json;
    std::string out_path;
    int points = 200;
    double zeta_tol = 1e-6;
    std::optional<SamplerKind> sampler;
    bool with_mc = false;

    /// Throws DomainError on inconsistent combinations (e.g. zeta with N != 3).
    void validate() const;
};

/// Parses angles in radians: plain decimals or pi fractions such as "pi",
/// "pi/6", "2pi/3", "2*pi/3", "-pi/12". Throws DomainError on bad input.
double parse_angle(std::string_view text);

/// Formats with 12 significant digits (CSV cells and text reports).
std::string format_number(double value);

/// Runs the CLI; output goes to `out` unless --out names a file.
/// Returns 0 on success, 1 on numerical failure, 2 on usage errors.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace wigvol::cli

#endif
