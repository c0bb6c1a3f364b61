// Copyright 2026 The Rebit Authors
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

#pragma once

#include <cstddef>
#include <cstdint>

namespace rebit::sweep {

/// Every kernel has a serial reference loop and an OpenMP loop. Both draw
/// sample i from stream_seed(seed, i) and reduce with sums and maxima only,
/// so the two produce identical results.
enum class Execution { serial, parallel };

/// Boundary band excluded from the closed-form vs oracle comparison on random points.
inline constexpr double kAmbiguityBand = 1e-7;

/// Number of grid values -1, -1 + step, ..., <= 1.
std::size_t grid_size(double step);

struct UnitalGridResult {
    std::size_t points = 0;
    std::size_t cp_points = 0;
    std::size_t mismatches = 0;
};

/// Closed-form unital verdict vs. eig_sym3 sign test on the (lambda1, lambda2) grid.
UnitalGridResult unital_grid(double step, Execution exec);

struct GeneralSweepResult {
    std::size_t samples = 0;
    std::size_t cp_accepted = 0;
    std::size_t mismatches = 0;
    std::size_t boundary_excluded = 0;
    /// CP-accepted points with b < -kCpTolerance.
    std::size_t b_violations = 0;
    double min_b_on_cp = 0.0;
};

/// Uniform (lambda1, lambda2, w1, w2) in [-1, 1]^4: closed form vs. oracle,
/// plus the det >= 0 => b >= 0 implication on every CP-accepted point.
GeneralSweepResult general_random(std::size_t samples, std::uint64_t seed, Execution exec);

struct RoundTripResult {
    std::size_t samples = 0;
    double max_residual = 0.0;
    double max_rotation_error = 0.0;
    double max_det_error = 0.0;
    /// Samples breaking residual <= 1e-10, rotation error <= 1e-12 or det error <= 1e-10.
    std::size_t failures = 0;
};

/// canonical_decompose on A with entries uniform in [-2, 2].
RoundTripResult decomposition_round_trip(std::size_t samples, std::uint64_t seed, Execution exec);

struct DoubleAngleResult {
    std::size_t samples = 0;
    double max_rotation_error = 0.0;
    double max_conjugation_error = 0.0;
    /// Samples with either error above 1e-12.
    std::size_t failures = 0;
};

/// Bloch map of conjugation by rotation(alpha) against rotation(2 alpha), and
/// against direct conjugation of a random state.
DoubleAngleResult double_angle(std::size_t samples, std::uint64_t seed, Execution exec);

struct BDiskResult {
    std::size_t points = 0;
    double max_value = 0.0;
    /// lambda1 + lambda2 at the first grid point attaining the maximum.
    double argmax_sum = 0.0;
};

/// Grid maximum of 3 + 2 (l1 + l2) - (l1 + l2)^2.
BDiskResult b_disk_maximum(double step, Execution exec);

}  // namespace rebit::sweep
