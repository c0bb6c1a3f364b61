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

#include "rebit/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rebit/bloch.hpp"
#include "rebit/canonical.hpp"
#include "rebit/channel.hpp"
#include "rebit/cp.hpp"
#include "rebit/random.hpp"

namespace rebit::sweep {

namespace {

using Index = std::int64_t;

double grid_value(Index i, double step) { return std::min(1.0, -1.0 + static_cast<double>(i) * step); }

// Per-point kernels. Each returns the contribution of one index.

struct GridPoint {
    bool cp = false;
    bool mismatch = false;
};

GridPoint grid_point(Index i, std::size_t n, double step) {
    const double l1 = grid_value(i / static_cast<Index>(n), step);
    const double l2 = grid_value(i % static_cast<Index>(n), step);
    const bool closed = diagonal_is_cp(l1, l2, 0.0, 0.0);
    const bool oracle = eig_sym3(chi_matrix(l1, l2, 0.0, 0.0).values)[2] >= -kCpTolerance;
    return {closed, closed != oracle};
}

struct RandomPoint {
    bool cp = false;
    bool excluded = false;
    bool mismatch = false;
    bool b_violation = false;
    double b = 0.0;
};

RandomPoint random_point(Index i, std::uint64_t seed) {
    UniformSource rng(stream_seed(seed, static_cast<std::uint64_t>(i)));
    const double l1 = rng.uniform(-1.0, 1.0);
    const double l2 = rng.uniform(-1.0, 1.0);
    const double w1 = rng.uniform(-1.0, 1.0);
    const double w2 = rng.uniform(-1.0, 1.0);

    const QValues q = q_values(l1, l2);
    const ShiftRegion region = shift_region_contains(l1, l2, w1, w2);
    RandomPoint out;
    out.cp = q.min() >= -kCpTolerance && region.contains;
    const double min_abs_q = std::min({std::abs(q.q0), std::abs(q.q1), std::abs(q.q2)});
    out.excluded = std::abs(region.margin) < kAmbiguityBand || min_abs_q < kAmbiguityBand;
    if (!out.excluded) {
        const bool oracle = eig_sym3(chi_matrix(l1, l2, w1, w2).values)[2] >= -kCpTolerance;
        out.mismatch = oracle != out.cp;
    }
    out.b = charpoly_coeffs(l1, l2, w1, w2).b;
    out.b_violation = out.cp && out.b < -kCpTolerance;
    return out;
}

struct RoundTripPoint {
    double residual = 0.0;
    double rotation_error = 0.0;
    double det_error = 0.0;
    bool failure = false;
};

RoundTripPoint round_trip_point(Index i, std::uint64_t seed) {
    UniformSource rng(stream_seed(seed, static_cast<std::uint64_t>(i)));
    Mat2 a;
    a.a11 = rng.uniform(-2.0, 2.0);
    a.a12 = rng.uniform(-2.0, 2.0);
    a.a21 = rng.uniform(-2.0, 2.0);
    a.a22 = rng.uniform(-2.0, 2.0);

    const DiagonalFactorization f = canonical_decompose(a);
    const Mat2 left = f.left.matrix();
    const Mat2 right = f.right.matrix();
    RoundTripPoint out;
    out.residual = max_abs_diff(f.reconstruct(), a);
    out.rotation_error = std::max({orthogonality_error(left), orthogonality_error(right),
                                   std::abs(left.det() - 1.0), std::abs(right.det() - 1.0)});
    out.det_error = std::abs(a.det() - f.lambda1 * f.lambda2);
    out.failure = out.residual > 1e-10 || out.rotation_error > 1e-12 || out.det_error > 1e-10;
    return out;
}

struct DoubleAnglePoint {
    double rotation_error = 0.0;
    double conjugation_error = 0.0;
};

DoubleAnglePoint double_angle_point(Index i, std::uint64_t seed) {
    UniformSource rng(stream_seed(seed, static_cast<std::uint64_t>(i)));
    const double alpha = rng.uniform(0.0, kTwoPi);
    const double radius = std::sqrt(rng.next());
    const double angle = rng.uniform(0.0, kTwoPi);

    const OrthogonalChannel channel(rotation_matrix(alpha));
    const DensityMatrix rho = state_polar(radius, angle);
    const DensityMatrix via_bloch = DensityMatrix::from_bloch(channel.bloch_map() * bloch_from_density(rho).v);
    return {max_abs_diff(channel.bloch_map(), rotation_matrix(2.0 * alpha)),
            max_abs_diff(via_bloch.matrix(), channel.conjugate(rho).matrix())};
}

double b_disk_value(Index i, std::size_t n, double step) {
    const double sum = grid_value(i / static_cast<Index>(n), step) + grid_value(i % static_cast<Index>(n), step);
    return 3.0 + 2.0 * sum - sum * sum;
}

}  // namespace

std::size_t grid_size(double step) { return static_cast<std::size_t>(std::floor(2.0 / step + 1e-9)) + 1; }

UnitalGridResult unital_grid(double step, Execution exec) {
    const std::size_t n = grid_size(step);
    const Index total = static_cast<Index>(n * n);
    std::size_t cp = 0;
    std::size_t mismatches = 0;
    if (exec == Execution::serial) {
        for (Index i = 0; i < total; ++i) {
            const GridPoint p = grid_point(i, n, step);
            cp += p.cp;
            mismatches += p.mismatch;
        }
    } else {
#pragma omp parallel for schedule(static) reduction(+ : cp, mismatches)
        for (Index i = 0; i < total; ++i) {
            const GridPoint p = grid_point(i, n, step);
            cp += p.cp;
            mismatches += p.mismatch;
        }
    }
    return {static_cast<std::size_t>(total), cp, mismatches};
}

GeneralSweepResult general_random(std::size_t samples, std::uint64_t seed, Execution exec) {
    const Index total = static_cast<Index>(samples);
    std::size_t cp = 0;
    std::size_t mismatches = 0;
    std::size_t excluded = 0;
    std::size_t b_violations = 0;
    double min_b = std::numeric_limits<double>::infinity();
    if (exec == Execution::serial) {
        for (Index i = 0; i < total; ++i) {
            const RandomPoint p = random_point(i, seed);
            cp += p.cp;
            mismatches += p.mismatch;
            excluded += p.excluded;
            b_violations += p.b_violation;
            if (p.cp) {
                min_b = std::min(min_b, p.b);
            }
        }
    } else {
#pragma omp parallel for schedule(static) reduction(+ : cp, mismatches, excluded, b_violations) reduction(min : min_b)
        for (Index i = 0; i < total; ++i) {
            const RandomPoint p = random_point(i, seed);
            cp += p.cp;
            mismatches += p.mismatch;
            excluded += p.excluded;
            b_violations += p.b_violation;
            if (p.cp) {
                min_b = std::min(min_b, p.b);
            }
        }
    }
    return {samples, cp, mismatches, excluded, b_violations, cp > 0 ? min_b : 0.0};
}

RoundTripResult decomposition_round_trip(std::size_t samples, std::uint64_t seed, Execution exec) {
    const Index total = static_cast<Index>(samples);
    double residual = 0.0;
    double rotation = 0.0;
    double det = 0.0;
    std::size_t failures = 0;
    if (exec == Execution::serial) {
        for (Index i = 0; i < total; ++i) {
            const RoundTripPoint p = round_trip_point(i, seed);
            residual = std::max(residual, p.residual);
            rotation = std::max(rotation, p.rotation_error);
            det = std::max(det, p.det_error);
            failures += p.failure;
        }
    } else {
#pragma omp parallel for schedule(static) reduction(max : residual, rotation, det) reduction(+ : failures)
        for (Index i = 0; i < total; ++i) {
            const RoundTripPoint p = round_trip_point(i, seed);
            residual = std::max(residual, p.residual);
            rotation = std::max(rotation, p.rotation_error);
            det = std::max(det, p.det_error);
            failures += p.failure;
        }
    }
    return {samples, residual, rotation, det, failures};
}

DoubleAngleResult double_angle(std::size_t samples, std::uint64_t seed, Execution exec) {
    constexpr double kTolerance = 1e-12;
    const Index total = static_cast<Index>(samples);
    double rotation = 0.0;
    double conjugation = 0.0;
    std::size_t failures = 0;
    if (exec == Execution::serial) {
        for (Index i = 0; i < total; ++i) {
            const DoubleAnglePoint p = double_angle_point(i, seed);
            rotation = std::max(rotation, p.rotation_error);
            conjugation = std::max(conjugation, p.conjugation_error);
            failures += p.rotation_error > kTolerance || p.conjugation_error > kTolerance;
        }
    } else {
#pragma omp parallel for schedule(static) reduction(max : rotation, conjugation) reduction(+ : failures)
        for (Index i = 0; i < total; ++i) {
            const DoubleAnglePoint p = double_angle_point(i, seed);
            rotation = std::max(rotation, p.rotation_error);
            conjugation = std::max(conjugation, p.conjugation_error);
            failures += p.rotation_error > kTolerance || p.conjugation_error > kTolerance;
        }
    }
    return {samples, rotation, conjugation, failures};
}

BDiskResult b_disk_maximum(double step, Execution exec) {
    const std::size_t n = grid_size(step);
    const Index total = static_cast<Index>(n * n);
    double best = -std::numeric_limits<double>::infinity();
    if (exec == Execution::serial) {
        for (Index i = 0; i < total; ++i) {
            best = std::max(best, b_disk_value(i, n, step));
        }
    } else {
#pragma omp parallel for schedule(static) reduction(max : best)
        for (Index i = 0; i < total; ++i) {
            best = std::max(best, b_disk_value(i, n, step));
        }
    }
    // First index attaining the maximum; a serial scan keeps this order-independent.
    double argmax_sum = 0.0;
    for (Index i = 0; i < total; ++i) {
        if (b_disk_value(i, n, step) == best) {
            argmax_sum = grid_value(i / static_cast<Index>(n), step) + grid_value(i % static_cast<Index>(n), step);
            break;
        }
    }
    return {static_cast<std::size_t>(total), best, argmax_sum};
}

}  // namespace rebit::sweep
