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

#include <gtest/gtest.h>

namespace rebit::sweep {
namespace {

TEST(Sweep, GridSize) {
    EXPECT_EQ(grid_size(0.01), 201u);
    EXPECT_EQ(grid_size(0.5), 5u);
    EXPECT_EQ(grid_size(1.0), 3u);
}

TEST(Sweep, UnitalGridSerialMatchesParallel) {
    const auto s = unital_grid(0.02, Execution::serial);
    const auto p = unital_grid(0.02, Execution::parallel);
    EXPECT_EQ(s.points, 101u * 101u);
    EXPECT_EQ(s.points, p.points);
    EXPECT_EQ(s.cp_points, p.cp_points);
    EXPECT_EQ(s.mismatches, 0u);
    EXPECT_EQ(p.mismatches, 0u);
}

TEST(Sweep, GeneralSerialMatchesParallel) {
    const auto s = general_random(20000, 3, Execution::serial);
    const auto p = general_random(20000, 3, Execution::parallel);
    EXPECT_EQ(s.cp_accepted, p.cp_accepted);
    EXPECT_EQ(s.boundary_excluded, p.boundary_excluded);
    EXPECT_EQ(s.min_b_on_cp, p.min_b_on_cp);
    EXPECT_EQ(s.mismatches, 0u);
    EXPECT_EQ(s.b_violations, 0u);
    EXPECT_GT(s.cp_accepted, 0u);
}

TEST(Sweep, RoundTripSerialMatchesParallel) {
    const auto s = decomposition_round_trip(5000, 4, Execution::serial);
    const auto p = decomposition_round_trip(5000, 4, Execution::parallel);
    EXPECT_EQ(s.max_residual, p.max_residual);
    EXPECT_EQ(s.max_rotation_error, p.max_rotation_error);
    EXPECT_EQ(s.max_det_error, p.max_det_error);
    EXPECT_EQ(s.failures, 0u);
}

TEST(Sweep, DoubleAngleSerialMatchesParallel) {
    const auto s = double_angle(2000, 5, Execution::serial);
    const auto p = double_angle(2000, 5, Execution::parallel);
    EXPECT_EQ(s.max_rotation_error, p.max_rotation_error);
    EXPECT_EQ(s.max_conjugation_error, p.max_conjugation_error);
    EXPECT_EQ(s.failures, 0u);
}

TEST(Sweep, BDiskMaximum) {
    const auto s = b_disk_maximum(0.01, Execution::serial);
    const auto p = b_disk_maximum(0.01, Execution::parallel);
    EXPECT_EQ(s.max_value, p.max_value);
    EXPECT_NEAR(s.max_value, 4.0, 1e-12);
    EXPECT_NEAR(s.argmax_sum, 1.0, 1e-12);
}

TEST(Sweep, SeedChangesSamples) {
    const auto a = general_random(1000, 1, Execution::serial);
    const auto b = general_random(1000, 2, Execution::serial);
    EXPECT_NE(a.min_b_on_cp, b.min_b_on_cp);
}

}  // namespace
}  // namespace rebit::sweep
