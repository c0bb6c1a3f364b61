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

#include "rebit/canonical.hpp"

#include <gtest/gtest.h>

#include "rebit/cp.hpp"
#include "test_support.hpp"

namespace rebit {
namespace {

TEST(Canonical, DecomposeExamples) {
    const DiagonalFactorization d = canonical_decompose(Mat2::diag(0.5, 0.3));
    EXPECT_EQ(d.left.angle(), 0.0);
    EXPECT_EQ(d.right.angle(), 0.0);
    EXPECT_EQ(d.lambda1, 0.5);
    EXPECT_EQ(d.lambda2, 0.3);

    const DiagonalFactorization s = canonical_decompose(kSigma2);
    EXPECT_NEAR(s.left.angle(), 0.5 * kPi, 1e-15);
    EXPECT_NEAR(s.lambda1, 1.0, 1e-15);
    EXPECT_NEAR(s.lambda2, -1.0, 1e-15);
    EXPECT_EQ(s.right.angle(), 0.0);
    EXPECT_LE(max_abs_diff(s.reconstruct(), kSigma2), 1e-15);

    const Mat2 a = rotation_matrix(0.25 * kPi) * Mat2::diag(0.8, 0.2);
    const DiagonalFactorization r = canonical_decompose(a);
    EXPECT_NEAR(r.left.angle(), 0.25 * kPi, 1e-15);
    EXPECT_NEAR(r.lambda1, 0.8, 1e-15);
    EXPECT_NEAR(r.lambda2, 0.2, 1e-15);
    EXPECT_NEAR(r.right.angle(), 0.0, 1e-15);
    EXPECT_LE(max_abs_diff(r.reconstruct(), a), 1e-10);
}

TEST(Canonical, NegativePairBecomesRotation) {
    const DiagonalFactorization d = canonical_decompose(Mat2::diag(-1.0, -1.0));
    EXPECT_EQ(d.lambda1, 1.0);
    EXPECT_EQ(d.lambda2, 1.0);
    EXPECT_NEAR(d.left.angle(), kPi, 1e-15);
}

TEST(Canonical, ChannelExamples) {
    const CanonicalForm id = decompose_channel(AffineChannel::identity());
    EXPECT_EQ(id.theta1, 0.0);
    EXPECT_EQ(id.theta2, 0.0);
    EXPECT_EQ(id.lambda1, 1.0);
    EXPECT_EQ(id.lambda2, 1.0);
    EXPECT_EQ(id.shift, Vec2{});

    const CanonicalForm d = decompose_channel({Mat2::diag(0.5, 0.3), {0.1, 0.2}});
    EXPECT_EQ(d.theta1, 0.0);
    EXPECT_EQ(d.lambda1, 0.5);
    EXPECT_EQ(d.lambda2, 0.3);
    EXPECT_EQ(d.shift, (Vec2{0.1, 0.2}));

    const CanonicalForm r = decompose_channel({rotation_matrix(0.5 * kPi) * Mat2::diag(0.6, 0.4), {0.2, 0.0}});
    EXPECT_NEAR(r.theta1, 0.5 * kPi, 1e-15);
    EXPECT_NEAR(r.lambda1, 0.6, 1e-15);
    EXPECT_NEAR(r.lambda2, 0.4, 1e-15);
    EXPECT_NEAR(r.shift.x, 0.0, 1e-15);
    EXPECT_NEAR(r.shift.y, -0.2, 1e-15);
}

TEST(Canonical, ReconstructExamples) {
    EXPECT_EQ(reconstruct(CanonicalForm{}), AffineChannel::identity());
    const AffineChannel s = reconstruct({0.5 * kPi, 0.0, 1.0, -1.0, {}});
    EXPECT_LE(max_abs_diff(s.A, kSigma2), 1e-15);
}

TEST(Canonical, RoundTripProperty) {
    UniformSource rng(31);
    for (int i = 0; i < 10000; ++i) {
        const AffineChannel c{testing::random_matrix(rng, 2.0), testing::random_vec(rng, 1.0)};
        const CanonicalForm f = decompose_channel(c);
        ASSERT_LE(reconstruction_residual(c, f), 1e-10) << i;
        ASSERT_GE(f.lambda1, 0.0);
        ASSERT_GE(f.lambda1, std::abs(f.lambda2));
        ASSERT_NEAR(c.A.det(), f.lambda1 * f.lambda2, 1e-10);
        const Svd2 s = svd2(c.A);
        ASSERT_NEAR(std::abs(f.lambda1), s.s1, 1e-10);
        ASSERT_NEAR(std::abs(f.lambda2), s.s2, 1e-10);
        ASSERT_GE(f.theta1, 0.0);
        ASSERT_LT(f.theta1, kTwoPi);
        ASSERT_GE(f.theta2, 0.0);
        ASSERT_LT(f.theta2, kTwoPi);
    }
}

TEST(Canonical, CompositionIdentity) {
    UniformSource rng(32);
    for (int i = 0; i < 1000; ++i) {
        const AffineChannel c{testing::random_matrix(rng, 1.0), testing::random_vec(rng, 1.0)};
        const CanonicalForm f = decompose_channel(c);
        const AffineChannel rebuilt =
            compose(rotation_channel(f.theta1), compose(f.diagonal_channel(), rotation_channel(f.theta2)));
        ASSERT_LE(max_abs_diff(rebuilt.A, c.A), 1e-12);
        ASSERT_LE(max_abs_diff(rebuilt.w, c.w), 1e-12);
    }
}

TEST(Canonical, QuarterTurnsDescribeTheSameChannel) {
    UniformSource rng(33);
    for (int i = 0; i < 1000; ++i) {
        const AffineChannel c{testing::random_matrix(rng, 1.0), testing::random_vec(rng, 1.0)};
        for (const CanonicalForm &f : quarter_turn_equivalents(decompose_channel(c))) {
            ASSERT_LE(reconstruction_residual(c, f), 1e-12);
        }
    }
}

TEST(Canonical, CpVerdictDependsOnlyOnDiagonalPart) {
    UniformSource rng(34);
    for (int i = 0; i < 2000; ++i) {
        const AffineChannel c{testing::random_matrix(rng, 1.0), testing::random_vec(rng, 0.5)};
        const CanonicalForm f = decompose_channel(c);
        ASSERT_EQ(is_cp(c).is_cp, is_cp(f.diagonal_channel()).is_cp) << i;
    }
}

}  // namespace
}  // namespace rebit
