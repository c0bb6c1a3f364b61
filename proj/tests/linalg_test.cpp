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

#include "rebit/linalg.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "test_support.hpp"

namespace rebit {
namespace {

TEST(Rotation, AngleIsNormalized) {
    EXPECT_DOUBLE_EQ(Rotation2(-0.5 * kPi).angle(), 1.5 * kPi);
    EXPECT_DOUBLE_EQ(Rotation2(5.0 * kPi).angle(), kPi);
    EXPECT_EQ(std::signbit(Rotation2(-0.0).angle()), false);
    EXPECT_LT(Rotation2(-1e-300).angle(), kTwoPi);
}

TEST(Rotation, ComposesAndInverts) {
    UniformSource rng(1);
    for (int i = 0; i < 100; ++i) {
        const Rotation2 a(rng.uniform(-10, 10));
        const Rotation2 b(rng.uniform(-10, 10));
        EXPECT_LE(max_abs_diff((a * b).matrix(), a.matrix() * b.matrix()), 1e-14);
        EXPECT_LE(max_abs_diff((a * a.inverse()).matrix(), Mat2::identity()), 1e-14);
        EXPECT_NEAR(Rotation2::from_matrix(a.matrix()).angle(), a.angle(), 1e-12);
    }
}

TEST(Svd, DiagonalExamples) {
    const Svd2 s = svd2(Mat2::diag(3.0, -2.0));
    EXPECT_DOUBLE_EQ(s.s1, 3.0);
    EXPECT_DOUBLE_EQ(s.s2, 2.0);
    EXPECT_EQ(s.right, Mat2::identity());
    EXPECT_LE(max_abs_diff(s.reconstruct(), Mat2::diag(3.0, -2.0)), 1e-15);

    const Svd2 z = svd2(Mat2{});
    EXPECT_EQ(z.s1, 0.0);
    EXPECT_EQ(z.s2, 0.0);
}

TEST(Svd, TiedSingularValuesPinRightFactor) {
    const Mat2 a = rotation_matrix(0.7) * 2.0;
    const Svd2 s = svd2(a);
    EXPECT_EQ(s.right, Mat2::identity());
    EXPECT_NEAR(s.s1, 2.0, 1e-15);
    EXPECT_NEAR(s.s2, 2.0, 1e-15);
    EXPECT_LE(max_abs_diff(s.reconstruct(), a), 1e-14);
}

TEST(Svd, RoundTripProperty) {
    UniformSource rng(2);
    for (int i = 0; i < 10000; ++i) {
        const Mat2 a = testing::random_matrix(rng, 2.0);
        const Svd2 s = svd2(a);
        ASSERT_LE(max_abs_diff(s.reconstruct(), a), 1e-12) << i;
        ASSERT_GE(s.s1, s.s2);
        ASSERT_GE(s.s2, 0.0);
        ASSERT_LE(orthogonality_error(s.left), 1e-13);
        ASSERT_LE(orthogonality_error(s.right), 1e-13);
        ASSERT_NEAR(s.right.det(), 1.0, 1e-13);
        // s1 s2 = |det A| and s1^2 + s2^2 = |A|_F^2
        ASSERT_NEAR(s.s1 * s.s2, std::abs(a.det()), 1e-12);
        ASSERT_NEAR(s.s1 * s.s1 + s.s2 * s.s2, a.a11 * a.a11 + a.a12 * a.a12 + a.a21 * a.a21 + a.a22 * a.a22,
                    1e-12);
    }
}

TEST(Svd, RankOneAndSingular) {
    const Mat2 a{1.0, 2.0, 2.0, 4.0};
    const Svd2 s = svd2(a);
    EXPECT_NEAR(s.s1, 5.0, 1e-14);
    EXPECT_NEAR(s.s2, 0.0, 1e-14);
    EXPECT_LE(max_abs_diff(s.reconstruct(), a), 1e-14);
}

// Roots of the characteristic cubic x^3 - t x^2 + m x - d by trigonometric solution.
std::array<double, 3> cubic_roots(const Sym3 &s) {
    const double t = s.trace();
    const double m = s.principal_minor_sum();
    const double d = s.det();
    const double p = m - t * t / 3.0;
    const double q = -2.0 * t * t * t / 27.0 + t * m / 3.0 - d;
    std::array<double, 3> out;
    if (std::abs(p) < 1e-300) {
        out.fill(t / 3.0 + std::cbrt(-q));
    } else {
        const double r = 2.0 * std::sqrt(-p / 3.0);
        const double arg = std::clamp(3.0 * q / (p * r), -1.0, 1.0);
        const double phi = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k) {
            out[k] = t / 3.0 + r * std::cos(phi - 2.0 * kPi * k / 3.0);
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

TEST(Jacobi, MatchesCharacteristicCubic) {
    UniformSource rng(3);
    for (int i = 0; i < 2000; ++i) {
        const Sym3 s(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                     rng.uniform(-1, 1), rng.uniform(-1, 1));
        const auto e = eig_sym3(s);
        const auto c = cubic_roots(s);
        for (int k = 0; k < 3; ++k) {
            ASSERT_NEAR(e[k], c[k], 1e-7) << i;
        }
        // trace, minor sum and determinant are symmetric functions of the spectrum
        ASSERT_NEAR(e[0] + e[1] + e[2], s.trace(), 1e-12);
        ASSERT_NEAR(e[0] * e[1] + e[0] * e[2] + e[1] * e[2], s.principal_minor_sum(), 1e-12);
        ASSERT_NEAR(e[0] * e[1] * e[2], s.det(), 1e-12);
    }
}

TEST(Jacobi, DiagonalAndDegenerate) {
    const auto d = eig_sym3(Sym3::diag(0.2, 3.0, -1.0));
    EXPECT_EQ(d, (std::array<double, 3>{3.0, 0.2, -1.0}));
    const auto ones = eig_sym3(Sym3(1, 1, 1, 1, 1, 1));
    EXPECT_NEAR(ones[0], 3.0, 1e-14);
    EXPECT_NEAR(ones[1], 0.0, 1e-14);
    EXPECT_NEAR(ones[2], 0.0, 1e-14);
}

TEST(Sym3, SymmetricAccess) {
    Sym3 s;
    s.set(2, 0, 4.0);
    EXPECT_EQ(s(0, 2), 4.0);
    EXPECT_EQ(s(2, 0), 4.0);
    EXPECT_EQ(s.max_abs(), 4.0);
    EXPECT_EQ(s.scaled(0.5)(0, 2), 2.0);
}

}  // namespace
}  // namespace rebit
