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

#include <algorithm>

namespace rebit {

namespace {

// Reflection about the horizontal axis.
constexpr Mat2 kFlip = Mat2::diag(1.0, -1.0);

double clean_zero(double x) { return x == 0.0 ? 0.0 : x; }

}  // namespace

Mat2 DiagonalFactorization::reconstruct() const {
    return left.matrix() * Mat2::diag(lambda1, lambda2) * right.matrix();
}

DiagonalFactorization canonical_decompose(const Mat2 &a) {
    const Svd2 svd = svd2(a);

    // O_j = R_j * I_j with I_j either the identity or kFlip; then
    // A = R1 (I1 Sigma I2) R2'^T and I1 Sigma I2 = diag(s1, +-s2).
    const bool left_reflects = svd.left.det() < 0.0;
    const bool right_reflects = svd.right.det() < 0.0;
    const Mat2 r1 = left_reflects ? svd.left * kFlip : svd.left;
    const Mat2 r2 = right_reflects ? svd.right * kFlip : svd.right;
    const double sign = left_reflects != right_reflects ? -1.0 : 1.0;

    DiagonalFactorization out;
    out.left = Rotation2::from_matrix(r1);
    out.right = Rotation2::from_matrix(r2.transposed());
    out.lambda1 = clean_zero(svd.s1);
    out.lambda2 = clean_zero(sign * svd.s2);
    return out;
}

CanonicalForm decompose_channel(const AffineChannel &channel) {
    const DiagonalFactorization f = canonical_decompose(channel.A);
    CanonicalForm out;
    out.theta1 = f.left.angle();
    out.theta2 = f.right.angle();
    out.lambda1 = f.lambda1;
    out.lambda2 = f.lambda2;
    out.shift = f.left.matrix().transposed() * channel.w;
    return out;
}

AffineChannel reconstruct(const CanonicalForm &form) {
    const Mat2 left = form.left();
    return {left * form.diagonal() * form.right(), left * form.shift};
}

double reconstruction_residual(const AffineChannel &channel, const CanonicalForm &form) {
    const AffineChannel back = reconstruct(form);
    return std::max(max_abs_diff(back.A, channel.A), max_abs_diff(back.w, channel.w));
}

std::array<CanonicalForm, 4> quarter_turn_equivalents(const CanonicalForm &form) {
    const double l1 = form.lambda1;
    const double l2 = form.lambda2;
    const Vec2 s = form.shift;
    const double t1 = form.theta1;
    const double t2 = form.theta2;
    const double quarter = 0.5 * kPi;

    // rotation(pi) diag(-l1, -l2) = diag(l1, l2);
    // rotation(pi/2) diag(l2, l1) rotation(-pi/2) = diag(l1, l2).
    return {{
        form,
        {normalize_angle(t1 + kPi), t2, clean_zero(-l1), clean_zero(-l2), {-s.x, -s.y}},
        {normalize_angle(t1 + quarter), normalize_angle(t2 - quarter), l2, l1, {s.y, -s.x}},
        {normalize_angle(t1 + 3.0 * quarter), normalize_angle(t2 - quarter), clean_zero(-l2), clean_zero(-l1),
         {-s.y, s.x}},
    }};
}

}  // namespace rebit
