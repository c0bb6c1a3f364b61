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

#include <array>

#include "rebit/channel.hpp"
#include "rebit/linalg.hpp"

namespace rebit {

/// A = rotation(theta1) * diag(lambda1, lambda2) * rotation(theta2).
struct DiagonalFactorization {
    Rotation2 left;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    Rotation2 right;

    Mat2 reconstruct() const;
};

/// Channel written as sigma_{R1} o C_D o sigma_{R2}.
///
/// C_D acts on Bloch vectors as v -> shift + diag(lambda1, lambda2) v, so the
/// full channel is (R1 D R2, R1 shift).
struct CanonicalForm {
    double theta1 = 0.0;
    double theta2 = 0.0;
    double lambda1 = 1.0;
    double lambda2 = 1.0;
    Vec2 shift;

    Mat2 left() const { return rotation_matrix(theta1); }
    Mat2 right() const { return rotation_matrix(theta2); }
    Mat2 diagonal() const { return Mat2::diag(lambda1, lambda2); }
    /// C_D as a standalone affine channel.
    AffineChannel diagonal_channel() const { return {diagonal(), shift}; }
};

/// Rotation-diagonal-rotation factorization of A, built from svd2.
///
/// Convention: lambda1 = s1 >= 0 and lambda2 = +-s2, carrying the sign of
/// det A (sign(0) = +). Reflections in the SVD factors are folded into the
/// diagonal. Ties s1 == s2 give theta2 = 0.
DiagonalFactorization canonical_decompose(const Mat2 &a);

/// canonical_decompose on the linear part, shift = R1^T w.
CanonicalForm decompose_channel(const AffineChannel &channel);

/// (R1 D R2, R1 shift).
AffineChannel reconstruct(const CanonicalForm &form);

/// Max-abs entry error of reconstruct(form) against channel, over A and w.
double reconstruction_residual(const AffineChannel &channel, const CanonicalForm &form);

/// The four factorizations of the same channel related by quarter turns:
/// the form itself, D -> -D (left turn by pi), and the two with lambda1 and
/// lambda2 exchanged (conjugation by a quarter turn). All reconstruct to the
/// same channel.
std::array<CanonicalForm, 4> quarter_turn_equivalents(const CanonicalForm &form);

}  // namespace rebit
