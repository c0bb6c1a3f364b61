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

#include "rebit/bloch.hpp"
#include "rebit/linalg.hpp"

namespace rebit {

/// Norm slack allowed on apply() outputs before a state counts as leaving the disk.
inline constexpr double kPositivityTolerance = 1e-9;

/// Trace-preserving affine map v -> w + A v on Bloch vectors.
///
/// Complete positivity is not an invariant of this type; see cp.hpp.
struct AffineChannel {
    Mat2 A = Mat2::identity();
    Vec2 w;

    static AffineChannel identity() { return {}; }

    Vec2 map(const Vec2 &v) const { return w + A * v; }
    bool is_finite() const { return A.is_finite() && w.is_finite(); }
    bool operator==(const AffineChannel &) const = default;
};

/// Image of rho. Throws NotPositiveError when the image leaves the Bloch disk
/// by more than kPositivityTolerance.
DensityMatrix apply(const AffineChannel &channel, const DensityMatrix &rho);

/// outer after inner: (A1 A2, w1 + A1 w2).
AffineChannel compose(const AffineChannel &outer, const AffineChannel &inner);

bool is_unital(const AffineChannel &channel);

/// (rotation(angle), 0).
AffineChannel rotation_channel(double angle);

/// Conjugation rho -> Omega rho Omega^T by an orthogonal matrix.
///
/// The induced Bloch map has entries R_jk = Tr(sigma_j Omega sigma_k Omega^T) / 2.
/// A rotation by alpha induces a rotation by 2 alpha. A reflection Omega
/// induces a reflection of the disk, so det(R) = det(Omega).
class OrthogonalChannel {
  public:
    /// Throws InvalidArgumentError unless Omega^T Omega = I within 1e-12.
    explicit OrthogonalChannel(const Mat2 &omega);

    const Mat2 &omega() const { return omega_; }
    const Mat2 &bloch_map() const { return bloch_map_; }

    /// Direct conjugation, independent of bloch_map().
    DensityMatrix conjugate(const DensityMatrix &rho) const;

  private:
    Mat2 omega_;
    Mat2 bloch_map_;
};

OrthogonalChannel orthogonal_channel(const Mat2 &omega);

/// (R_Omega, 0).
AffineChannel as_affine(const OrthogonalChannel &channel);

}  // namespace rebit
