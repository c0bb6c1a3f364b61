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

#include "rebit/channel.hpp"

#include <array>

#include "rebit/errors.hpp"

namespace rebit {

DensityMatrix apply(const AffineChannel &channel, const DensityMatrix &rho) {
    const Vec2 out = channel.map(bloch_from_density(rho).v);
    const double norm = out.norm();
    if (!(norm <= 1.0 + kPositivityTolerance)) {
        throw NotPositiveError(norm);
    }
    return DensityMatrix::from_bloch(out, kPositivityTolerance);
}

AffineChannel compose(const AffineChannel &outer, const AffineChannel &inner) {
    return {outer.A * inner.A, outer.w + outer.A * inner.w};
}

bool is_unital(const AffineChannel &channel) { return channel.w.norm() <= kStructuralTolerance; }

AffineChannel rotation_channel(double angle) { return {rotation_matrix(angle), {}}; }

OrthogonalChannel::OrthogonalChannel(const Mat2 &omega) : omega_(omega) {
    if (!omega.is_finite() || orthogonality_error(omega) > kStructuralTolerance) {
        throw InvalidArgumentError("matrix is not orthogonal");
    }
    const std::array<Mat2, 2> sigma{kSigma1, kSigma2};
    const Mat2 omega_t = omega.transposed();
    double r[2][2];
    for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
            r[j][k] = 0.5 * (sigma[j] * omega * sigma[k] * omega_t).trace();
        }
    }
    bloch_map_ = {r[0][0], r[0][1], r[1][0], r[1][1]};
}

DensityMatrix OrthogonalChannel::conjugate(const DensityMatrix &rho) const {
    return DensityMatrix::from_matrix(omega_ * rho.matrix() * omega_.transposed());
}

OrthogonalChannel orthogonal_channel(const Mat2 &omega) { return OrthogonalChannel(omega); }

AffineChannel as_affine(const OrthogonalChannel &channel) { return {channel.bloch_map(), {}}; }

}  // namespace rebit
