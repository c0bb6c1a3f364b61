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

#include "rebit/bloch.hpp"

#include "rebit/errors.hpp"

namespace rebit {

namespace {

Vec2 bloch_components(const Mat2 &m) {
    // Tr(sigma1 m), Tr(sigma2 m)
    return {m.a11 - m.a22, m.a12 + m.a21};
}

}  // namespace

StateCheck is_valid_state(const Mat2 &m) {
    if (!m.is_finite()) {
        return {false, "matrix has non-finite entries"};
    }
    if (std::abs(m.a12 - m.a21) > kStructuralTolerance) {
        return {false, "matrix is not symmetric"};
    }
    if (std::abs(m.trace() - 1.0) > kStructuralTolerance) {
        return {false, "trace is " + std::to_string(m.trace()) + ", expected 1"};
    }
    const double norm = bloch_components(m).norm();
    if (norm > 1.0 + kStructuralTolerance) {
        return {false, "Bloch vector norm " + std::to_string(norm) + " exceeds 1 (not positive semi-definite)"};
    }
    return {};
}

DensityMatrix DensityMatrix::from_matrix(const Mat2 &m) {
    if (auto check = is_valid_state(m); !check) {
        throw InvalidStateError(check.reason);
    }
    return DensityMatrix(m);
}

DensityMatrix DensityMatrix::from_bloch(const Vec2 &v, double tolerance) {
    if (!v.is_finite()) {
        throw InvalidStateError("Bloch vector has non-finite components");
    }
    if (v.norm() > 1.0 + tolerance) {
        throw InvalidStateError("Bloch vector norm " + std::to_string(v.norm()) + " exceeds 1");
    }
    return DensityMatrix({0.5 * (1.0 + v.x), 0.5 * v.y, 0.5 * v.y, 0.5 * (1.0 - v.x)});
}

BlochVector bloch_from_density(const DensityMatrix &rho) { return {bloch_components(rho.matrix())}; }

BlochVector bloch_from_density(const Mat2 &m) {
    if (!m.is_finite()) {
        throw InvalidStateError("matrix has non-finite entries");
    }
    if (std::abs(m.a12 - m.a21) > kStructuralTolerance) {
        throw InvalidStateError("matrix is not symmetric");
    }
    if (std::abs(m.trace() - 1.0) > kStructuralTolerance) {
        throw InvalidStateError("trace is " + std::to_string(m.trace()) + ", expected 1");
    }
    return {bloch_components(m)};
}

DensityMatrix density_from_bloch(const BlochVector &v) { return DensityMatrix::from_bloch(v.v); }

DensityMatrix state_polar(double r, double theta) {
    if (!(r >= 0.0 && r <= 1.0) || !std::isfinite(theta)) {
        throw InvalidStateError("polar radius must lie in [0, 1], got " + std::to_string(r));
    }
    return DensityMatrix::from_bloch({r * std::cos(theta), r * std::sin(theta)});
}

}  // namespace rebit
