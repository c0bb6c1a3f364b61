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

#include <string>

#include "rebit/linalg.hpp"

namespace rebit {

/// Tolerance for structural checks (symmetry, unit trace, Bloch norm).
inline constexpr double kStructuralTolerance = 1e-12;
/// Tolerance for derived spectral facts (purity via det, eigenvalue signs).
inline constexpr double kSpectralTolerance = 1e-10;

/// Real Pauli basis of the symmetric 2x2 operators.
inline constexpr Mat2 kSigma0 = Mat2::identity();
inline constexpr Mat2 kSigma1 = Mat2::diag(1.0, -1.0);
inline constexpr Mat2 kSigma2 = {0.0, 1.0, 1.0, 0.0};

struct BlochVector {
    Vec2 v;

    double norm() const { return v.norm(); }
    bool is_pure(double tolerance = kSpectralTolerance) const { return std::abs(norm() - 1.0) <= tolerance; }
};

/// Symmetric, unit-trace, positive semi-definite 2x2 real matrix.
class DensityMatrix {
  public:
    /// Validates m; throws InvalidStateError with the failing condition.
    static DensityMatrix from_matrix(const Mat2 &m);

    /// rho = (I + v.sigma) / 2, accepting |v| <= 1 + tolerance.
    static DensityMatrix from_bloch(const Vec2 &v, double tolerance = kStructuralTolerance);

    const Mat2 &matrix() const { return m_; }
    double trace() const { return m_.trace(); }
    double det() const { return m_.det(); }

  private:
    explicit DensityMatrix(const Mat2 &m) : m_(m) {}

    Mat2 m_;
};

struct StateCheck {
    bool valid = true;
    std::string reason;

    explicit operator bool() const { return valid; }
};

/// Symmetric within 1e-12, trace 1 within 1e-12 and Bloch norm <= 1 + 1e-12.
StateCheck is_valid_state(const Mat2 &m);

/// v_k = Tr(sigma_k rho).
BlochVector bloch_from_density(const DensityMatrix &rho);
/// Same, for an unvalidated matrix. Rejects asymmetric or non-unit-trace input.
BlochVector bloch_from_density(const Mat2 &m);

/// Throws InvalidStateError when |v| > 1 + 1e-12.
DensityMatrix density_from_bloch(const BlochVector &v);

/// State at polar coordinates (r, theta) of the Bloch disk; r must lie in [0, 1].
DensityMatrix state_polar(double r, double theta);

}  // namespace rebit
