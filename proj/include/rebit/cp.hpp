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

#include "rebit/canonical.hpp"
#include "rebit/channel.hpp"
#include "rebit/linalg.hpp"

namespace rebit {

/// One-sided slack on the positivity conditions; boundary channels count as CP.
inline constexpr double kCpTolerance = 1e-9;

/// chi-matrix of the diagonal map C_D in the basis (sigma0, sigma1, sigma2)/sqrt(2):
///
///   1/2 [[1 + l1 + l2, w1,          w2         ],
///        [w1,          1 + l1 - l2, 0          ],
///        [w2,          0,           1 - l1 + l2]]
struct ChiMatrix {
    Sym3 values;

    double operator()(int i, int j) const { return values(i, j); }
    double trace() const { return values.trace(); }
    double det() const { return values.det(); }
};

ChiMatrix chi_matrix(double lambda1, double lambda2, double w1, double w2);

/// chi_rs = 1/4 sum_k Tr[sigma_s sigma_k sigma_r C(sigma_k)], evaluated by
/// explicit matrix products. Only defined for a diagonal linear part; throws
/// InvalidArgumentError otherwise (decompose the channel first).
ChiMatrix chi_general(const AffineChannel &channel);

/// Diagonal of chi, and its eigenvalues when the shift vanishes.
struct QValues {
    double q0 = 0.0;
    double q1 = 0.0;
    double q2 = 0.0;

    double min() const;
    std::array<double, 3> as_array() const { return {q0, q1, q2}; }
};

QValues q_values(double lambda1, double lambda2);

/// Coefficients of P(x) = -x^3 + (a/2) x^2 - (b/4) x + det_chi.
struct CharPoly {
    double a = 0.0;
    double b = 0.0;
    double det_chi = 0.0;
};

CharPoly charpoly_coeffs(double lambda1, double lambda2, double w1, double w2);

struct ShiftRegion {
    bool contains = false;
    /// 8 q0 q1 q2 - w1^2 (1 - l1 + l2) - w2^2 (1 + l1 - l2), equal to 8 det(chi).
    double margin = 0.0;
};

/// Determinant condition in multiplied-out form, safe when any q vanishes.
/// Assumes q0, q1, q2 >= 0; contains means margin >= -kCpTolerance.
ShiftRegion shift_region_contains(double lambda1, double lambda2, double w1, double w2);

/// Closed-form verdict on a diagonal map: every q and the margin >= -kCpTolerance.
bool diagonal_is_cp(double lambda1, double lambda2, double w1, double w2);

/// Number of eig_sym3 eigenvalues above kCpTolerance.
int chi_rank(const ChiMatrix &chi);

struct CpReport {
    QValues q;
    double a = 0.0;
    double b = 0.0;
    double det_chi = 0.0;
    double margin = 0.0;
    bool is_cp = false;
    /// Positive chi eigenvalues; 0 when the map is not CP.
    int kraus_rank = 0;
    /// Factorization the verdict was computed on.
    CanonicalForm frame;
};

/// Report for the diagonal part (lambda, shift) of a given factorization.
CpReport evaluate_form(const CanonicalForm &form);

/// Complete-positivity verdict for an arbitrary affine channel.
///
/// The channel is CP when one of its rotation-diagonal-rotation
/// factorizations has an admissible diagonal part. Candidates, in order: the
/// trivial factorization when A is already diagonal, then the four
/// quarter-turn equivalents of decompose_channel(). The first admissible one
/// is reported; if none is, the first candidate is.
CpReport is_cp(const AffineChannel &channel);

/// Vertices of the unital admissibility region in (lambda1, lambda2),
/// counterclockwise from (-1, 0).
std::array<Vec2, 5> admissible_pentagon();

}  // namespace rebit
