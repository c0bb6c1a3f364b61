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

#include <algorithm>
#include <functional>
#include <utility>

namespace rebit {

double max_abs(const Mat2 &m) {
    return std::max({std::abs(m.a11), std::abs(m.a12), std::abs(m.a21), std::abs(m.a22)});
}

double max_abs_diff(const Mat2 &a, const Mat2 &b) { return max_abs(a - b); }

double max_abs_diff(const Vec2 &a, const Vec2 &b) { return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y)); }

double orthogonality_error(const Mat2 &m) { return max_abs_diff(m.transposed() * m, Mat2::identity()); }

double normalize_angle(double angle) {
    double r = std::fmod(angle, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    // fmod can hand back exactly 2*pi after the shift for tiny negative inputs.
    if (r >= kTwoPi) {
        r = 0.0;
    }
    // -0.0 + 0.0 is +0.0
    return r + 0.0;
}

Rotation2::Rotation2(double angle) : angle_(normalize_angle(angle)) {}

Mat2 Rotation2::matrix() const { return rotation_matrix(angle_); }

Rotation2 Rotation2::from_matrix(const Mat2 &r) { return Rotation2(std::atan2(r.a21, r.a11)); }

Mat2 rotation_matrix(double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c, -s, s, c};
}

namespace {

// Relative spread of the A^T A eigenvalues below which the singular values are
// treated as tied and the right factor is pinned to the identity.
constexpr double kSvdTieTolerance = 1e-14;

Svd2 svd2_at_angle(const Mat2 &a, double phi) {
    const Vec2 v1{std::cos(phi), std::sin(phi)};
    const Vec2 v2{-v1.y, v1.x};
    const Vec2 av1 = a * v1;
    const Vec2 av2 = a * v2;

    Svd2 out;
    out.s1 = av1.norm();
    const Vec2 u1 = out.s1 > 0.0 ? av1 * (1.0 / out.s1) : Vec2{1.0, 0.0};
    const Vec2 perp{-u1.y, u1.x};
    const double d = perp.dot(av2);
    const Vec2 u2 = d < 0.0 ? -perp : perp;
    out.s2 = std::abs(d);
    out.left = Mat2::from_columns(u1, u2);
    out.right = Mat2::from_columns(v1, v2);
    return out;
}

}  // namespace

Svd2 svd2(const Mat2 &a) {
    // A^T A = [[p, q], [q, r]]
    const double p = a.a11 * a.a11 + a.a21 * a.a21;
    const double r = a.a12 * a.a12 + a.a22 * a.a22;
    const double q = a.a11 * a.a12 + a.a21 * a.a22;

    double phi = 0.0;
    const double spread = std::hypot(p - r, 2.0 * q);
    if (spread > kSvdTieTolerance * (p + r)) {
        // Eigenvector of the larger eigenvalue of A^T A.
        phi = 0.5 * std::atan2(2.0 * q, p - r);
    }
    Svd2 out = svd2_at_angle(a, phi);
    if (out.s2 > out.s1) {
        out = svd2_at_angle(a, phi + 0.5 * kPi);
    }
    return out;
}

double Sym3::det() const {
    const auto &m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(1, 2)) - m(0, 1) * (m(0, 1) * m(2, 2) - m(1, 2) * m(0, 2)) +
           m(0, 2) * (m(0, 1) * m(1, 2) - m(1, 1) * m(0, 2));
}

double Sym3::principal_minor_sum() const {
    const auto &m = *this;
    return m(0, 0) * m(1, 1) - m(0, 1) * m(0, 1) + m(0, 0) * m(2, 2) - m(0, 2) * m(0, 2) + m(1, 1) * m(2, 2) -
           m(1, 2) * m(1, 2);
}

double Sym3::max_abs() const {
    double out = 0.0;
    for (double e : e_) {
        out = std::max(out, std::abs(e));
    }
    return out;
}

Sym3 Sym3::scaled(double s) const {
    Sym3 out = *this;
    for (double &e : out.e_) {
        e *= s;
    }
    return out;
}

bool Sym3::is_finite() const {
    return std::all_of(e_.begin(), e_.end(), [](double e) { return std::isfinite(e); });
}

std::array<double, 3> eig_sym3(const Sym3 &input) {
    constexpr int kMaxSweeps = 100;
    constexpr double kOffTolerance = 1e-14;
    constexpr std::array<std::pair<int, int>, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};

    double m[3][3];
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            m[i][j] = input(i, j);
        }
    }

    auto off_diagonal = [&m] { return std::max({std::abs(m[0][1]), std::abs(m[0][2]), std::abs(m[1][2])}); };

    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal() >= kOffTolerance; ++sweep) {
        for (auto [p, q] : kPairs) {
            const double apq = m[p][q];
            if (apq == 0.0) {
                continue;
            }
            const double theta = (m[q][q] - m[p][p]) / (2.0 * apq);
            double t;
            if (std::abs(theta) > 1e150) {
                t = 0.5 / theta;
            } else {
                t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
            }
            const double c = 1.0 / std::sqrt(t * t + 1.0);
            const double s = t * c;

            for (int k = 0; k < 3; ++k) {
                const double mkp = m[k][p];
                const double mkq = m[k][q];
                m[k][p] = c * mkp - s * mkq;
                m[k][q] = s * mkp + c * mkq;
            }
            for (int k = 0; k < 3; ++k) {
                const double mpk = m[p][k];
                const double mqk = m[q][k];
                m[p][k] = c * mpk - s * mqk;
                m[q][k] = s * mpk + c * mqk;
            }
            m[p][q] = 0.0;
            m[q][p] = 0.0;
        }
    }

    std::array<double, 3> out{m[0][0], m[1][1], m[2][2]};
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace rebit
