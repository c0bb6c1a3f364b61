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
#include <cmath>
#include <numbers>

namespace rebit {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2 operator+(const Vec2 &o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(const Vec2 &o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr bool operator==(const Vec2 &) const = default;

    constexpr double dot(const Vec2 &o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
    bool is_finite() const { return std::isfinite(x) && std::isfinite(y); }
};

/// Row-major 2x2 real matrix.
struct Mat2 {
    double a11 = 0.0;
    double a12 = 0.0;
    double a21 = 0.0;
    double a22 = 0.0;

    static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr Mat2 diag(double d1, double d2) { return {d1, 0.0, 0.0, d2}; }
    /// Matrix whose columns are c1 and c2.
    static constexpr Mat2 from_columns(const Vec2 &c1, const Vec2 &c2) { return {c1.x, c2.x, c1.y, c2.y}; }

    constexpr Mat2 operator*(const Mat2 &o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
    constexpr Vec2 operator*(const Vec2 &v) const { return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y}; }
    constexpr Mat2 operator*(double s) const { return {a11 * s, a12 * s, a21 * s, a22 * s}; }
    constexpr Mat2 operator+(const Mat2 &o) const { return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22}; }
    constexpr Mat2 operator-(const Mat2 &o) const { return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22}; }
    constexpr bool operator==(const Mat2 &) const = default;

    constexpr Mat2 transposed() const { return {a11, a21, a12, a22}; }
    constexpr double det() const { return a11 * a22 - a12 * a21; }
    constexpr double trace() const { return a11 + a22; }
    constexpr Vec2 col1() const { return {a11, a21}; }
    constexpr Vec2 col2() const { return {a12, a22}; }
    bool is_finite() const {
        return std::isfinite(a11) && std::isfinite(a12) && std::isfinite(a21) && std::isfinite(a22);
    }
};

/// Largest absolute entry.
double max_abs(const Mat2 &m);
double max_abs_diff(const Mat2 &a, const Mat2 &b);
double max_abs_diff(const Vec2 &a, const Vec2 &b);

/// max-abs deviation of m^T m from the identity.
double orthogonality_error(const Mat2 &m);

/// Rotation by an angle, stored normalized to [0, 2*pi).
class Rotation2 {
  public:
    Rotation2() = default;
    explicit Rotation2(double angle);

    double angle() const { return angle_; }
    Mat2 matrix() const;
    Rotation2 inverse() const { return Rotation2(-angle_); }
    Rotation2 operator*(const Rotation2 &o) const { return Rotation2(angle_ + o.angle_); }

    /// Angle of a matrix assumed to lie in SO(2).
    static Rotation2 from_matrix(const Mat2 &r);

  private:
    double angle_ = 0.0;
};

/// Wraps an angle into [0, 2*pi).
double normalize_angle(double angle);

Mat2 rotation_matrix(double angle);

/// Closed-form singular value decomposition A = left * diag(s1, s2) * right^T.
struct Svd2 {
    Mat2 left;
    double s1 = 0.0;
    double s2 = 0.0;
    Mat2 right;

    Mat2 reconstruct() const { return left * Mat2::diag(s1, s2) * right.transposed(); }
};

/// Closed-form SVD of a 2x2 matrix from the eigenvectors of A^T A.
///
/// The right factor is always a proper rotation; any reflection is carried by
/// the left factor. Singular values satisfy s1 >= s2 >= 0. When s1 == s2 (up
/// to rounding of A^T A) the right factor is the identity. No iteration.
Svd2 svd2(const Mat2 &a);

/// Real symmetric 3x3 matrix; only the upper triangle is stored.
class Sym3 {
  public:
    Sym3() = default;
    Sym3(double s00, double s01, double s02, double s11, double s12, double s22)
        : e_{s00, s01, s02, s11, s12, s22} {}

    static Sym3 diag(double d0, double d1, double d2) { return {d0, 0.0, 0.0, d1, 0.0, d2}; }

    double operator()(int i, int j) const { return e_[index(i, j)]; }
    void set(int i, int j, double v) { e_[index(i, j)] = v; }

    double trace() const { return e_[0] + e_[3] + e_[5]; }
    double det() const;
    /// Sum of the three 2x2 principal minors.
    double principal_minor_sum() const;
    double max_abs() const;
    Sym3 scaled(double s) const;
    bool is_finite() const;

  private:
    static int index(int i, int j) {
        if (i > j) {
            int t = i;
            i = j;
            j = t;
        }
        // (0,0)=0 (0,1)=1 (0,2)=2 (1,1)=3 (1,2)=4 (2,2)=5
        return i == 0 ? j : (i == 1 ? 2 + j : 5);
    }

    std::array<double, 6> e_{};
};

/// Eigenvalues of a symmetric 3x3 matrix, sorted descending.
///
/// Cyclic Jacobi rotations until the largest off-diagonal magnitude drops
/// below 1e-14 or 100 sweeps have run. This is the numeric oracle for the
/// closed-form positivity conditions in cp and shares no code with them.
std::array<double, 3> eig_sym3(const Sym3 &m);

}  // namespace rebit
