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

#include "rebit/cp.hpp"

#include <algorithm>
#include <vector>

#include "rebit/bloch.hpp"
#include "rebit/errors.hpp"

namespace rebit {

ChiMatrix chi_matrix(double l1, double l2, double w1, double w2) {
    return {Sym3(0.5 * (1.0 + l1 + l2), 0.5 * w1, 0.5 * w2, 0.5 * (1.0 + l1 - l2), 0.0, 0.5 * (1.0 - l1 + l2))};
}

ChiMatrix chi_general(const AffineChannel &channel) {
    if (!channel.is_finite()) {
        throw InvalidArgumentError("channel has non-finite entries");
    }
    if (std::abs(channel.A.a12) > kStructuralTolerance || std::abs(channel.A.a21) > kStructuralTolerance) {
        throw InvalidArgumentError("chi_general needs a diagonal linear part; decompose the channel first");
    }
    const std::array<Mat2, 3> sigma{kSigma0, kSigma1, kSigma2};
    // Images of the basis elements under the affine map on Sym(R^2).
    const std::array<Mat2, 3> image{
        kSigma0 + kSigma1 * channel.w.x + kSigma2 * channel.w.y,
        kSigma1 * channel.A.a11,
        kSigma2 * channel.A.a22,
    };
    Sym3 chi;
    for (int r = 0; r < 3; ++r) {
        for (int s = r; s < 3; ++s) {
            double sum = 0.0;
            for (int k = 0; k < 3; ++k) {
                sum += (sigma[s] * sigma[k] * sigma[r] * image[k]).trace();
            }
            chi.set(r, s, 0.25 * sum);
        }
    }
    return {chi};
}

double QValues::min() const { return std::min({q0, q1, q2}); }

QValues q_values(double l1, double l2) {
    return {0.5 * (1.0 + l1 + l2), 0.5 * (1.0 + l1 - l2), 0.5 * (1.0 - l1 + l2)};
}

CharPoly charpoly_coeffs(double l1, double l2, double w1, double w2) {
    const double sum = l1 + l2;
    CharPoly out;
    out.a = 3.0 + sum;
    out.b = 3.0 - (w1 * w1 + w2 * w2) + 2.0 * sum - sum * sum;
    out.det_chi = 0.125 * ((1.0 - l1 + l2) * ((1.0 + l1 + l2) * (1.0 + l1 - l2) - w1 * w1) -
                           w2 * w2 * (1.0 + l1 - l2));
    return out;
}

ShiftRegion shift_region_contains(double l1, double l2, double w1, double w2) {
    const QValues q = q_values(l1, l2);
    ShiftRegion out;
    out.margin = 8.0 * q.q0 * q.q1 * q.q2 - w1 * w1 * (1.0 - l1 + l2) - w2 * w2 * (1.0 + l1 - l2);
    out.contains = out.margin >= -kCpTolerance;
    return out;
}

bool diagonal_is_cp(double l1, double l2, double w1, double w2) {
    return q_values(l1, l2).min() >= -kCpTolerance && shift_region_contains(l1, l2, w1, w2).contains;
}

int chi_rank(const ChiMatrix &chi) {
    const auto eig = eig_sym3(chi.values);
    return static_cast<int>(std::count_if(eig.begin(), eig.end(), [](double e) { return e > kCpTolerance; }));
}

CpReport evaluate_form(const CanonicalForm &form) {
    const double l1 = form.lambda1;
    const double l2 = form.lambda2;
    const double w1 = form.shift.x;
    const double w2 = form.shift.y;

    CpReport out;
    out.q = q_values(l1, l2);
    const CharPoly poly = charpoly_coeffs(l1, l2, w1, w2);
    out.a = poly.a;
    out.b = poly.b;
    out.det_chi = poly.det_chi;
    const ShiftRegion region = shift_region_contains(l1, l2, w1, w2);
    out.margin = region.margin;
    out.is_cp = out.q.min() >= -kCpTolerance && region.contains;
    out.kraus_rank = out.is_cp ? chi_rank(chi_matrix(l1, l2, w1, w2)) : 0;
    out.frame = form;
    return out;
}

CpReport is_cp(const AffineChannel &channel) {
    std::vector<CanonicalForm> candidates;
    candidates.reserve(5);
    if (channel.A.a12 == 0.0 && channel.A.a21 == 0.0) {
        candidates.push_back({0.0, 0.0, channel.A.a11, channel.A.a22, channel.w});
    }
    for (const CanonicalForm &form : quarter_turn_equivalents(decompose_channel(channel))) {
        candidates.push_back(form);
    }

    for (const CanonicalForm &form : candidates) {
        CpReport report = evaluate_form(form);
        if (report.is_cp) {
            return report;
        }
    }
    return evaluate_form(candidates.front());
}

std::array<Vec2, 5> admissible_pentagon() {
    // Pairwise intersections of the edges q0 = 0, q1 = 0, q2 = 0 with the
    // square [-1, 1]^2.
    return {{{-1.0, 0.0}, {0.0, -1.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}}};
}

}  // namespace rebit
