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

#include "rebit/classify.hpp"

#include <algorithm>

#include "rebit/errors.hpp"
#include "rebit/random.hpp"

namespace rebit {

namespace {

bool near(double x, double y) { return std::abs(x - y) <= kFamilyTolerance; }

// Below this an image semi-axis is treated as collapsed.
constexpr double kDegenerateAxis = 1e-12;

}  // namespace

std::string to_string(Axis axis) { return axis == Axis::horizontal ? "horizontal" : "vertical"; }

std::string class_name(const ChannelClass &cls) {
    struct Visitor {
        std::string operator()(const family::Identity &) const { return "Identity"; }
        std::string operator()(const family::PhaseFlip &) const { return "PhaseFlip"; }
        std::string operator()(const family::Depolarizing &) const { return "Depolarizing"; }
        std::string operator()(const family::CompletelyDepolarizing &) const { return "CompletelyDepolarizing"; }
        std::string operator()(const family::Linear &) const { return "Linear"; }
        std::string operator()(const family::General &) const { return "General"; }
    };
    return std::visit(Visitor{}, cls);
}

int kraus_rank(const AffineChannel &channel) {
    const CpReport report = is_cp(channel);
    if (!report.is_cp) {
        throw NotCompletelyPositiveError("Kraus rank is only defined for completely positive channels");
    }
    return report.kraus_rank;
}

ChannelClass classify(const CpReport &report) {
    if (!report.is_cp) {
        throw NotCompletelyPositiveError("only completely positive channels are classified");
    }
    const double l1 = report.frame.lambda1;
    const double l2 = report.frame.lambda2;
    const bool zero_shift = report.frame.shift.norm() <= kFamilyTolerance;

    if (zero_shift) {
        if (near(l1, 1.0) && near(l2, 1.0)) {
            return family::Identity{};
        }
        if (near(l1, 0.0) && near(l2, 0.0)) {
            return family::CompletelyDepolarizing{};
        }
        if (near(std::abs(l1), std::abs(l2))) {
            return family::Depolarizing{std::abs(l1), l1 < 0.0, l2 < 0.0};
        }
        if (near(l2, 1.0) && l1 >= -kFamilyTolerance) {
            return family::PhaseFlip{Axis::vertical, std::min(1.0, 1.0 - l1)};
        }
        if (near(l1, 1.0) && l2 >= -kFamilyTolerance) {
            return family::PhaseFlip{Axis::horizontal, std::min(1.0, 1.0 - l2)};
        }
        if (near(l2, 0.0)) {
            return family::Linear{Axis::horizontal, l1};
        }
        if (near(l1, 0.0)) {
            return family::Linear{Axis::vertical, l2};
        }
    }
    return family::General{report.kraus_rank, zero_shift};
}

ChannelClass classify(const AffineChannel &channel) { return classify(is_cp(channel)); }

ImageEllipse::Shape ImageEllipse::shape() const {
    if (axis1 <= kDegenerateAxis) {
        return Shape::point;
    }
    if (axis2 <= kDegenerateAxis) {
        return Shape::segment;
    }
    return Shape::ellipse;
}

ImageEllipse image_ellipse(const AffineChannel &channel) {
    const CanonicalForm form = decompose_channel(channel);
    return {channel.w, std::abs(form.lambda1), std::abs(form.lambda2), form.theta1};
}

AffineChannel sample_cp_channel(std::uint64_t seed, bool unital) {
    UniformSource rng(seed);

    double l1 = 0.0;
    double l2 = 0.0;
    do {
        l1 = rng.uniform(-1.0, 1.0);
        l2 = rng.uniform(-1.0, 1.0);
    } while (q_values(l1, l2).min() < 0.0);

    Vec2 shift;
    if (!unital) {
        // Semi-axes of w1^2 / (4 q0 q1) + w2^2 / (4 q0 q2) <= 1.
        const QValues q = q_values(l1, l2);
        const double half_w1 = std::sqrt(std::max(0.0, 4.0 * q.q0 * q.q1));
        const double half_w2 = std::sqrt(std::max(0.0, 4.0 * q.q0 * q.q2));
        do {
            shift = {rng.uniform(-half_w1, half_w1), rng.uniform(-half_w2, half_w2)};
        } while (shift_region_contains(l1, l2, shift.x, shift.y).margin < 0.0);
    }

    const double alpha = rng.uniform(0.0, kTwoPi);
    const double beta = rng.uniform(0.0, kTwoPi);
    const Mat2 left = rotation_matrix(alpha);
    return {left * Mat2::diag(l1, l2) * rotation_matrix(beta), left * shift};
}

}  // namespace rebit
