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

#include <cstdint>
#include <string>
#include <variant>

#include "rebit/canonical.hpp"
#include "rebit/channel.hpp"
#include "rebit/cp.hpp"

namespace rebit {

/// Tolerance for matching a channel to a named family.
inline constexpr double kFamilyTolerance = 1e-9;

enum class Axis { horizontal, vertical };

std::string to_string(Axis axis);

namespace family {

struct Identity {};

/// (1 - p, 1) fixes the vertical axis; (1, 1 - p) fixes the horizontal one.
struct PhaseFlip {
    Axis fixed_axis = Axis::vertical;
    double p = 0.0;
};

struct Depolarizing {
    double r = 0.0;
    bool reflect_1 = false;
    bool reflect_2 = false;
};

struct CompletelyDepolarizing {};

/// Disk collapsed onto a segment along `axis` with half-length |q|.
struct Linear {
    Axis axis = Axis::horizontal;
    double q = 0.0;
};

struct General {
    int rank = 3;
    bool unital = true;
};

}  // namespace family

using ChannelClass = std::variant<family::Identity, family::PhaseFlip, family::Depolarizing,
                                  family::CompletelyDepolarizing, family::Linear, family::General>;

/// "Identity", "PhaseFlip", ...
std::string class_name(const ChannelClass &cls);

/// Kraus rank of a CP channel; throws NotCompletelyPositiveError otherwise.
int kraus_rank(const AffineChannel &channel);

/// Family of a CP channel, decided on the factorization is_cp() reports.
/// Precedence: Identity, CompletelyDepolarizing, Depolarizing, PhaseFlip,
/// Linear, General. Throws NotCompletelyPositiveError for non-CP input.
ChannelClass classify(const AffineChannel &channel);

/// Same, from an existing CP report.
ChannelClass classify(const CpReport &report);

/// Image of the Bloch disk: center w, semi-axes |lambda1| >= |lambda2| along
/// the columns of rotation(tilt). Defined for any channel, CP or not.
struct ImageEllipse {
    enum class Shape { ellipse, segment, point };

    Vec2 center;
    double axis1 = 0.0;
    double axis2 = 0.0;
    double tilt = 0.0;

    Shape shape() const;
};

ImageEllipse image_ellipse(const AffineChannel &channel);

/// Deterministic random CP channel.
///
/// (lambda1, lambda2) is uniform over the admissibility pentagon by rejection
/// from [-1, 1]^2. A non-unital shift is uniform over the shift ellipse by
/// rejection from its bounding box against the multiplied-out determinant
/// condition. Both dressing angles are uniform on [0, 2 pi).
AffineChannel sample_cp_channel(std::uint64_t seed, bool unital);

}  // namespace rebit
