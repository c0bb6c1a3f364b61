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

#include "rebit/channel.hpp"

namespace rebit::svg {

inline constexpr int kViewport = 512;
inline constexpr double kDiskRadius = 200.0;

/// SVG 1.1 picture of the Bloch disk and its image under the channel: disk
/// outline, axes, four boundary markers (marker-0 .. marker-3 at angles 0,
/// pi/2, pi, 3 pi/2), the image ellipse, segment or point, and a legend.
/// Output is a pure function of the channel.
std::string render_channel(const AffineChannel &channel);

/// SVG 1.1 picture of the admissibility pentagon in the (lambda1, lambda2)
/// square [-1, 1]^2 with labeled vertices.
std::string render_region();

/// Fixed-point formatting with at most `decimals` digits, trailing zeros
/// dropped and no negative zero.
std::string format_number(double x, int decimals = 3);

}  // namespace rebit::svg
