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

#include "rebit/svg.hpp"

#include <gtest/gtest.h>

#include <regex>

namespace rebit::svg {
namespace {

int count(const std::string &text, const std::string &needle) {
    int n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
        ++n;
    }
    return n;
}

TEST(Format, TrimsAndNeverPrintsNegativeZero) {
    EXPECT_EQ(format_number(256.0), "256");
    EXPECT_EQ(format_number(1.5), "1.5");
    EXPECT_EQ(format_number(-0.0), "0");
    EXPECT_EQ(format_number(-0.0001), "0");
    EXPECT_EQ(format_number(-12.3456), "-12.346");
}

TEST(ChannelSvg, Structure) {
    const std::string s = render_channel(AffineChannel::identity());
    EXPECT_EQ(s.rfind("<?xml", 0), 0u);
    EXPECT_NE(s.find("width=\"512\" height=\"512\""), std::string::npos);
    EXPECT_NE(s.find("<circle class=\"disk\" cx=\"256\" cy=\"256\" r=\"200\"/>"), std::string::npos);
    for (int k = 0; k < 4; ++k) {
        EXPECT_EQ(count(s, "class=\"marker-" + std::to_string(k) + "\""), 1);
    }
    EXPECT_EQ(count(s, "class=\"axis\""), 2);
    // identity image coincides with the disk outline
    EXPECT_NE(s.find("<ellipse class=\"image\" cx=\"256\" cy=\"256\" rx=\"200\" ry=\"200\""), std::string::npos);
    EXPECT_NE(s.find("completely positive: yes"), std::string::npos);
    EXPECT_FALSE(std::regex_search(s, std::regex("[\" (]-0[\" ,)]")));
}

TEST(ChannelSvg, DegenerateImages) {
    const std::string segment = render_channel({Mat2::diag(0, 1), {}});
    EXPECT_NE(segment.find("<line class=\"image\" x1=\"256\" y1=\"56\" x2=\"256\" y2=\"456\"/>"), std::string::npos);
    const std::string point = render_channel({Mat2{}, {}});
    EXPECT_NE(point.find("<circle class=\"image\" cx=\"256\" cy=\"256\""), std::string::npos);
    EXPECT_NE(render_channel({Mat2::diag(1, -1), {}}).find("completely positive: no"), std::string::npos);
}

TEST(ChannelSvg, TiltedEllipse) {
    const AffineChannel c{rotation_matrix(0.25 * kPi) * Mat2::diag(0.8, 0.2), {}};
    EXPECT_NE(render_channel(c).find("transform=\"rotate(-45 256 256)\""), std::string::npos);
}

TEST(ChannelSvg, Deterministic) {
    const AffineChannel c{Mat2{0.3, -0.2, 0.1, 0.4}, {0.05, 0.1}};
    EXPECT_EQ(render_channel(c), render_channel(c));
}

TEST(RegionSvg, PentagonVertices) {
    const std::string s = render_region();
    std::smatch m;
    ASSERT_TRUE(std::regex_search(s, m, std::regex("<polygon class=\"region\" points=\"([^\"]*)\"/>")));
    EXPECT_EQ(m[1].str(), "56,256 256,456 456,256 456,56 256,56");
    for (const char *label : {"(-1, 0)", "(0, -1)", "(1, 0)", "(1, 1)", "(0, 1)"}) {
        EXPECT_EQ(count(s, label), 1) << label;
    }
    EXPECT_EQ(s, render_region());
}

}  // namespace
}  // namespace rebit::svg
