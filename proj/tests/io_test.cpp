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

#include "rebit/io.hpp"

#include <gtest/gtest.h>

#include "rebit/errors.hpp"

namespace rebit::io {
namespace {

TEST(ChannelDocument, Parses) {
    const ChannelDocument d = parse_channel_document(R"({"A":[[1,2],[3,4]],"w":[0.5,-0.5],"name":"x"})");
    EXPECT_EQ(d.channel.A, (Mat2{1, 2, 3, 4}));
    EXPECT_EQ(d.channel.w, (Vec2{0.5, -0.5}));
    ASSERT_TRUE(d.name.has_value());
    EXPECT_EQ(*d.name, "x");
    EXPECT_FALSE(parse_channel_document(R"({"A":[[1,0],[0,1]],"w":[0,0]})").name.has_value());
}

TEST(ChannelDocument, RoundTrips) {
    const ChannelDocument d{{Mat2{0.1, -0.2, 0.3, 0.25}, {0.125, 1e-17}}, std::string("c")};
    const ChannelDocument back = channel_document_from_json(to_json(d));
    EXPECT_EQ(back.channel, d.channel);
    EXPECT_EQ(back.name, d.name);
}

TEST(ChannelDocument, RejectsMalformed) {
    for (const char *text : {
             "",
             "[]",
             "{",
             R"({"A":[[1,0],[0,1]]})",
             R"({"w":[0,0]})",
             R"({"A":[[1,0],[0,1]],"w":[0,0],"extra":1})",
             R"({"A":[[1,0]],"w":[0,0]})",
             R"({"A":[[1,0,0],[0,1]],"w":[0,0]})",
             R"({"A":[[1,0],[0,"1"]],"w":[0,0]})",
             R"({"A":[[1,0],[0,1]],"w":[0]})",
             R"({"A":[[1,0],[0,1]],"w":[0,null]})",
             R"({"A":[[1,0],[0,1]],"w":[0,0],"name":3})",
             R"({"A":[[1e400,0],[0,1]],"w":[0,0]})",
         }) {
        EXPECT_THROW(parse_channel_document(text), InvalidArgumentError) << text;
    }
}

TEST(Json, CpReportFields) {
    const Json j = to_json(is_cp(AffineChannel::identity()));
    EXPECT_EQ(j.dump(), R"({"q":[1.5,0.5,0.5],"a":5.0,"b":3.0,"det_chi":0.375,"margin":3.0,"is_cp":true,"kraus_rank":3})");
}

TEST(Json, ClassificationFields) {
    const Json j = to_json(classify(AffineChannel{Mat2::diag(0.4, 0), {}}), 3);
    EXPECT_EQ(j.dump(), R"({"class":"Linear","params":{"axis":"horizontal","q":0.4},"kraus_rank":3})");
    const Json e = to_json(image_ellipse(AffineChannel{Mat2::diag(0.8, 0.2), {0.1, 0}}));
    EXPECT_EQ(e.dump(), R"({"center":[0.1,0.0],"axes":[0.8,0.2],"tilt":0.0})");
}

TEST(Json, NoNegativeZero) {
    EXPECT_FALSE(std::signbit(clean(-0.0)));
    const Json j = to_json(decompose_channel({Mat2::diag(-0.0, 0.0), {-0.0, 0.0}}), 0.0);
    EXPECT_EQ(j.dump().find("-0"), std::string::npos) << j.dump();
}

}  // namespace
}  // namespace rebit::io
