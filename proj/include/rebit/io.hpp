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

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "rebit/canonical.hpp"
#include "rebit/channel.hpp"
#include "rebit/classify.hpp"
#include "rebit/cp.hpp"

namespace rebit::io {

/// Key order in emitted documents follows insertion order.
using Json = nlohmann::ordered_json;

/// {"A": [[a11, a12], [a21, a22]], "w": [w1, w2], "name": optional string}
struct ChannelDocument {
    AffineChannel channel;
    std::optional<std::string> name;
};

/// Throws InvalidArgumentError on malformed JSON, unknown keys, wrong shapes
/// or non-finite numbers.
ChannelDocument parse_channel_document(std::string_view text);
ChannelDocument channel_document_from_json(const Json &json);

Json to_json(const ChannelDocument &doc);
Json to_json(const CpReport &report);
/// {"theta1", "theta2", "lambda", "shift", "residual"}
Json to_json(const CanonicalForm &form, double residual);
/// {"class", "params", "kraus_rank"}
Json to_json(const ChannelClass &cls, int kraus_rank);
/// {"center", "axes", "tilt"}
Json to_json(const ImageEllipse &ellipse);

/// Maps -0.0 to 0.0 so that emitted numbers never carry a spurious sign.
double clean(double x);

}  // namespace rebit::io
