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

#include <cmath>

#include "rebit/errors.hpp"

namespace rebit::io {

namespace {

double finite_number(const Json &value, const char *what) {
    if (!value.is_number()) {
        throw InvalidArgumentError(std::string(what) + " must be a number");
    }
    const double x = value.get<double>();
    if (!std::isfinite(x)) {
        throw InvalidArgumentError(std::string(what) + " is not finite");
    }
    return x;
}

Vec2 pair_of_numbers(const Json &value, const char *what) {
    if (!value.is_array() || value.size() != 2) {
        throw InvalidArgumentError(std::string(what) + " must be an array of two numbers");
    }
    return {finite_number(value[0], what), finite_number(value[1], what)};
}

Json pair(const Vec2 &v) { return Json::array({clean(v.x), clean(v.y)}); }

}  // namespace

double clean(double x) { return x == 0.0 ? 0.0 : x; }

ChannelDocument channel_document_from_json(const Json &json) {
    if (!json.is_object()) {
        throw InvalidArgumentError("channel document must be a JSON object");
    }
    for (const auto &item : json.items()) {
        if (item.key() != "A" && item.key() != "w" && item.key() != "name") {
            throw InvalidArgumentError("unknown field \"" + item.key() + "\" in channel document");
        }
    }
    if (!json.contains("A") || !json.contains("w")) {
        throw InvalidArgumentError("channel document needs both \"A\" and \"w\"");
    }

    const Json &a = json.at("A");
    if (!a.is_array() || a.size() != 2) {
        throw InvalidArgumentError("\"A\" must be a 2x2 array of numbers");
    }
    const Vec2 row1 = pair_of_numbers(a[0], "row of \"A\"");
    const Vec2 row2 = pair_of_numbers(a[1], "row of \"A\"");

    ChannelDocument doc;
    doc.channel.A = {row1.x, row1.y, row2.x, row2.y};
    doc.channel.w = pair_of_numbers(json.at("w"), "\"w\"");
    if (json.contains("name")) {
        if (!json.at("name").is_string()) {
            throw InvalidArgumentError("\"name\" must be a string");
        }
        doc.name = json.at("name").get<std::string>();
    }
    return doc;
}

ChannelDocument parse_channel_document(std::string_view text) {
    Json json;
    try {
        json = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::exception &e) {
        throw InvalidArgumentError(std::string("invalid JSON: ") + e.what());
    }
    return channel_document_from_json(json);
}

Json to_json(const ChannelDocument &doc) {
    const Mat2 &a = doc.channel.A;
    Json out;
    out["A"] = Json::array({pair({a.a11, a.a12}), pair({a.a21, a.a22})});
    out["w"] = pair(doc.channel.w);
    if (doc.name) {
        out["name"] = *doc.name;
    }
    return out;
}

Json to_json(const CpReport &report) {
    Json out;
    out["q"] = Json::array({clean(report.q.q0), clean(report.q.q1), clean(report.q.q2)});
    out["a"] = clean(report.a);
    out["b"] = clean(report.b);
    out["det_chi"] = clean(report.det_chi);
    out["margin"] = clean(report.margin);
    out["is_cp"] = report.is_cp;
    out["kraus_rank"] = report.kraus_rank;
    return out;
}

Json to_json(const CanonicalForm &form, double residual) {
    Json out;
    out["theta1"] = clean(form.theta1);
    out["theta2"] = clean(form.theta2);
    out["lambda"] = pair({form.lambda1, form.lambda2});
    out["shift"] = pair(form.shift);
    out["residual"] = clean(residual);
    return out;
}

Json to_json(const ChannelClass &cls, int kraus_rank) {
    struct Params {
        Json operator()(const family::Identity &) const { return Json::object(); }
        Json operator()(const family::CompletelyDepolarizing &) const { return Json::object(); }
        Json operator()(const family::PhaseFlip &f) const {
            return {{"fixed_axis", to_string(f.fixed_axis)}, {"p", clean(f.p)}};
        }
        Json operator()(const family::Depolarizing &f) const {
            return {{"r", clean(f.r)}, {"reflect_1", f.reflect_1}, {"reflect_2", f.reflect_2}};
        }
        Json operator()(const family::Linear &f) const { return {{"axis", to_string(f.axis)}, {"q", clean(f.q)}}; }
        Json operator()(const family::General &f) const { return {{"rank", f.rank}, {"unital", f.unital}}; }
    };
    Json out;
    out["class"] = class_name(cls);
    out["params"] = std::visit(Params{}, cls);
    out["kraus_rank"] = kraus_rank;
    return out;
}

Json to_json(const ImageEllipse &ellipse) {
    Json out;
    out["center"] = pair(ellipse.center);
    out["axes"] = pair({ellipse.axis1, ellipse.axis2});
    out["tilt"] = clean(ellipse.tilt);
    return out;
}

}  // namespace rebit::io
