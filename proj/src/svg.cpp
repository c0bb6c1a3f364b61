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

#include <cmath>
#include <cstdio>
#include <sstream>

#include "rebit/canonical.hpp"
#include "rebit/classify.hpp"
#include "rebit/cp.hpp"

namespace rebit::svg {

namespace {

constexpr double kCenter = kViewport / 2.0;

// Bloch-disk coordinates to SVG user units (y grows downward).
double px(double x) { return kCenter + kDiskRadius * x; }
double py(double y) { return kCenter - kDiskRadius * y; }

std::string fixed(double x, int decimals) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, x);
    std::string out = buffer;
    if (out.find_first_not_of("-0.") == std::string::npos) {
        return decimals > 0 ? "0." + std::string(static_cast<std::size_t>(decimals), '0') : "0";
    }
    return out;
}

void header(std::ostringstream &out, const char *title) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kViewport << "\" height=\""
        << kViewport << "\" viewBox=\"0 0 " << kViewport << ' ' << kViewport << "\">\n"
        << "<title>" << title << "</title>\n";
}

}  // namespace

std::string format_number(double x, int decimals) {
    std::string out = fixed(x, decimals);
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0') {
            out.pop_back();
        }
        if (out.back() == '.') {
            out.pop_back();
        }
    }
    return out;
}

std::string render_channel(const AffineChannel &channel) {
    const auto f = [](double x) { return format_number(x); };
    const ImageEllipse image = image_ellipse(channel);
    const CanonicalForm form = decompose_channel(channel);
    const bool cp = is_cp(channel).is_cp;

    std::ostringstream out;
    header(out, "Bloch disk image");
    out << "<style>\n"
        << "  .disk { fill: none; stroke: #000000; stroke-width: 1.5 }\n"
        << "  .axis { stroke: #888888; stroke-width: 1; stroke-dasharray: 4 3 }\n"
        << "  .marker-0 { fill: #d62728 }\n"
        << "  .marker-1 { fill: #e6b800 }\n"
        << "  .marker-2 { fill: #2ca02c }\n"
        << "  .marker-3 { fill: #1f4fd6 }\n"
        << "  .image { fill: #7b3294; fill-opacity: 0.25; stroke: #7b3294; stroke-width: 2 }\n"
        << "  .legend { font-family: monospace; font-size: 13px; fill: #000000 }\n"
        << "</style>\n"
        << "<rect width=\"" << kViewport << "\" height=\"" << kViewport << "\" fill=\"#ffffff\"/>\n";

    const double extent = 1.1;
    out << "<line class=\"axis\" x1=\"" << f(px(-extent)) << "\" y1=\"" << f(py(0)) << "\" x2=\"" << f(px(extent))
        << "\" y2=\"" << f(py(0)) << "\"/>\n";
    out << "<line class=\"axis\" x1=\"" << f(px(0)) << "\" y1=\"" << f(py(-extent)) << "\" x2=\"" << f(px(0))
        << "\" y2=\"" << f(py(extent)) << "\"/>\n";
    out << "<circle class=\"disk\" cx=\"" << f(px(0)) << "\" cy=\"" << f(py(0)) << "\" r=\"" << f(kDiskRadius)
        << "\"/>\n";

    const Vec2 markers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (int k = 0; k < 4; ++k) {
        out << "<circle class=\"marker-" << k << "\" cx=\"" << f(px(markers[k].x)) << "\" cy=\""
            << f(py(markers[k].y)) << "\" r=\"6\"/>\n";
    }

    const double cx = px(image.center.x);
    const double cy = py(image.center.y);
    switch (image.shape()) {
    case ImageEllipse::Shape::point:
        out << "<circle class=\"image\" cx=\"" << f(cx) << "\" cy=\"" << f(cy) << "\" r=\"4\"/>\n";
        break;
    case ImageEllipse::Shape::segment: {
        const Vec2 half = Vec2{std::cos(image.tilt), std::sin(image.tilt)} * image.axis1;
        const Vec2 p = image.center + half;
        const Vec2 q = image.center - half;
        out << "<line class=\"image\" x1=\"" << f(px(p.x)) << "\" y1=\"" << f(py(p.y)) << "\" x2=\"" << f(px(q.x))
            << "\" y2=\"" << f(py(q.y)) << "\"/>\n";
        break;
    }
    case ImageEllipse::Shape::ellipse: {
        // SVG rotates clockwise on screen because its y axis points down.
        const double degrees = -image.tilt * 180.0 / kPi;
        out << "<ellipse class=\"image\" cx=\"" << f(cx) << "\" cy=\"" << f(cy) << "\" rx=\""
            << f(kDiskRadius * image.axis1) << "\" ry=\"" << f(kDiskRadius * image.axis2) << "\" transform=\"rotate("
            << f(degrees) << ' ' << f(cx) << ' ' << f(cy) << ")\"/>\n";
        break;
    }
    }

    const auto g = [](double x) { return fixed(x, 4); };
    out << "<text class=\"legend\" x=\"12\" y=\"468\">\xCE\xBB\xE2\x82\x81 = " << g(form.lambda1)
        << "  \xCE\xBB\xE2\x82\x82 = " << g(form.lambda2) << "</text>\n";
    out << "<text class=\"legend\" x=\"12\" y=\"484\">w = (" << g(channel.w.x) << ", " << g(channel.w.y)
        << ")</text>\n";
    out << "<text class=\"legend\" x=\"12\" y=\"500\">completely positive: " << (cp ? "yes" : "no") << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

std::string render_region() {
    const auto f = [](double x) { return format_number(x); };
    std::ostringstream out;
    header(out, "Admissibility region");
    out << "<style>\n"
        << "  .frame { fill: none; stroke: #000000; stroke-width: 1 }\n"
        << "  .axis { stroke: #888888; stroke-width: 1; stroke-dasharray: 4 3 }\n"
        << "  .region { fill: #9ecae1; fill-opacity: 0.6; stroke: #08519c; stroke-width: 2 }\n"
        << "  .vertex { fill: #08519c }\n"
        << "  .label { font-family: monospace; font-size: 13px; fill: #000000 }\n"
        << "</style>\n"
        << "<rect width=\"" << kViewport << "\" height=\"" << kViewport << "\" fill=\"#ffffff\"/>\n";

    out << "<rect class=\"frame\" x=\"" << f(px(-1)) << "\" y=\"" << f(py(1)) << "\" width=\"" << f(2 * kDiskRadius)
        << "\" height=\"" << f(2 * kDiskRadius) << "\"/>\n";
    out << "<line class=\"axis\" x1=\"" << f(px(-1)) << "\" y1=\"" << f(py(0)) << "\" x2=\"" << f(px(1))
        << "\" y2=\"" << f(py(0)) << "\"/>\n";
    out << "<line class=\"axis\" x1=\"" << f(px(0)) << "\" y1=\"" << f(py(-1)) << "\" x2=\"" << f(px(0))
        << "\" y2=\"" << f(py(1)) << "\"/>\n";

    const auto vertices = admissible_pentagon();
    out << "<polygon class=\"region\" points=\"";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        out << (i ? " " : "") << f(px(vertices[i].x)) << ',' << f(py(vertices[i].y));
    }
    out << "\"/>\n";

    // Label offsets push each label away from the polygon.
    const Vec2 offsets[5] = {{-44, -10}, {8, 18}, {8, 18}, {8, -10}, {8, -10}};
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Vec2 &v = vertices[i];
        out << "<circle class=\"vertex\" cx=\"" << f(px(v.x)) << "\" cy=\"" << f(py(v.y)) << "\" r=\"4\"/>\n";
        out << "<text class=\"label\" x=\"" << f(px(v.x) + offsets[i].x) << "\" y=\"" << f(py(v.y) + offsets[i].y)
            << "\">(" << f(v.x) << ", " << f(v.y) << ")</text>\n";
    }
    out << "<text class=\"label\" x=\"" << f(px(1) - 12) << "\" y=\"" << f(py(-1) + 20) << "\">\xCE\xBB\xE2\x82\x81</text>\n";
    out << "<text class=\"label\" x=\"" << f(px(-1) - 24) << "\" y=\"" << f(py(1) + 12) << "\">\xCE\xBB\xE2\x82\x82</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace rebit::svg
