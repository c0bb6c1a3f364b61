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

#include "rebit/cli.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "rebit/canonical.hpp"
#include "rebit/classify.hpp"
#include "rebit/cp.hpp"
#include "rebit/errors.hpp"
#include "rebit/io.hpp"
#include "rebit/random.hpp"
#include "rebit/svg.hpp"
#include "rebit/sweep.hpp"

namespace rebit::cli {

namespace {

using io::Json;

struct Streams {
    std::istream &in;
    std::ostream &out;
    std::ostream &err;
};

void print(std::ostream &out, const Json &json) { out << json.dump(2) << '\n'; }

AffineChannel load_channel(const std::string &path, std::istream &in) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) {
            throw InvalidArgumentError("cannot open " + path);
        }
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    return io::parse_channel_document(text).channel;
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw InvalidArgumentError("cannot write " + path);
    }
    file << content;
    file.close();
    if (!file) {
        throw InvalidArgumentError("error writing " + path);
    }
}

int cmd_check(const std::string &path, Streams s) {
    const CpReport report = is_cp(load_channel(path, s.in));
    print(s.out, io::to_json(report));
    return report.is_cp ? kOk : kRejected;
}

int cmd_decompose(const std::string &path, Streams s) {
    const AffineChannel channel = load_channel(path, s.in);
    const CanonicalForm form = decompose_channel(channel);
    print(s.out, io::to_json(form, reconstruction_residual(channel, form)));
    return kOk;
}

int cmd_classify(const std::string &path, Streams s) {
    const CpReport report = is_cp(load_channel(path, s.in));
    if (!report.is_cp) {
        print(s.out, io::to_json(report));
        s.err << "error: channel is not completely positive; no classification\n";
        return kRejected;
    }
    print(s.out, io::to_json(classify(report), report.kraus_rank));
    return kOk;
}

int cmd_image(const std::string &path, const std::string &output, Streams s) {
    write_file(output, svg::render_channel(load_channel(path, s.in)));
    return kOk;
}

int cmd_region(const std::string &output) {
    write_file(output, svg::render_region());
    return kOk;
}

int cmd_sample(std::size_t count, std::uint64_t seed, bool unital, Streams s) {
    for (std::size_t i = 0; i < count; ++i) {
        const AffineChannel channel = sample_cp_channel(stream_seed(seed, i), unital);
        s.out << io::to_json(io::ChannelDocument{channel, std::nullopt}).dump() << '\n';
    }
    return kOk;
}

int cmd_verify(double step, std::size_t samples, std::uint64_t seed, Streams s) {
    using sweep::Execution;
    const auto start = std::chrono::steady_clock::now();
    const auto grid = sweep::unital_grid(step, Execution::parallel);
    const auto general = sweep::general_random(samples, seed, Execution::parallel);
    const auto round_trip = sweep::decomposition_round_trip(samples, seed, Execution::parallel);
    const auto angle = sweep::double_angle(samples, seed, Execution::parallel);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const std::size_t mismatches =
        grid.mismatches + general.mismatches + round_trip.failures + general.b_violations + angle.failures;

    Json report;
    report["grid_points"] = grid.points;
    report["samples"] = samples;
    report["mismatches"] = mismatches;
    report["boundary_excluded"] = general.boundary_excluded;
    report["max_roundtrip_residual"] = round_trip.max_residual;
    report["elapsed"] = elapsed;
    Json checks;
    checks["unital_grid"] = {{"points", grid.points}, {"cp_points", grid.cp_points}, {"mismatches", grid.mismatches}};
    checks["general_sweep"] = {{"samples", general.samples},
                               {"cp_accepted", general.cp_accepted},
                               {"mismatches", general.mismatches},
                               {"boundary_excluded", general.boundary_excluded}};
    checks["round_trip"] = {{"samples", round_trip.samples},
                            {"max_residual", round_trip.max_residual},
                            {"max_rotation_error", round_trip.max_rotation_error},
                            {"max_det_error", round_trip.max_det_error},
                            {"failures", round_trip.failures}};
    checks["det_implies_b"] = {{"cp_points", general.cp_accepted},
                               {"min_b", io::clean(general.min_b_on_cp)},
                               {"violations", general.b_violations}};
    checks["double_angle"] = {{"samples", angle.samples},
                              {"max_rotation_error", angle.max_rotation_error},
                              {"max_conjugation_error", angle.max_conjugation_error},
                              {"failures", angle.failures}};
    report["checks"] = std::move(checks);
    print(s.out, report);
    return mismatches == 0 ? kOk : kRejected;
}

}  // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Rebit channel toolkit: complete positivity, canonical forms, classification"};
    app.name(args.empty() ? "rebit" : args.front());
    app.require_subcommand(1);

    std::string path;
    std::string output;

    auto *check = app.add_subcommand("check", "Complete-positivity report");
    check->add_option("file", path, "channel JSON, - for stdin")->required();
    auto *decompose = app.add_subcommand("decompose", "Canonical rotation-diagonal-rotation form");
    decompose->add_option("file", path, "channel JSON, - for stdin")->required();
    auto *classify_cmd = app.add_subcommand("classify", "Channel family and Kraus rank");
    classify_cmd->add_option("file", path, "channel JSON, - for stdin")->required();

    auto *image = app.add_subcommand("image", "Render the Bloch disk image as SVG");
    image->add_option("file", path, "channel JSON, - for stdin")->required();
    image->add_option("-o,--output", output, "SVG path")->required();

    auto *region = app.add_subcommand("region", "Render the admissibility pentagon as SVG");
    region->add_option("-o,--output", output, "SVG path")->required();

    std::size_t count = 1;
    std::uint64_t seed = 0;
    bool unital = false;
    auto *sample = app.add_subcommand("sample", "Random CP channels as JSON lines");
    sample->add_option("--count", count, "number of channels")->check(CLI::PositiveNumber);
    sample->add_option("--seed", seed, "generator seed");
    sample->add_flag("--unital", unital, "zero shift");

    double step = 0.01;
    std::size_t samples = 100000;
    auto *verify = app.add_subcommand("verify", "Closed-form conditions against the eigenvalue oracle");
    verify->add_option("--grid-step", step, "lambda grid step")->check(CLI::Range(0.0, 1.0))->check(CLI::PositiveNumber);
    verify->add_option("--samples", samples, "random samples per sweep")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "generator seed");

    std::vector<const char *> argv;
    argv.reserve(args.size() + 1);
    if (args.empty()) {
        argv.push_back("rebit");
    }
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    const Streams streams{in, out, err};
    try {
        if (*check) {
            return cmd_check(path, streams);
        }
        if (*decompose) {
            return cmd_decompose(path, streams);
        }
        if (*classify_cmd) {
            return cmd_classify(path, streams);
        }
        if (*image) {
            return cmd_image(path, output, streams);
        }
        if (*region) {
            return cmd_region(output);
        }
        if (*sample) {
            return cmd_sample(count, seed, unital, streams);
        }
        if (*verify) {
            return cmd_verify(step, samples, seed, streams);
        }
    } catch (const RebitError &e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace rebit::cli
