// Copyright 2026 The skelwatch authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "skelwatch/config_file.hpp"

#include <cstddef>
#include <fstream>
#include <stdexcept>
#include <string>

#include "skelwatch/errors.hpp"

namespace skelwatch {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(const std::string& path, int line_no, const std::string& what) {
    throw ConfigError(path + ":" + std::to_string(line_no) + ": " + what);
}

double parse_double(const std::string& path, int line_no, const std::string& v) {
    std::size_t pos = 0;
    double out = 0.0;
    try {
        out = std::stod(v, &pos);
    } catch (const std::exception&) {
        fail(path, line_no, "expected a number, got '" + v + "'");
    }
    if (pos != v.size()) fail(path, line_no, "trailing junk in number '" + v + "'");
    return out;
}

int parse_int(const std::string& path, int line_no, const std::string& v) {
    std::size_t pos = 0;
    int out = 0;
    try {
        out = std::stoi(v, &pos);
    } catch (const std::exception&) {
        fail(path, line_no, "expected an integer, got '" + v + "'");
    }
    if (pos != v.size()) fail(path, line_no, "trailing junk in integer '" + v + "'");
    return out;
}

bool parse_bool(const std::string& path, int line_no, const std::string& v) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    fail(path, line_no, "expected true/false, got '" + v + "'");
}

} // namespace

Tuning apply_config_file(const std::string& path, Tuning base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;

        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            fail(path, line_no, "expected key=value, got '" + stripped + "'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) fail(path, line_no, "empty key");
        if (value.empty()) fail(path, line_no, "empty value for key '" + key + "'");

        if (key == "correlation_threshold") {
            base.gate.correlation_threshold = parse_double(path, line_no, value);
        } else if (key == "pixel_delta_threshold") {
            base.gate.pixel_delta_threshold = parse_int(path, line_no, value);
        } else if (key == "min_blob_area") {
            base.skeleton.min_blob_area = parse_int(path, line_no, value);
        } else if (key == "prune_length") {
            base.skeleton.prune_length = parse_int(path, line_no, value);
        } else if (key == "max_thinning_passes") {
            base.skeleton.max_thinning_passes = parse_int(path, line_no, value);
        } else if (key == "ratio_min") {
            base.classifier.ratio_min = parse_double(path, line_no, value);
        } else if (key == "ratio_max") {
            base.classifier.ratio_max = parse_double(path, line_no, value);
        } else if (key == "fork_min") {
            base.classifier.fork_min = parse_int(path, line_no, value);
        } else if (key == "fork_max") {
            base.classifier.fork_max = parse_int(path, line_no, value);
        } else if (key == "ratio_weight") {
            base.classifier.ratio_weight = parse_double(path, line_no, value);
        } else if (key == "fork_weight") {
            base.classifier.fork_weight = parse_double(path, line_no, value);
        } else if (key == "human_threshold") {
            base.classifier.human_threshold = parse_double(path, line_no, value);
        } else if (key == "movement_threshold") {
            base.tracker.movement_threshold = parse_double(path, line_no, value);
        } else if (key == "first_frame_by_count") {
            base.tracker.first_frame_by_count = parse_bool(path, line_no, value);
        } else {
            fail(path, line_no, "unknown key '" + key + "'");
        }
    }
    validate(base);
    return base;
}

void validate(const Tuning& t) {
    if (t.gate.pixel_delta_threshold < 0)
        throw ConfigError("pixel_delta_threshold must be >= 0");
    if (t.skeleton.min_blob_area < 1)
        throw ConfigError("min_blob_area must be >= 1");
    if (t.skeleton.prune_length < 0)
        throw ConfigError("prune_length must be >= 0");
    if (t.skeleton.max_thinning_passes < 0)
        throw ConfigError("max_thinning_passes must be >= 0");
    if (!(t.classifier.ratio_min < t.classifier.ratio_max))
        throw ConfigError("ratio_min must be < ratio_max");
    if (t.classifier.fork_min > t.classifier.fork_max)
        throw ConfigError("fork_min must be <= fork_max");
    if (t.classifier.ratio_weight < 0 || t.classifier.fork_weight < 0)
        throw ConfigError("weights must be >= 0");
    if (!(t.tracker.movement_threshold > 0))
        throw ConfigError("movement_threshold must be > 0");
}

} // namespace skelwatch
