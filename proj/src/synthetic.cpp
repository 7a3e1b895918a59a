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

#include "skelwatch/synthetic.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "skelwatch/errors.hpp"

namespace skelwatch {

namespace {

constexpr std::uint8_t kBackgroundLevel = 60;
constexpr std::uint8_t kObjectLevel = 200;

// Silhouette cells are figure-local coordinates; callers translate.
struct Silhouette {
    int width = 0;
    int height = 0;
    std::vector<Point> cells;
};

// Branch lengths are sized to survive the default prune_length of 10:
// the arm stubs are ~11 px from fingertip to shoulder fork and the head
// ~13 px from crown to neck fork.
Silhouette stick_figure() {
    Silhouette s;
    s.width = 28;
    s.height = 78;
    auto bar = [&s](int x0, int x1, int y0, int y1) {
        for (int y = y0; y < y1; ++y)
            for (int x = x0; x < x1; ++x) s.cells.push_back({x, y});
    };
    // Head: disc of radius 4.2 centred at (14, 5).
    for (int y = 0; y <= 10; ++y) {
        for (int x = 9; x <= 19; ++x) {
            const double dx = x - 14.0;
            const double dy = y - 5.0;
            if (dx * dx + dy * dy <= 4.2 * 4.2) s.cells.push_back({x, y});
        }
    }
    bar(12, 16, 9, 45);   // torso
    bar(0, 28, 18, 22);   // arms, full span
    bar(6, 22, 45, 49);   // hips
    bar(6, 10, 48, 78);   // left leg
    bar(18, 22, 48, 78);  // right leg
    return s;
}

Silhouette flat_box() {
    Silhouette s;
    s.width = 40;
    s.height = 12;
    for (int y = 0; y < s.height; ++y)
        for (int x = 0; x < s.width; ++x) s.cells.push_back({x, y});
    return s;
}

void stamp(GrayImage& img, const Silhouette& sil, int ox, int oy) {
    for (const Point& p : sil.cells) {
        const int x = ox + p.x;
        const int y = oy + p.y;
        if (!img.in_bounds(x, y))
            throw SilhouetteOutOfBounds("silhouette pixel outside the frame");
        img(x, y) = kObjectLevel;
    }
}

} // namespace

SyntheticKind synthetic_kind_from_string(const std::string& name) {
    if (name == "right_walk") return SyntheticKind::right_walk;
    if (name == "left_walk") return SyntheticKind::left_walk;
    if (name == "static") return SyntheticKind::static_pose;
    if (name == "non_human") return SyntheticKind::non_human;
    throw ConfigError("unknown synthetic kind: " + name);
}

FrameSequence generate_synthetic(SyntheticKind kind, int n_frames, int step,
                                 int width, int height) {
    if (n_frames < 1) throw ConfigError("synthetic sequence needs >= 1 frame");

    const Silhouette sil =
        kind == SyntheticKind::non_human ? flat_box() : stick_figure();

    int eff_step = step;
    if (kind == SyntheticKind::right_walk) eff_step = std::abs(step);
    if (kind == SyntheticKind::left_walk) eff_step = -std::abs(step);
    if (kind == SyntheticKind::static_pose) eff_step = 0;

    const int travel = (n_frames - 1) * eff_step;
    const int base_x = (width - sil.width - travel) / 2;
    const int base_y = (height - sil.height) / 2;
    if (base_y < 0)
        throw SilhouetteOutOfBounds("frame too short for the silhouette");

    FrameSequence seq{GrayImage(width, height, kBackgroundLevel), {}, 10};
    for (int k = 0; k < n_frames; ++k) {
        GrayImage frame(width, height, kBackgroundLevel);
        stamp(frame, sil, base_x + k * eff_step, base_y);
        seq.frames.push_back(std::move(frame));
    }
    return seq;
}

void write_sequence(const FrameSequence& seq, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(fs::path(dir) / "frames");
    write_gray(seq.background, (fs::path(dir) / "background.pgm").string());
    for (std::size_t k = 0; k < seq.frames.size(); ++k) {
        std::ostringstream name;
        name << "frame_";
        name.width(3);
        name.fill('0');
        name << k;
        name << ".pgm";
        write_gray(seq.frames[k],
                   (fs::path(dir) / "frames" / name.str()).string());
    }
}

} // namespace skelwatch
