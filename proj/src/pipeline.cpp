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

#include "skelwatch/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "skelwatch/classifier.hpp"
#include "skelwatch/errors.hpp"
#include "skelwatch/features.hpp"
#include "skelwatch/gate.hpp"
#include "skelwatch/skeletonize.hpp"

namespace skelwatch {

namespace {

std::string fixed4(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(4) << v;
    return os.str();
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open for writing: " + path);
    out << content;
    if (!out) throw IoFailure("write failed: " + path);
}

void dump_mask(const std::string& dir, const char* stage, int frame_no,
               const BinaryImage& mask) {
    std::ostringstream name;
    name << stage << "_";
    name.width(3);
    name.fill('0');
    name << frame_no;
    name << ".pgm";
    write_binary(mask, (std::filesystem::path(dir) / name.str()).string());
}

} // namespace

std::pair<TrackerState, FrameReport> process_frame(const GrayImage& background,
                                                   const GrayImage& frame,
                                                   int frame_no,
                                                   const TrackerState& state,
                                                   const PipelineConfig& cfg,
                                                   FrameArtifacts* artifacts) {
    FrameReport report;
    report.frame_no = frame_no;

    auto diff = gate(background, frame, cfg.tuning.gate);
    if (!diff) return {state, report};  // scene unchanged
    report.changed = true;
    if (artifacts) artifacts->diff = *diff;

    auto blob = largest_component(*diff, cfg.tuning.skeleton);
    if (!blob) return {state, report};  // change too small to analyze
    if (artifacts) artifacts->blob = *blob;

    const Box bbox = bounding_box(*blob);
    const BinaryImage skeleton =
        prune(thin(*blob, cfg.tuning.skeleton.max_thinning_passes), cfg.tuning.skeleton);
    if (artifacts) artifacts->skeleton = skeleton;

    const SkeletonFeatures features = classify_points(skeleton, bbox);
    const Verdict verdict = score(features, cfg.tuning.classifier);
    report.final_score = verdict.final_score;
    if (!verdict.is_human) return {state, report};  // tracker untouched

    const Point2D cg = centre_of_gravity(features);
    auto [next, event] = update(state, cg.x, cg.y, cfg.tuning.tracker);
    report.cgx = cg.x;
    report.cgy = cg.y;
    report.cgx_prev = event.cgx_prev;
    report.cgx_new = event.cgx_new;
    report.cgx_diff = event.cgx_diff;
    report.direction = event.direction;
    return {next, report};
}

std::vector<FrameReport> run(const FrameSequence& sequence, const PipelineConfig& cfg) {
    std::vector<FrameReport> reports;
    TrackerState state;
    for (std::size_t i = 0; i < sequence.frames.size(); ++i) {
        const int frame_no = static_cast<int>(i) + 1;
        FrameArtifacts artifacts;
        try {
            auto [next, report] =
                process_frame(sequence.background, sequence.frames[i], frame_no,
                              state, cfg, cfg.dump_dir ? &artifacts : nullptr);
            state = next;
            reports.push_back(report);
        } catch (const Error& e) {
            std::cerr << "frame " << frame_no << ": " << e.what() << "\n";
            continue;
        }
        if (cfg.dump_dir) {
            std::filesystem::create_directories(*cfg.dump_dir);
            if (artifacts.diff) dump_mask(*cfg.dump_dir, "diff", frame_no, *artifacts.diff);
            if (artifacts.blob) dump_mask(*cfg.dump_dir, "blob", frame_no, *artifacts.blob);
            if (artifacts.skeleton)
                dump_mask(*cfg.dump_dir, "skeleton", frame_no, *artifacts.skeleton);
        }
    }
    if (!cfg.csv_path.empty())
        write_text(cfg.csv_path, render_csv(reports, sequence.nominal_fps));
    if (!cfg.alerts_path.empty())
        write_text(cfg.alerts_path, render_alerts(reports));
    return reports;
}

std::string render_csv(const std::vector<FrameReport>& reports, int nominal_fps) {
    std::ostringstream os;
    os << "# nominal_fps=" << nominal_fps << "\n";
    os << "frame_no,changed,final_score,cgx,cgy,cgx_prev,cgx_new,cgx_diff,direction\n";
    for (const FrameReport& r : reports) {
        os << r.frame_no << ',' << (r.changed ? "true" : "false") << ',';
        if (r.final_score) os << fixed4(*r.final_score);
        os << ',';
        if (r.cgx) os << fixed4(*r.cgx);
        os << ',';
        if (r.cgy) os << fixed4(*r.cgy);
        os << ',';
        if (r.cgx_prev) os << fixed4(*r.cgx_prev);
        os << ',';
        if (r.cgx_new) os << fixed4(*r.cgx_new);
        os << ',';
        if (r.cgx_diff) {
            os << fixed4(*r.cgx_diff);
        } else if (r.direction && *r.direction == Direction::FIRST_FRAME) {
            os << "NIL";
        }
        os << ',';
        if (r.direction) os << to_string(*r.direction);
        os << '\n';
    }
    return os.str();
}

std::string render_alerts(const std::vector<FrameReport>& reports) {
    std::ostringstream os;
    for (const FrameReport& r : reports) {
        if (!r.direction) continue;
        if (*r.direction != Direction::LEFT && *r.direction != Direction::RIGHT)
            continue;
        os << "frame=" << r.frame_no << " direction=" << to_string(*r.direction)
           << " cgx_diff=" << fixed4(r.cgx_diff.value_or(0.0)) << "\n";
    }
    return os.str();
}

} // namespace skelwatch
