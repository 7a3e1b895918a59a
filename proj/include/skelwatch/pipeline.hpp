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

#ifndef SKELWATCH_PIPELINE_HPP
#define SKELWATCH_PIPELINE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skelwatch/config_file.hpp"
#include "skelwatch/frame_io.hpp"
#include "skelwatch/tracker.hpp"

namespace skelwatch {

/// One CSV row. A field is absent exactly when the stage producing it was
/// skipped: gate closed leaves everything beyond `changed` empty; a change
/// with no sufficiently large blob leaves score and cg empty; a non-human
/// score leaves the cg/tracker fields empty (the tracker is not updated).
struct FrameReport {
    int frame_no = 0;  // 1-based
    bool changed = false;
    std::optional<double> final_score;
    std::optional<double> cgx;
    std::optional<double> cgy;
    std::optional<double> cgx_prev;
    std::optional<double> cgx_new;
    std::optional<double> cgx_diff;  // absent on the first tracked frame
    std::optional<Direction> direction;
};

struct PipelineConfig {
    Tuning tuning;
    std::string csv_path;     // empty = don't write
    std::string alerts_path;  // empty = don't write
    std::optional<std::string> dump_dir;  // per-stage masks for debugging
};

/// Intermediate rasters of one frame, populated as far as the stages ran.
struct FrameArtifacts {
    std::optional<BinaryImage> diff;
    std::optional<BinaryImage> blob;
    std::optional<BinaryImage> skeleton;
};

/// Runs gate -> largest component -> thin+prune -> point classification ->
/// score -> (if human) centre of gravity -> tracker update for one frame.
/// The returned state is unchanged unless the frame was classified human.
std::pair<TrackerState, FrameReport> process_frame(const GrayImage& background,
                                                   const GrayImage& frame,
                                                   int frame_no,
                                                   const TrackerState& state,
                                                   const PipelineConfig& cfg,
                                                   FrameArtifacts* artifacts = nullptr);

/// Processes every frame in order through a single tracker, then writes the
/// CSV and alert log (when paths are set). A frame that throws is reported
/// on stderr with its index and skipped; later frames still run.
std::vector<FrameReport> run(const FrameSequence& sequence, const PipelineConfig& cfg);

/// CSV serialization: one "# nominal_fps=N" comment line, one header line
/// (frame_no,changed,final_score,cgx,cgy,cgx_prev,cgx_new,cgx_diff,direction),
/// then one row per report. Numbers are fixed 4-decimal, booleans
/// true/false, absent fields empty — except a tracked first frame, whose
/// cgx_diff renders as the literal NIL.
std::string render_csv(const std::vector<FrameReport>& reports, int nominal_fps);

/// One line per LEFT/RIGHT report: frame=<n> direction=<d> cgx_diff=<value>.
std::string render_alerts(const std::vector<FrameReport>& reports);

} // namespace skelwatch

#endif // SKELWATCH_PIPELINE_HPP
