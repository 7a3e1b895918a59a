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

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "skelwatch/config_file.hpp"
#include "skelwatch/errors.hpp"
#include "skelwatch/frame_io.hpp"
#include "skelwatch/pipeline.hpp"
#include "skelwatch/synthetic.hpp"

namespace {

// "640x480" -> (640, 480)
std::pair<int, int> parse_size(const std::string& text) {
    int w = 0, h = 0;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%dx%d%c", &w, &h, &tail) != 2 || w < 1 || h < 1)
        throw skelwatch::ConfigError("bad --size, expected WxH: " + text);
    return {w, h};
}

int cmd_run(const std::string& background, const std::string& frames_dir,
            const std::string& csv_path, const std::string& alerts_path,
            const std::string& config_path, const std::string& dump_dir) {
    skelwatch::PipelineConfig cfg;
    if (!config_path.empty())
        cfg.tuning = skelwatch::apply_config_file(config_path, cfg.tuning);
    cfg.csv_path = csv_path;
    cfg.alerts_path = alerts_path;
    if (!dump_dir.empty()) cfg.dump_dir = dump_dir;

    const auto sequence = skelwatch::load_sequence(background, frames_dir);
    const auto reports = skelwatch::run(sequence, cfg);

    int alarms = 0;
    for (const auto& r : reports) {
        if (!r.direction) continue;
        if (*r.direction == skelwatch::Direction::LEFT ||
            *r.direction == skelwatch::Direction::RIGHT) {
            ++alarms;
            std::cout << "ALARM frame=" << r.frame_no
                      << " direction=" << skelwatch::to_string(*r.direction) << "\n";
        }
    }
    std::cout << reports.size() << " frames processed, " << alarms
              << " alarms; report: " << csv_path << "\n";
    return 0;
}

int cmd_synth(const std::string& kind, int n_frames, int step,
              const std::string& size, const std::string& out_dir) {
    const auto [w, h] = parse_size(size);
    const auto seq = skelwatch::generate_synthetic(
        skelwatch::synthetic_kind_from_string(kind), n_frames, step, w, h);
    skelwatch::write_sequence(seq, out_dir);
    std::cout << "wrote background + " << seq.frames.size() << " frames under "
              << out_dir << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Detects people in fixed-camera frame sequences and raises "
                 "LEFT/RIGHT alarms when they move sideways"};
    app.require_subcommand(1);

    std::string background, frames_dir, csv_path, alerts_path, config_path, dump_dir;
    auto* run_cmd = app.add_subcommand("run", "Analyze a frame sequence");
    run_cmd->add_option("--background", background, "Background PGM")->required();
    run_cmd->add_option("--frames", frames_dir, "Directory of frame PGMs")->required();
    run_cmd->add_option("--out", csv_path, "Per-frame CSV report path")->required();
    run_cmd->add_option("--alerts", alerts_path, "Alert log path")->required();
    run_cmd->add_option("--config", config_path, "key=value tuning file");
    run_cmd->add_option("--dump-intermediates", dump_dir,
                        "Directory for per-stage debug masks");

    std::string kind = "right_walk", size = "320x240", out_dir;
    int n_frames = 4, step = 8;
    auto* synth_cmd = app.add_subcommand("synth", "Generate a test sequence");
    synth_cmd->add_option("--kind", kind,
                          "right_walk | left_walk | static | non_human");
    synth_cmd->add_option("--frames", n_frames, "Number of frames")
        ->check(CLI::PositiveNumber);
    synth_cmd->add_option("--step", step, "Horizontal shift per frame, pixels");
    synth_cmd->add_option("--size", size, "Frame dimensions WxH");
    synth_cmd->add_option("--out", out_dir, "Output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed())
            return cmd_run(background, frames_dir, csv_path, alerts_path,
                           config_path, dump_dir);
        return cmd_synth(kind, n_frames, step, size, out_dir);
    } catch (const skelwatch::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
