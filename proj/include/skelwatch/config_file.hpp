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

#ifndef SKELWATCH_CONFIG_FILE_HPP
#define SKELWATCH_CONFIG_FILE_HPP

#include <string>

#include "skelwatch/classifier.hpp"
#include "skelwatch/gate.hpp"
#include "skelwatch/skeletonize.hpp"
#include "skelwatch/tracker.hpp"

namespace skelwatch {

/// The tunable knobs of every pipeline stage, under the same names the
/// config file uses.
struct Tuning {
    GateConfig gate;
    SkeletonConfig skeleton;
    ClassifierConfig classifier;
    TrackerConfig tracker;
};

/// Applies a flat key=value file onto the given defaults. Blank lines and
/// #-comment lines are skipped; keys are the config field names
/// (correlation_threshold, pixel_delta_threshold, min_blob_area,
/// prune_length, max_thinning_passes, ratio_min, ratio_max, fork_min,
/// fork_max, ratio_weight, fork_weight, human_threshold,
/// movement_threshold, first_frame_by_count). An unknown key, an
/// unparsable value, or a value violating a field invariant throws
/// ConfigError with the offending line number.
Tuning apply_config_file(const std::string& path, Tuning base);

/// Checks cross-field invariants (ratio_min < ratio_max, fork_min <=
/// fork_max, weights >= 0, movement_threshold > 0, area/length >= 0).
/// Throws ConfigError.
void validate(const Tuning& tuning);

} // namespace skelwatch

#endif // SKELWATCH_CONFIG_FILE_HPP
