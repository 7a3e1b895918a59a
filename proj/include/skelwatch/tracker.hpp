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

#ifndef SKELWATCH_TRACKER_HPP
#define SKELWATCH_TRACKER_HPP

#include <optional>
#include <utility>

#include "skelwatch/features.hpp"
#include "skelwatch/image.hpp"

namespace skelwatch {

enum class Direction { FIRST_FRAME, NONE, LEFT, RIGHT };

const char* to_string(Direction d);

/// Two-cell FIFO of the most recent horizontal centre-of-gravity values,
/// cgx_prev being the older entry. Both cells start at 0, and by default a
/// cgx_prev of exactly 0 marks "no previous frame". A genuine cgx of 0.0
/// (skeleton hugging the left edge) would alias with the sentinel;
/// TrackerConfig::first_frame_by_count opts into using frames_seen instead.
struct TrackerState {
    double cgx_prev = 0.0;
    double cgx_curr = 0.0;
    long long frames_seen = 0;
};

struct TrackerConfig {
    double movement_threshold = 5.0;  // |shift| must strictly exceed this
    bool first_frame_by_count = false;
};

struct MovementEvent {
    Direction direction = Direction::NONE;
    double cgx_prev = 0.0;               // FIFO value before this update
    double cgx_new = 0.0;                // cg of the current frame
    std::optional<double> cgx_diff;      // cgx_new - cgx_prev; absent on FIRST_FRAME
    Point2D cg;                          // full centre of gravity of the frame
};

/// Mean position over endpoints, fork points, and branch points — which by
/// the partition invariant is the mean over every skeleton pixel.
/// Throws EmptySkeleton.
Point2D centre_of_gravity(const SkeletonFeatures& features);

/// Pushes cgx through the FIFO and compares it with the evicted value.
/// Shift > threshold is RIGHT, < -threshold is LEFT; a shift of exactly
/// +/-threshold is NONE (strict inequalities). cgy rides along into the
/// event payload and never affects the direction. Throws NonFiniteInput.
std::pair<TrackerState, MovementEvent> update(const TrackerState& state,
                                              double cgx, double cgy,
                                              const TrackerConfig& cfg);

} // namespace skelwatch

#endif // SKELWATCH_TRACKER_HPP
